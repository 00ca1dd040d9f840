#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>

#include "freepairs/errors.hpp"

namespace freepairs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/**
 * Coefficient domain for all polynomial arithmetic: either the rationals or a
 * prime field GF(p) with p odd.  Value type, compared structurally.
 */
class BaseField {
public:
    static BaseField rationals() { return BaseField(Kind::rationals, 0); }
    static BaseField prime(const Int& p);
    static BaseField gf3() { return prime(3); }

    bool is_rationals() const { return kind_ == Kind::rationals; }
    bool is_prime() const { return kind_ == Kind::prime; }
    const Int& characteristic() const { return p_; } // 0 for the rationals

    bool operator==(const BaseField& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const BaseField& o) const { return !(*this == o); }

    std::string str() const;

private:
    enum class Kind { rationals, prime };
    BaseField(Kind k, Int p) : kind_(k), p_(std::move(p)) {}
    Kind kind_;
    Int p_; // 0 when rationals
};

/**
 * Element of a BaseField.  Exact; no floating point anywhere.  For GF(p) the
 * value is kept reduced to the canonical representative in [0, p).
 */
class Scalar {
public:
    Scalar() : field_(BaseField::rationals()), v_(0) {}
    Scalar(BaseField f, const Rat& value);
    static Scalar zero(const BaseField& f) { return Scalar(f, 0); }
    static Scalar one(const BaseField& f) { return Scalar(f, 1); }
    static Scalar from_int(const BaseField& f, const Int& n) { return Scalar(f, Rat(n)); }

    const BaseField& field() const { return field_; }
    const Rat& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const { return field_ == o.field_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Arbitrary total order (for canonical container keys), not a field order.
    bool operator<(const Scalar& o) const { return v_ < o.v_; }

    std::string str() const;

private:
    void reduce();
    void check_same(const Scalar& o) const;
    BaseField field_;
    Rat v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace freepairs
