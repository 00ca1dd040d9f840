#pragma once

#include <map>
#include <string>

#include "freepairs/multipoly.hpp"

namespace freepairs {

/**
 * Rational function num/den in reduced canonical form: gcd(num, den) = 1 and
 * den monic under the canonical term order.  Equality of representations
 * coincides with equality of the functions.
 */
class RatFunc {
public:
    RatFunc() : num_(BaseField::rationals()), den_(MultiPoly::constant(BaseField::rationals(), 1)) {}
    explicit RatFunc(MultiPoly num);
    RatFunc(MultiPoly num, MultiPoly den);
    static RatFunc zero(const BaseField& f) { return RatFunc(MultiPoly::zero(f)); }
    static RatFunc one(const BaseField& f) { return RatFunc(MultiPoly::constant(f, 1)); }
    static RatFunc constant(const BaseField& f, const Rat& c) { return RatFunc(MultiPoly::constant(f, c)); }
    static RatFunc variable(const BaseField& f, const std::string& name) {
        return RatFunc(MultiPoly::variable(f, name));
    }

    const BaseField& field() const { return num_.field(); }
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc inv() const;
    RatFunc pow(long e) const; // negative exponents allowed

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    bool operator<(const RatFunc& o) const {
        if (!(num_ == o.num_)) return num_ < o.num_;
        return den_ < o.den_;
    }

    /** Substitute rational functions for (some) variables. */
    RatFunc subst(const std::map<std::string, RatFunc>& images) const;
    /** Shift one variable by an integer constant, e.g. X -> X + n. */
    RatFunc shift_var(const std::string& var, const Rat& offset) const;

    std::string str() const;

private:
    /** Trusted constructor for parts already known coprime with monic-normalizable den. */
    static RatFunc from_reduced(MultiPoly num, MultiPoly den);
    void reduce();
    MultiPoly num_, den_;
};

/** Evaluate a polynomial with rational-function images for its variables. */
RatFunc poly_subst(const MultiPoly& p, const std::map<std::string, RatFunc>& images);

namespace detail {
/** Shared "(num)/(den)" rendering with the canonical parenthesization rules. */
std::string fraction_str(const MultiPoly& num, const MultiPoly& den);
} // namespace detail

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

} // namespace freepairs
