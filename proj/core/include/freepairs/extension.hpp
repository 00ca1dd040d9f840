#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "freepairs/ratfunc.hpp"

namespace freepairs {

/**
 * A simple algebraic extension of a rational function field: the base field
 * is BaseField(vars...) and `gen` is adjoined with the given monic minimal
 * polynomial (coefficient list c[0..d], c[d] = 1, none involving `gen`).
 * Degree 1 descriptors identify the generator with the root -c[0]; they are
 * used for residue fields whose generator image is already rational.
 */
class ExtDescriptor {
public:
    ExtDescriptor(BaseField field, std::vector<std::string> vars, std::string gen,
                  std::vector<RatFunc> minpoly);

    const BaseField& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& gen() const { return gen_; }
    const std::vector<RatFunc>& minpoly() const { return minpoly_; }
    int degree() const { return static_cast<int>(minpoly_.size()) - 1; }

    bool operator==(const ExtDescriptor& o) const;
    bool operator!=(const ExtDescriptor& o) const { return !(*this == o); }

    /** Minimal polynomial rendered in the generator, e.g. "i^2-a". */
    std::string minpoly_str() const;
    std::string str() const;

private:
    BaseField field_;
    std::vector<std::string> vars_;
    std::string gen_;
    std::vector<RatFunc> minpoly_;
};

using ExtDescPtr = std::shared_ptr<const ExtDescriptor>;

ExtDescPtr make_ext_descriptor(const BaseField& field, std::vector<std::string> vars,
                               std::string gen, std::vector<RatFunc> minpoly);

/**
 * Element of the extension described by its descriptor, stored as the
 * coefficient vector of 1, gen, ..., gen^(d-1).
 */
class ExtElem {
public:
    ExtElem(ExtDescPtr desc, std::vector<RatFunc> coeffs);

    static ExtElem zero(const ExtDescPtr& d);
    static ExtElem one(const ExtDescPtr& d);
    static ExtElem constant(const ExtDescPtr& d, const RatFunc& c);
    static ExtElem from_int(const ExtDescPtr& d, long n);
    static ExtElem generator(const ExtDescPtr& d);

    const ExtDescPtr& descriptor() const { return desc_; }
    const BaseField& field() const { return desc_->field(); }
    /** Coefficient of gen^k. */
    const RatFunc& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
    const std::vector<RatFunc>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    /** True when every coefficient is a polynomial (denominator 1). */
    bool is_integral() const;

    ExtElem operator+(const ExtElem& o) const;
    ExtElem operator-(const ExtElem& o) const;
    ExtElem operator*(const ExtElem& o) const;
    ExtElem operator*(const RatFunc& s) const;
    ExtElem operator/(const ExtElem& o) const;
    ExtElem operator-() const;
    ExtElem inv() const; // errors: DIVISION_BY_ZERO
    ExtElem pow(long e) const; // negative exponents via inv()

    bool operator==(const ExtElem& o) const;
    bool operator!=(const ExtElem& o) const { return !(*this == o); }

    /** Evaluate the coefficient polynomial at another element of the same extension. */
    ExtElem subst_gen(const ExtElem& image) const;
    /** Apply a base-field map to every coefficient (used by semilinear maps). */
    ExtElem map_coeffs(const std::function<RatFunc(const RatFunc&)>& f) const;

    /** Field norm down to the base: determinant of the multiplication matrix. */
    RatFunc norm() const;
    /** Trace down to the base. */
    RatFunc trace() const;

    /**
     * Write the element as (sum of polynomial coefficients) / (common monic
     * denominator): first = numerator coefficient of gen^k, second = the
     * denominator shared by all of them.
     */
    std::pair<std::vector<MultiPoly>, MultiPoly> integral_split() const;

    std::string str() const;

private:
    void check_same(const ExtElem& o) const;
    static std::vector<RatFunc> reduce_poly(const ExtDescPtr& d, std::vector<RatFunc> raw);

    ExtDescPtr desc_;
    std::vector<RatFunc> c_;
};

/**
 * Monic minimal polynomial of x over the base field, found by the first
 * linear dependence among 1, x, x^2, ...; returned as the coefficient list
 * c[0..m] with c[m] = 1.
 */
std::vector<RatFunc> min_poly_of(const ExtElem& x);

/** Render a coefficient list as a polynomial in `var`, e.g. "t^3-2*t^2+2*t-1-a^2". */
std::string poly_coeffs_str(const std::vector<RatFunc>& coeffs, const std::string& var);

std::ostream& operator<<(std::ostream& os, const ExtElem& x);

} // namespace freepairs
