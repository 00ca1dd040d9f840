#pragma once

#include <map>
#include <string>
#include <utility>

#include "freepairs/cyclic.hpp"
#include "freepairs/ratfunc.hpp"

namespace freepairs {

/**
 * Element of the first Weyl algebra Q<s, t : st - ts = 1> in normal form:
 * a finite sum of monomials c * t^m * s^n with every t-factor on the left.
 * Zero coefficients are dropped, so representations are unique.
 */
class WeylElem {
public:
    using Key = std::pair<int, int>; // (t-degree, s-degree)

    WeylElem() = default;
    static WeylElem zero() { return WeylElem(); }
    static WeylElem one() { return monomial(0, 0); }
    static WeylElem s() { return monomial(0, 1); }
    static WeylElem t() { return monomial(1, 0); }
    static WeylElem monomial(int m, int n, const Rat& c = 1);

    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_t_degree() const; // -1 when zero
    int max_s_degree() const; // -1 when zero

    WeylElem operator+(const WeylElem& o) const;
    WeylElem operator-(const WeylElem& o) const;
    WeylElem operator*(const WeylElem& o) const;
    WeylElem operator*(const Rat& c) const;
    WeylElem operator-() const;
    WeylElem pow(int e) const; // e >= 0

    bool operator==(const WeylElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const WeylElem& o) const { return !(*this == o); }

    std::string str() const;

private:
    void add_term(int m, int n, const Rat& c);
    std::map<Key, Rat> terms_;
};

/**
 * Linear involution data on the Weyl algebra: s* = alpha s + beta t and
 * t* = gamma s - alpha t.  The map extends to an involution exactly when
 * alpha^2 + beta gamma = 1.
 */
struct WeylInvolutionSpec {
    Rat alpha, beta, gamma;

    /** s* = t, t* = s. */
    static WeylInvolutionSpec swap() { return {0, 1, 1}; }
    /** s* = s, t* = -t. */
    static WeylInvolutionSpec sign() { return {1, 0, 0}; }
};

/**
 * The anti-automorphism of order two determined by the spec, applied to u:
 * each monomial t^m s^n maps to (s*)^n (t*)^m.
 * Errors: INVALID_SPEC when alpha^2 + beta gamma != 1.
 */
WeylElem weyl_involution(const WeylInvolutionSpec& spec, const WeylElem& u);

/**
 * Element of the skew-Laurent ring Q(X)[Y, Y^-1] with the commutation rule
 * f(X) Y = Y f(X+1), stored as a finite sum of Y^n f_n(X) with the Y-power
 * on the left.  The Weyl algebra embeds here via s -> Y^-1 X, t -> Y.
 */
class SkewLaurentElem {
public:
    SkewLaurentElem() = default;
    static SkewLaurentElem zero() { return SkewLaurentElem(); }
    static SkewLaurentElem one();
    static SkewLaurentElem x();
    static SkewLaurentElem y(int e = 1);
    static SkewLaurentElem term(int ypow, const RatFunc& f);

    const std::map<int, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /** Coefficient of Y^n (zero when absent). */
    RatFunc coeff(int n) const;

    SkewLaurentElem operator+(const SkewLaurentElem& o) const;
    SkewLaurentElem operator-(const SkewLaurentElem& o) const;
    SkewLaurentElem operator*(const SkewLaurentElem& o) const;
    SkewLaurentElem operator-() const;
    SkewLaurentElem pow(int e) const; // e >= 0

    bool operator==(const SkewLaurentElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const SkewLaurentElem& o) const { return !(*this == o); }

    std::string str() const;

private:
    void add_term(int ypow, const RatFunc& f);
    std::map<int, RatFunc> terms_;
};

/** The injective homomorphism s -> Y^-1 X, t -> Y into the skew-Laurent ring. */
SkewLaurentElem weyl_to_skew(const WeylElem& u);

/**
 * The specialization into the degree-3 cyclic algebra over GF(3)(a, b):
 * coefficients reduce mod 3 and s -> j^-1 i, t -> j.  The descriptor must
 * come from make_cyc_descriptor over GF(3).
 * Errors: NOT_3_INTEGRAL when a coefficient denominator is divisible by 3.
 */
CycElem weyl_to_cyclic(const ExtDescPtr& ki, const WeylElem& u);

/**
 * Action of u on a univariate polynomial in X, where s acts as d/dX and t as
 * multiplication by X.  This action is faithful, which makes it an
 * independent check on the normal-form product.
 * Errors: DEGREE_OVERFLOW when deg f plus the t-degree of u reaches bound.
 */
MultiPoly weyl_action(const WeylElem& u, const MultiPoly& f, int bound);

std::ostream& operator<<(std::ostream& os, const WeylElem& u);
std::ostream& operator<<(std::ostream& os, const SkewLaurentElem& u);

} // namespace freepairs
