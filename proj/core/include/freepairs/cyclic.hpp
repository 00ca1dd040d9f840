#pragma once

#include <array>

#include "freepairs/matrix.hpp"

namespace freepairs {

/**
 * Degree-three cyclic algebra in characteristic three: over the field K
 * obtained by adjoining i with i^3 = i + a, a second generator j satisfies
 * j^3 = b and i j = j (i + 1).  Elements are stored as c0 + c1 j + c2 j^2
 * with left coefficients in K.
 */
ExtDescPtr make_cyc_descriptor(const BaseField& f);

/** The automorphism f(i) -> f(i - q) of K generating the Galois group. */
ExtElem cyc_sigma(const ExtElem& c, int q);

class CycElem {
public:
    CycElem(ExtDescPtr ki, std::array<ExtElem, 3> coords);

    static CycElem zero(const ExtDescPtr& ki);
    static CycElem one(const ExtDescPtr& ki);
    /** Embed an element of K as a degree-zero element. */
    static CycElem from_ext(const ExtElem& c);
    static CycElem gen_i(const ExtDescPtr& ki);
    static CycElem gen_j(const ExtDescPtr& ki);

    const ExtDescPtr& descriptor() const { return ki_; }
    /** Left coefficient of j^q for q = 0, 1, 2. */
    const ExtElem& coord(int q) const { return c_.at(static_cast<size_t>(q)); }

    bool is_zero() const;
    bool is_one() const;
    /** True for elements of the center, the rational functions in a and b. */
    bool is_central() const;

    CycElem operator+(const CycElem& o) const;
    CycElem operator-(const CycElem& o) const;
    CycElem operator*(const CycElem& o) const;
    CycElem operator*(const ExtElem& s) const; // left multiplication by s in K
    CycElem operator*(const RatFunc& s) const;
    CycElem operator-() const;
    bool operator==(const CycElem& o) const;
    bool operator!=(const CycElem& o) const { return !(*this == o); }

    CycElem inv() const; // errors: NOT_INVERTIBLE
    CycElem pow(long e) const;

    std::string str() const;

private:
    void check_same(const CycElem& o) const;
    ExtDescPtr ki_;
    std::array<ExtElem, 3> c_;
};

/**
 * Left regular representation on the K-basis {1, j, j^2}: row p holds the
 * coordinates of (basis_p times x).  The map is multiplicative and its
 * determinant is the reduced norm, a central element.
 */
SqMatrix cyc_reg_rep(const CycElem& x);

/** Cayley transform (1 - r)(1 + r)^-1; errors: NOT_INVERTIBLE when 1 + r is singular. */
CycElem cayley(const CycElem& r);

/**
 * An involution (anti-automorphism of order two) of the cyclic algebra,
 * described by the images of i and j and of the central variables a and b.
 */
class CycInvolution {
public:
    const CycElem& i_image() const { return i_star_; }
    const CycElem& j_image() const { return j_star_; }
    RatFunc center(const RatFunc& c) const;
    CycElem operator()(const CycElem& x) const;

private:
    friend CycInvolution make_cyc_involution(CycElem, CycElem, RatFunc, RatFunc);
    CycInvolution(CycElem i_star, CycElem j_star, RatFunc sigma_a, RatFunc sigma_b);
    CycElem i_star_, j_star_;
    RatFunc sigma_a_, sigma_b_;
};

/**
 * Validate and build an involution of the cyclic algebra.  Errors follow
 * make_quat_involution: INVALID_SPEC for broken relations, NOT_ORDER_TWO when
 * the square is not the identity.
 */
CycInvolution make_cyc_involution(CycElem i_star, CycElem j_star, RatFunc sigma_a,
                                  RatFunc sigma_b);

inline bool is_symmetric(const CycInvolution& inv, const CycElem& x) { return inv(x) == x; }
inline bool is_unitary(const CycInvolution& inv, const CycElem& x) {
    return (inv(x) * x).is_one();
}

std::ostream& operator<<(std::ostream& os, const CycElem& x);

} // namespace freepairs
