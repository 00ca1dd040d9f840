#pragma once

#include <array>

#include "freepairs/matrix.hpp"

namespace freepairs {

/**
 * Quaternion algebra over the rational function field in a and b:
 * basis (1, i, j, ij) with i^2 = a, j^2 = b, ij = -ji.
 */
class QuatElem {
public:
    explicit QuatElem(const BaseField& f);
    QuatElem(const BaseField& f, std::array<RatFunc, 4> coords);

    static QuatElem zero(const BaseField& f) { return QuatElem(f); }
    static QuatElem one(const BaseField& f);
    static QuatElem constant(const RatFunc& c);
    static QuatElem unit_i(const BaseField& f);
    static QuatElem unit_j(const BaseField& f);

    const BaseField& field() const { return field_; }
    /** Coordinate on basis element 1, i, j, ij for k = 0..3. */
    const RatFunc& coord(int k) const { return c_.at(static_cast<size_t>(k)); }

    bool is_zero() const;
    bool is_one() const;
    bool is_central() const; // pure scalar

    QuatElem operator+(const QuatElem& o) const;
    QuatElem operator-(const QuatElem& o) const;
    QuatElem operator*(const QuatElem& o) const;
    QuatElem operator*(const RatFunc& s) const;
    QuatElem operator-() const;
    bool operator==(const QuatElem& o) const;
    bool operator!=(const QuatElem& o) const { return !(*this == o); }

    /** Standard conjugation: negates the i, j and ij coordinates. */
    QuatElem conj() const;
    /** Reduced norm c0^2 - a c1^2 - b c2^2 + ab c3^2. */
    RatFunc norm() const;
    QuatElem inv() const; // errors: ZERO_NORM
    QuatElem pow(long e) const;

    std::string str() const;

private:
    void check_same(const QuatElem& o) const;
    BaseField field_;
    std::array<RatFunc, 4> c_;
};

/** Cayley transform (1 - r)(1 + r)^-1; errors: NOT_INVERTIBLE when 1 + r is not a unit. */
QuatElem cayley(const QuatElem& r);

/** The quadratic extension by i (minimal polynomial X^2 - a) used by the representation. */
ExtDescPtr quat_desc_L(const BaseField& f);
/** The quadratic extension by j (minimal polynomial X^2 - b). */
ExtDescPtr quat_desc_K(const BaseField& f);

/**
 * Right regular representation over L = base(i) on the basis {1, j}:
 * c0+c1 i+c2 j+c3 ij maps to [[c0+c1 i, c2+c3 i], [b(c2-c3 i), c0-c1 i]].
 */
SqMatrix quat_rep_L(const QuatElem& x);
/**
 * Right regular representation over K = base(j) on the basis {1, i}:
 * c0+c1 i+c2 j+c3 ij maps to [[c0+c2 j, c1-c3 j], [a(c1+c3 j), c0-c2 j]].
 */
SqMatrix quat_rep_K(const QuatElem& x);

/**
 * An involution (anti-automorphism of order two) of the quaternion algebra:
 * images of i and j plus the induced automorphism of the center, given by the
 * images of a and b.  Constructed through make_quat_involution, which checks
 * the defining relations and the order.
 */
class QuatInvolution {
public:
    const QuatElem& i_image() const { return i_star_; }
    const QuatElem& j_image() const { return j_star_; }
    /** Image of a base-field element under the center automorphism. */
    RatFunc center(const RatFunc& c) const;
    /** Apply the involution. */
    QuatElem operator()(const QuatElem& x) const;

private:
    friend QuatInvolution make_quat_involution(QuatElem, QuatElem, RatFunc, RatFunc);
    QuatInvolution(QuatElem i_star, QuatElem j_star, RatFunc sigma_a, RatFunc sigma_b);
    QuatElem i_star_, j_star_, ij_star_;
    RatFunc sigma_a_, sigma_b_;
};

/**
 * Validate and build an involution from generator images and the center map.
 * Errors: INVALID_SPEC when the images break the defining relations or the
 * center map is not an automorphism of order two; NOT_ORDER_TWO when the
 * resulting map fails to square to the identity.
 */
QuatInvolution make_quat_involution(QuatElem i_star, QuatElem j_star, RatFunc sigma_a,
                                    RatFunc sigma_b);

inline bool is_symmetric(const QuatInvolution& inv, const QuatElem& x) { return inv(x) == x; }
inline bool is_unitary(const QuatInvolution& inv, const QuatElem& x) {
    return (inv(x) * x).is_one();
}

std::ostream& operator<<(std::ostream& os, const QuatElem& x);

} // namespace freepairs
