#pragma once

#include <map>

#include "freepairs/quaternion.hpp"

namespace freepairs {

/**
 * Element of the discrete Heisenberg group in the normal form
 * lambda^r y^m x^n, where lambda = [x, y] is central and x^n y^m =
 * lambda^(nm) y^m x^n.
 */
struct HeisElem {
    Int r, m, n;

    bool operator==(const HeisElem& o) const { return r == o.r && m == o.m && n == o.n; }
    bool operator!=(const HeisElem& o) const { return !(*this == o); }
    bool operator<(const HeisElem& o) const {
        if (r != o.r) return r < o.r;
        if (m != o.m) return m < o.m;
        return n < o.n;
    }

    std::string str() const;
};

inline HeisElem heis_identity() { return {0, 0, 0}; }
inline HeisElem heis_lambda() { return {1, 0, 0}; }
inline HeisElem heis_y() { return {0, 1, 0}; }
inline HeisElem heis_x() { return {0, 0, 1}; }

/** Normal-form product: the x-part of the left factor hops over the y-part of the right. */
HeisElem heis_mul(const HeisElem& g, const HeisElem& h);
/** Closed-form power lambda^(rs + mn s(s-1)/2) y^(ms) x^(ns); s may be negative. */
HeisElem heis_pow(const HeisElem& g, const Int& s);
inline HeisElem heis_inv(const HeisElem& g) { return heis_pow(g, -1); }

/** 2x2 integer matrix with determinant +-1, acting on row vectors (m, n). */
class IntMatrix2 {
public:
    IntMatrix2(Int a, Int b, Int c, Int d);
    static IntMatrix2 identity() { return {1, 0, 0, 1}; }

    const Int& at(int r, int c) const { return e_.at(static_cast<size_t>(2 * r + c)); }
    Int det() const;

    IntMatrix2 operator*(const IntMatrix2& o) const;
    IntMatrix2 operator-() const;
    /** Exact inverse (the adjugate scaled by det = +-1). */
    IntMatrix2 inv() const;
    bool operator==(const IntMatrix2& o) const { return e_ == o.e_; }
    bool operator!=(const IntMatrix2& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::array<Int, 4> e_;
};

/** Conjugacy classes of order-two elements of GL(2, Z). */
enum class Order2Class { ID, NEG_ID, D, S };

std::string order2_class_name(Order2Class c);

struct Order2Classification {
    Order2Class cls;
    IntMatrix2 conjugator; // T with T A T^-1 = class representative
};

/** Representative matrix of a class: I, -I, diag(1,-1) or the swap matrix. */
IntMatrix2 order2_representative(Order2Class c);

/**
 * Classify an order-two matrix up to GL(2, Z)-conjugacy and return a
 * conjugator onto the representative.  Errors: NOT_ORDER_TWO.
 */
Order2Classification classify_order2(const IntMatrix2& a);

/** Automorphism of the Heisenberg group determined by generator images. */
struct HeisAutomorphism {
    HeisElem x_image, y_image;
    int lambda_exp; // lambda maps to lambda^(+-1)
    HeisElem operator()(const HeisElem& g) const;
};

/**
 * Lift a GL(2, Z) matrix to an automorphism of the group, with the central
 * corrections that make the commutator relation survive.  The result is
 * checked to project back onto the matrix.
 */
HeisAutomorphism lift_automorphism(const IntMatrix2& a);

enum class InvolutionType { I, II, III, IV };

std::string involution_type_name(InvolutionType t);

/**
 * One of the four involution shapes of the group, with central parameters
 * zeta = lambda^m and eta = lambda^n (n is used by type I only):
 *   I:   x -> zeta x,   y -> eta y,        lambda -> lambda^-1
 *   II:  x -> x^-1,     y -> y^-1,         lambda -> lambda^-1
 *   III: x -> x,        y -> zeta y^-1,    lambda -> lambda
 *   IV:  x -> zeta y,   y -> zeta^-1 x,    lambda -> lambda
 * Construction validates the order-two and anti-automorphism laws.
 * Errors: NOT_ORDER_TWO.
 */
class HeisInvolution {
public:
    static HeisInvolution make(InvolutionType t, const Int& m = 0, const Int& n = 0);

    InvolutionType type() const { return type_; }
    const Int& param_m() const { return m_; }
    const Int& param_n() const { return n_; }
    const HeisElem& x_image() const { return x_image_; }
    const HeisElem& y_image() const { return y_image_; }
    const HeisElem& lambda_image() const { return lambda_image_; }

    /** Image of a group element under the anti-automorphism. */
    HeisElem operator()(const HeisElem& g) const;

    std::string str() const;

private:
    HeisInvolution(InvolutionType t, Int m, Int n, HeisElem xi, HeisElem yi, HeisElem li)
        : type_(t), m_(std::move(m)), n_(std::move(n)), x_image_(xi), y_image_(yi),
          lambda_image_(li) {}
    InvolutionType type_;
    Int m_, n_;
    HeisElem x_image_, y_image_, lambda_image_;
};

/**
 * Element of the group ring: finite sum of group elements with nonzero
 * scalar coefficients.  The coefficient field defaults to the rationals.
 */
class GroupRingElem {
public:
    explicit GroupRingElem(const BaseField& f);

    static GroupRingElem zero(const BaseField& f) { return GroupRingElem(f); }
    static GroupRingElem one(const BaseField& f);
    static GroupRingElem monomial(const BaseField& f, const HeisElem& g,
                                  const Scalar& c);
    static GroupRingElem group_elem(const BaseField& f, const HeisElem& g);

    const BaseField& field() const { return field_; }
    const std::map<HeisElem, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GroupRingElem operator+(const GroupRingElem& o) const;
    GroupRingElem operator-(const GroupRingElem& o) const;
    GroupRingElem operator*(const GroupRingElem& o) const;
    GroupRingElem operator*(const Scalar& s) const;
    GroupRingElem operator-() const;
    bool operator==(const GroupRingElem& o) const;
    bool operator!=(const GroupRingElem& o) const { return !(*this == o); }

    /** Serialized as "c * L^r Y^m X^n" terms joined with " + ". */
    std::string str() const;

private:
    void add_term(const HeisElem& g, const Scalar& c);
    BaseField field_;
    std::map<HeisElem, Scalar> terms_;
};

/** Linear extension of the involution to the group ring. */
GroupRingElem involution_apply(const HeisInvolution& inv, const GroupRingElem& u);

/**
 * The two specializations into the quaternion algebra: both send lambda to -1
 * and x to i; PSI sends y to j while PHI sends y to ij.
 */
enum class QuatSpecialization { PSI, PHI };

QuatElem specialize_quat(QuatSpecialization kind, const GroupRingElem& u);
QuatElem specialize_quat(QuatSpecialization kind, const BaseField& f, const HeisElem& g);

std::ostream& operator<<(std::ostream& os, const HeisElem& g);
std::ostream& operator<<(std::ostream& os, const GroupRingElem& u);
std::ostream& operator<<(std::ostream& os, const IntMatrix2& m);

} // namespace freepairs
