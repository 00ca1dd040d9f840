#include "freepairs/heisenberg.hpp"

#include <sstream>

#include "freepairs/errors.hpp"

namespace freepairs {

namespace {

long to_long_exp(const Int& e) {
    if (e > 1048576 || e < -1048576) fail(errc::degree_overflow, "group exponent too large");
    return e.convert_to<long>();
}

std::string power_str(const char* name, const Int& e) {
    if (e == 0) return "";
    std::ostringstream os;
    os << name;
    if (e != 1) os << "^" << e;
    return os.str();
}

} // namespace

std::string HeisElem::str() const {
    std::string out;
    for (const std::string& p : {power_str("L", r), power_str("Y", m), power_str("X", n)}) {
        if (p.empty()) continue;
        if (!out.empty()) out += " ";
        out += p;
    }
    return out.empty() ? "1" : out;
}

HeisElem heis_mul(const HeisElem& g, const HeisElem& h) {
    return {g.r + h.r + g.n * h.m, g.m + h.m, g.n + h.n};
}

HeisElem heis_pow(const HeisElem& g, const Int& s) {
    return {g.r * s + g.m * g.n * s * (s - 1) / 2, g.m * s, g.n * s};
}

IntMatrix2::IntMatrix2(Int a, Int b, Int c, Int d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    Int dt = det();
    if (dt != 1 && dt != -1) fail(errc::invalid_spec, "matrix determinant must be +-1");
}

Int IntMatrix2::det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

IntMatrix2 IntMatrix2::operator*(const IntMatrix2& o) const {
    return {e_[0] * o.e_[0] + e_[1] * o.e_[2], e_[0] * o.e_[1] + e_[1] * o.e_[3],
            e_[2] * o.e_[0] + e_[3] * o.e_[2], e_[2] * o.e_[1] + e_[3] * o.e_[3]};
}

IntMatrix2 IntMatrix2::operator-() const { return {-e_[0], -e_[1], -e_[2], -e_[3]}; }

IntMatrix2 IntMatrix2::inv() const {
    Int dt = det(); // +-1, so dividing is multiplying
    return {e_[3] * dt, -e_[1] * dt, -e_[2] * dt, e_[0] * dt};
}

std::string IntMatrix2::str() const {
    std::ostringstream os;
    os << "[[" << e_[0] << ", " << e_[1] << "], [" << e_[2] << ", " << e_[3] << "]]";
    return os.str();
}

std::string order2_class_name(Order2Class c) {
    switch (c) {
    case Order2Class::ID: return "I";
    case Order2Class::NEG_ID: return "-I";
    case Order2Class::D: return "D";
    case Order2Class::S: return "S";
    }
    fail(errc::internal, "unknown class");
}

IntMatrix2 order2_representative(Order2Class c) {
    switch (c) {
    case Order2Class::ID: return IntMatrix2::identity();
    case Order2Class::NEG_ID: return -IntMatrix2::identity();
    case Order2Class::D: return {1, 0, 0, -1};
    case Order2Class::S: return {0, 1, 1, 0};
    }
    fail(errc::internal, "unknown class");
}

namespace {

// Primitive left-kernel vector of a singular integer 2x2 matrix (given entrywise).
std::pair<Int, Int> left_kernel(const Int& m00, const Int& m01, const Int& m10,
                                const Int& m11) {
    Int v1, v2;
    if (m00 != 0 || m10 != 0) {
        v1 = m10;
        v2 = -m00;
    } else {
        v1 = m11;
        v2 = -m01;
    }
    using boost::multiprecision::abs;
    Int g = boost::multiprecision::gcd(abs(v1), abs(v2));
    if (g > 1) {
        v1 /= g;
        v2 /= g;
    }
    if (v1 < 0 || (v1 == 0 && v2 < 0)) {
        v1 = -v1;
        v2 = -v2;
    }
    return {v1, v2};
}

} // namespace

Order2Classification classify_order2(const IntMatrix2& a) {
    const IntMatrix2 I = IntMatrix2::identity();
    if (a * a != I) fail(errc::not_order_two, "matrix does not square to the identity");
    if (a == I) return {Order2Class::ID, I};
    if (a == -I) return {Order2Class::NEG_ID, I};

    // Eigenvalues are 1 and -1; take primitive integer eigenvectors.
    auto [p1, p2] = left_kernel(a.at(0, 0) - 1, a.at(0, 1), a.at(1, 0), a.at(1, 1) - 1);
    auto [q1, q2] = left_kernel(a.at(0, 0) + 1, a.at(0, 1), a.at(1, 0), a.at(1, 1) + 1);
    Int dd = p1 * q2 - p2 * q1;
    using boost::multiprecision::abs;
    if (abs(dd) == 1) {
        // The eigenvectors already form a lattice basis.
        IntMatrix2 t(p1, p2, q1, q2);
        return {Order2Class::D, t};
    }
    if (abs(dd) != 2) fail(errc::internal, "unexpected eigenlattice index");
    // Index two: the half-sum w is integral, and (w, wA) is a basis swapped by A.
    Int w1 = (p1 + q1) / 2, w2 = (p2 + q2) / 2;
    if ((p1 + q1) % 2 != 0 || (p2 + q2) % 2 != 0)
        fail(errc::internal, "half-sum eigenvector is not integral");
    Int u1 = w1 * a.at(0, 0) + w2 * a.at(1, 0);
    Int u2 = w1 * a.at(0, 1) + w2 * a.at(1, 1);
    IntMatrix2 t(w1, w2, u1, u2);
    return {Order2Class::S, t};
}

HeisElem HeisAutomorphism::operator()(const HeisElem& g) const {
    HeisElem acc = heis_pow(HeisElem{lambda_exp, 0, 0}, g.r);
    acc = heis_mul(acc, heis_pow(y_image, g.m));
    return heis_mul(acc, heis_pow(x_image, g.n));
}

HeisAutomorphism lift_automorphism(const IntMatrix2& m) {
    const Int a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 0), d = m.at(1, 1);
    const Int eps = m.det();
    const Int inum = -eps * c * d * (-eps + a + b);
    const Int jnum = -eps * a * b * (-eps + c + d);
    if (inum % 2 != 0 || jnum % 2 != 0)
        fail(errc::internal, "lift exponents are not integral");
    HeisAutomorphism phi{HeisElem{jnum / 2, b, a}, HeisElem{inum / 2, d, c},
                         eps.convert_to<int>()};
    // The commutator relation x y = lambda y x must survive.
    HeisElem lhs = heis_mul(phi.x_image, phi.y_image);
    HeisElem rhs = heis_mul(HeisElem{eps, 0, 0}, heis_mul(phi.y_image, phi.x_image));
    if (lhs != rhs) fail(errc::internal, "lift does not preserve the commutator relation");
    // ... and the projection must return the input matrix.
    if (phi.x_image.n != a || phi.x_image.m != b || phi.y_image.n != c || phi.y_image.m != d)
        fail(errc::internal, "lift does not project to the given matrix");
    return phi;
}

std::string involution_type_name(InvolutionType t) {
    switch (t) {
    case InvolutionType::I: return "I";
    case InvolutionType::II: return "II";
    case InvolutionType::III: return "III";
    case InvolutionType::IV: return "IV";
    }
    fail(errc::internal, "unknown involution type");
}

HeisInvolution HeisInvolution::make(InvolutionType t, const Int& m, const Int& n) {
    HeisElem xi, yi, li;
    switch (t) {
    case InvolutionType::I:
        xi = {m, 0, 1};
        yi = {n, 1, 0};
        li = {-1, 0, 0};
        break;
    case InvolutionType::II:
        xi = {0, 0, -1};
        yi = {0, -1, 0};
        li = {-1, 0, 0};
        break;
    case InvolutionType::III:
        xi = {0, 0, 1};
        yi = {m, -1, 0};
        li = {1, 0, 0};
        break;
    case InvolutionType::IV:
        xi = {m, 1, 0};
        yi = {-m, 0, 1};
        li = {1, 0, 0};
        break;
    }
    HeisInvolution inv(t, m, n, xi, yi, li);
    for (const HeisElem& g : {heis_x(), heis_y(), heis_lambda()})
        if (inv(inv(g)) != g)
            fail(errc::not_order_two, "involution does not square to the identity");
    const HeisElem gx = heis_x(), gy = heis_y();
    if (inv(heis_mul(gx, gy)) != heis_mul(inv(gy), inv(gx)))
        fail(errc::internal, "involution images are not anti-multiplicative");
    return inv;
}

HeisElem HeisInvolution::operator()(const HeisElem& g) const {
    // (lambda^r y^m x^n)* = (x*)^n (y*)^m (lambda*)^r
    HeisElem acc = heis_pow(x_image_, g.n);
    acc = heis_mul(acc, heis_pow(y_image_, g.m));
    return heis_mul(acc, heis_pow(lambda_image_, g.r));
}

std::string HeisInvolution::str() const {
    std::ostringstream os;
    os << "type " << involution_type_name(type_);
    if (type_ == InvolutionType::I)
        os << " (m=" << m_ << ", n=" << n_ << ")";
    else if (type_ == InvolutionType::III || type_ == InvolutionType::IV)
        os << " (m=" << m_ << ")";
    return os.str();
}

GroupRingElem::GroupRingElem(const BaseField& f) : field_(f) {}

GroupRingElem GroupRingElem::one(const BaseField& f) {
    return group_elem(f, heis_identity());
}

GroupRingElem GroupRingElem::monomial(const BaseField& f, const HeisElem& g, const Scalar& c) {
    GroupRingElem u(f);
    u.add_term(g, c);
    return u;
}

GroupRingElem GroupRingElem::group_elem(const BaseField& f, const HeisElem& g) {
    return monomial(f, g, Scalar::one(f));
}

void GroupRingElem::add_term(const HeisElem& g, const Scalar& c) {
    if (c.field() != field_) fail(errc::descriptor_mismatch, "coefficient field mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
    if (field_ != o.field_) fail(errc::descriptor_mismatch, "group ring field mismatch");
    GroupRingElem r = *this;
    for (const auto& [g, c] : o.terms_) r.add_term(g, c);
    return r;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& o) const { return *this + (-o); }

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
    if (field_ != o.field_) fail(errc::descriptor_mismatch, "group ring field mismatch");
    GroupRingElem r(field_);
    for (const auto& [g, c] : terms_)
        for (const auto& [h, d] : o.terms_) r.add_term(heis_mul(g, h), c * d);
    return r;
}

GroupRingElem GroupRingElem::operator*(const Scalar& s) const {
    GroupRingElem r(field_);
    for (const auto& [g, c] : terms_) r.add_term(g, c * s);
    return r;
}

GroupRingElem GroupRingElem::operator-() const {
    GroupRingElem r(field_);
    for (const auto& [g, c] : terms_) r.add_term(g, -c);
    return r;
}

bool GroupRingElem::operator==(const GroupRingElem& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
}

std::string GroupRingElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [g, c] : terms_) {
        std::string piece;
        std::string gs = g.str();
        if (gs == "1") {
            piece = c.str();
        } else if (c.is_one()) {
            piece = gs;
        } else {
            piece = c.str() + " * " + gs;
        }
        if (!out.empty()) out += " + ";
        out += piece;
    }
    return out;
}

GroupRingElem involution_apply(const HeisInvolution& inv, const GroupRingElem& u) {
    GroupRingElem r(u.field());
    for (const auto& [g, c] : u.terms())
        r = r + GroupRingElem::monomial(u.field(), inv(g), c);
    return r;
}

QuatElem specialize_quat(QuatSpecialization kind, const BaseField& f, const HeisElem& g) {
    const QuatElem i = QuatElem::unit_i(f);
    const QuatElem yimg =
        (kind == QuatSpecialization::PSI) ? QuatElem::unit_j(f) : i * QuatElem::unit_j(f);
    // The skew relation y^-1 x y = lambda x must map to a true identity.
    const QuatElem minus_i = -i;
    if (yimg.inv() * i * yimg != minus_i)
        fail(errc::internal, "specialization does not respect the twist relation");
    QuatElem acc = QuatElem::one(f);
    if (g.r % 2 != 0) acc = -acc;
    acc = acc * yimg.pow(to_long_exp(g.m));
    return acc * i.pow(to_long_exp(g.n));
}

QuatElem specialize_quat(QuatSpecialization kind, const GroupRingElem& u) {
    QuatElem acc = QuatElem::zero(u.field());
    for (const auto& [g, c] : u.terms()) {
        RatFunc coeff{MultiPoly::constant(u.field(), c.value())};
        acc = acc + specialize_quat(kind, u.field(), g) * coeff;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const HeisElem& g) { return os << g.str(); }
std::ostream& operator<<(std::ostream& os, const GroupRingElem& u) { return os << u.str(); }
std::ostream& operator<<(std::ostream& os, const IntMatrix2& m) { return os << m.str(); }

} // namespace freepairs
