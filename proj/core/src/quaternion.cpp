#include "freepairs/quaternion.hpp"

#include <sstream>

#include "freepairs/errors.hpp"

namespace freepairs {

namespace {

std::array<RatFunc, 4> zero_coords(const BaseField& f) {
    return {RatFunc::zero(f), RatFunc::zero(f), RatFunc::zero(f), RatFunc::zero(f)};
}

RatFunc var_a(const BaseField& f) { return RatFunc::variable(f, "a"); }
RatFunc var_b(const BaseField& f) { return RatFunc::variable(f, "b"); }

} // namespace

QuatElem::QuatElem(const BaseField& f) : field_(f), c_(zero_coords(f)) {}

QuatElem::QuatElem(const BaseField& f, std::array<RatFunc, 4> coords)
    : field_(f), c_(std::move(coords)) {
    for (const RatFunc& c : c_)
        if (c.field() != field_) fail(errc::descriptor_mismatch, "coordinate field mismatch");
}

QuatElem QuatElem::one(const BaseField& f) {
    QuatElem r(f);
    r.c_[0] = RatFunc::one(f);
    return r;
}

QuatElem QuatElem::constant(const RatFunc& c) {
    QuatElem r(c.field());
    r.c_[0] = c;
    return r;
}

QuatElem QuatElem::unit_i(const BaseField& f) {
    QuatElem r(f);
    r.c_[1] = RatFunc::one(f);
    return r;
}

QuatElem QuatElem::unit_j(const BaseField& f) {
    QuatElem r(f);
    r.c_[2] = RatFunc::one(f);
    return r;
}

bool QuatElem::is_zero() const {
    for (const RatFunc& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool QuatElem::is_one() const { return c_[0].is_one() && is_central(); }

bool QuatElem::is_central() const {
    return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

void QuatElem::check_same(const QuatElem& o) const {
    if (field_ != o.field_) fail(errc::descriptor_mismatch, "quaternion field mismatch");
}

QuatElem QuatElem::operator+(const QuatElem& o) const {
    check_same(o);
    QuatElem r(field_);
    for (int k = 0; k < 4; ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

QuatElem QuatElem::operator-(const QuatElem& o) const {
    check_same(o);
    QuatElem r(field_);
    for (int k = 0; k < 4; ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

QuatElem QuatElem::operator*(const QuatElem& o) const {
    check_same(o);
    const RatFunc a = var_a(field_), b = var_b(field_);
    const std::array<RatFunc, 4>&x = c_, &y = o.c_;
    QuatElem r(field_);
    r.c_[0] = x[0] * y[0] + a * (x[1] * y[1]) + b * (x[2] * y[2]) - a * b * (x[3] * y[3]);
    r.c_[1] = x[0] * y[1] + x[1] * y[0] - b * (x[2] * y[3]) + b * (x[3] * y[2]);
    r.c_[2] = x[0] * y[2] + x[2] * y[0] + a * (x[1] * y[3]) - a * (x[3] * y[1]);
    r.c_[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
    return r;
}

QuatElem QuatElem::operator*(const RatFunc& s) const {
    QuatElem r(field_);
    for (int k = 0; k < 4; ++k) r.c_[k] = c_[k] * s;
    return r;
}

QuatElem QuatElem::operator-() const {
    QuatElem r(field_);
    for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
}

bool QuatElem::operator==(const QuatElem& o) const {
    if (field_ != o.field_) return false;
    for (int k = 0; k < 4; ++k)
        if (c_[k] != o.c_[k]) return false;
    return true;
}

QuatElem QuatElem::conj() const {
    QuatElem r(field_);
    r.c_[0] = c_[0];
    for (int k = 1; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
}

RatFunc QuatElem::norm() const {
    const RatFunc a = var_a(field_), b = var_b(field_);
    return c_[0] * c_[0] - a * (c_[1] * c_[1]) - b * (c_[2] * c_[2]) + a * b * (c_[3] * c_[3]);
}

QuatElem QuatElem::inv() const {
    RatFunc n = norm();
    if (n.is_zero()) fail(errc::zero_norm, "reduced norm vanishes; no inverse");
    return conj() * n.inv();
}

QuatElem QuatElem::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    QuatElem acc = QuatElem::one(field_);
    QuatElem base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc = acc * base;
        if (e > 1) base = base * base;
    }
    return acc;
}

std::string QuatElem::str() const {
    static const char* names[4] = {"", "i", "j", "i*j"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (c_[k].is_zero()) continue;
        std::string piece;
        if (k == 0) {
            piece = c_[0].str();
        } else if (c_[k].is_one()) {
            piece = names[k];
        } else if ((-c_[k]).is_one()) {
            piece = std::string("-") + names[k];
        } else {
            piece = "(" + c_[k].str() + ")*" + names[k];
        }
        if (out.empty()) {
            out = piece;
        } else if (!piece.empty() && piece[0] == '-') {
            out += piece;
        } else {
            out += "+" + piece;
        }
    }
    return out.empty() ? "0" : out;
}

QuatElem cayley(const QuatElem& r) {
    const QuatElem one = QuatElem::one(r.field());
    const QuatElem denom = one + r;
    RatFunc n = denom.norm();
    if (n.is_zero()) fail(errc::not_invertible, "1 + r has zero reduced norm");
    return (one - r) * denom.conj() * n.inv();
}

ExtDescPtr quat_desc_L(const BaseField& f) {
    return make_ext_descriptor(f, {"a", "b"}, "i",
                               {-RatFunc::variable(f, "a"), RatFunc::zero(f), RatFunc::one(f)});
}

ExtDescPtr quat_desc_K(const BaseField& f) {
    return make_ext_descriptor(f, {"a", "b"}, "j",
                               {-RatFunc::variable(f, "b"), RatFunc::zero(f), RatFunc::one(f)});
}

SqMatrix quat_rep_L(const QuatElem& x) {
    const BaseField& f = x.field();
    ExtDescPtr L = quat_desc_L(f);
    auto mk = [&](const RatFunc& u, const RatFunc& v) { return ExtElem(L, {u, v}); };
    const RatFunc b = var_b(f);
    SqMatrix m(L, 2);
    m.set(0, 0, mk(x.coord(0), x.coord(1)));
    m.set(0, 1, mk(x.coord(2), x.coord(3)));
    m.set(1, 0, mk(b * x.coord(2), -(b * x.coord(3))));
    m.set(1, 1, mk(x.coord(0), -x.coord(1)));
    return m;
}

SqMatrix quat_rep_K(const QuatElem& x) {
    const BaseField& f = x.field();
    ExtDescPtr K = quat_desc_K(f);
    auto mk = [&](const RatFunc& u, const RatFunc& v) { return ExtElem(K, {u, v}); };
    const RatFunc a = var_a(f);
    SqMatrix m(K, 2);
    m.set(0, 0, mk(x.coord(0), x.coord(2)));
    m.set(0, 1, mk(x.coord(1), -x.coord(3)));
    m.set(1, 0, mk(a * x.coord(1), a * x.coord(3)));
    m.set(1, 1, mk(x.coord(0), -x.coord(2)));
    return m;
}

QuatInvolution::QuatInvolution(QuatElem i_star, QuatElem j_star, RatFunc sigma_a, RatFunc sigma_b)
    : i_star_(std::move(i_star)),
      j_star_(std::move(j_star)),
      ij_star_(j_star_ * i_star_),
      sigma_a_(std::move(sigma_a)),
      sigma_b_(std::move(sigma_b)) {}

RatFunc QuatInvolution::center(const RatFunc& c) const {
    return c.subst({{"a", sigma_a_}, {"b", sigma_b_}});
}

QuatElem QuatInvolution::operator()(const QuatElem& x) const {
    QuatElem r = QuatElem::constant(center(x.coord(0)));
    r = r + i_star_ * center(x.coord(1));
    r = r + j_star_ * center(x.coord(2));
    r = r + ij_star_ * center(x.coord(3));
    return r;
}

QuatInvolution make_quat_involution(QuatElem i_star, QuatElem j_star, RatFunc sigma_a,
                                    RatFunc sigma_b) {
    const BaseField& f = i_star.field();
    if (j_star.field() != f || sigma_a.field() != f || sigma_b.field() != f)
        fail(errc::descriptor_mismatch, "involution data over different fields");

    std::map<std::string, RatFunc> sigma{{"a", sigma_a}, {"b", sigma_b}};
    if (sigma_a.subst(sigma) != RatFunc::variable(f, "a") ||
        sigma_b.subst(sigma) != RatFunc::variable(f, "b"))
        fail(errc::not_order_two, "center map does not square to the identity");

    if (i_star * i_star != QuatElem::constant(sigma_a))
        fail(errc::invalid_spec, "image of i does not square to the image of a");
    if (j_star * j_star != QuatElem::constant(sigma_b))
        fail(errc::invalid_spec, "image of j does not square to the image of b");
    if (i_star * j_star != -(j_star * i_star))
        fail(errc::invalid_spec, "images of i and j do not anticommute");

    QuatInvolution inv(std::move(i_star), std::move(j_star), std::move(sigma_a),
                       std::move(sigma_b));
    const QuatElem gi = QuatElem::unit_i(f), gj = QuatElem::unit_j(f);
    if (inv(inv(gi)) != gi || inv(inv(gj)) != gj)
        fail(errc::not_order_two, "map does not square to the identity on the generators");
    return inv;
}

std::ostream& operator<<(std::ostream& os, const QuatElem& x) { return os << x.str(); }

} // namespace freepairs
