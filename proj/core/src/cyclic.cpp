#include "freepairs/cyclic.hpp"

#include <sstream>

#include "freepairs/errors.hpp"

namespace freepairs {

namespace {

void check_cyc_descriptor(const ExtDescPtr& d) {
    if (!d) fail(errc::invalid_spec, "null extension descriptor");
    if (d->field().characteristic() != 3)
        fail(errc::invalid_spec, "cyclic algebra requires characteristic three");
    if (d->degree() != 3) fail(errc::invalid_spec, "cyclic algebra requires a cubic extension");
}

ExtElem central_b(const ExtDescPtr& d) {
    return ExtElem::constant(d, RatFunc::variable(d->field(), "b"));
}

} // namespace

ExtDescPtr make_cyc_descriptor(const BaseField& f) {
    if (f.characteristic() != 3)
        fail(errc::invalid_spec, "cyclic algebra requires characteristic three");
    const RatFunc zero = RatFunc::zero(f), one = RatFunc::one(f);
    ExtDescPtr d = make_ext_descriptor(f, {"a", "b"}, "i",
                                       {-RatFunc::variable(f, "a"), -one, zero, one});
    // The conjugation automorphism i -> i - 1 must permute the roots.
    ExtElem shifted = ExtElem::generator(d) - ExtElem::one(d);
    ExtElem value = ExtElem::zero(d);
    for (int k = 3; k >= 0; --k) value = value * shifted + ExtElem::constant(d, d->minpoly()[static_cast<size_t>(k)]);
    if (!value.is_zero()) fail(errc::internal, "shift automorphism check failed");
    return d;
}

ExtElem cyc_sigma(const ExtElem& c, int q) {
    q = ((q % 3) + 3) % 3;
    if (q == 0) return c;
    ExtElem image = ExtElem::generator(c.descriptor()) - ExtElem::from_int(c.descriptor(), q);
    return c.subst_gen(image);
}

CycElem::CycElem(ExtDescPtr ki, std::array<ExtElem, 3> coords)
    : ki_(std::move(ki)), c_(std::move(coords)) {
    check_cyc_descriptor(ki_);
    for (const ExtElem& c : c_)
        if (!(*c.descriptor() == *ki_))
            fail(errc::descriptor_mismatch, "coordinate descriptor mismatch");
}

CycElem CycElem::zero(const ExtDescPtr& ki) {
    return CycElem(ki, {ExtElem::zero(ki), ExtElem::zero(ki), ExtElem::zero(ki)});
}

CycElem CycElem::one(const ExtDescPtr& ki) {
    return CycElem(ki, {ExtElem::one(ki), ExtElem::zero(ki), ExtElem::zero(ki)});
}

CycElem CycElem::from_ext(const ExtElem& c) {
    const ExtDescPtr& d = c.descriptor();
    return CycElem(d, {c, ExtElem::zero(d), ExtElem::zero(d)});
}

CycElem CycElem::gen_i(const ExtDescPtr& ki) { return from_ext(ExtElem::generator(ki)); }

CycElem CycElem::gen_j(const ExtDescPtr& ki) {
    return CycElem(ki, {ExtElem::zero(ki), ExtElem::one(ki), ExtElem::zero(ki)});
}

bool CycElem::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero();
}

bool CycElem::is_one() const { return c_[0].is_one() && c_[1].is_zero() && c_[2].is_zero(); }

bool CycElem::is_central() const {
    if (!c_[1].is_zero() || !c_[2].is_zero()) return false;
    for (int k = 1; k < 3; ++k)
        if (!c_[0].coeff(k).is_zero()) return false;
    return true;
}

void CycElem::check_same(const CycElem& o) const {
    if (!(*ki_ == *o.ki_)) fail(errc::descriptor_mismatch, "cyclic algebra mismatch");
}

CycElem CycElem::operator+(const CycElem& o) const {
    check_same(o);
    return CycElem(ki_, {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]});
}

CycElem CycElem::operator-(const CycElem& o) const {
    check_same(o);
    return CycElem(ki_, {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2]});
}

CycElem CycElem::operator*(const CycElem& o) const {
    check_same(o);
    const ExtElem b = central_b(ki_);
    std::array<ExtElem, 3> z{ExtElem::zero(ki_), ExtElem::zero(ki_), ExtElem::zero(ki_)};
    for (int q = 0; q < 3; ++q) {
        if (c_[q].is_zero()) continue;
        for (int r = 0; r < 3; ++r) {
            ExtElem term = c_[q] * cyc_sigma(o.c_[r], q);
            if (q + r >= 3) term = term * b;
            int s = (q + r) % 3;
            z[static_cast<size_t>(s)] = z[static_cast<size_t>(s)] + term;
        }
    }
    return CycElem(ki_, std::move(z));
}

CycElem CycElem::operator*(const ExtElem& s) const {
    return CycElem(ki_, {s * c_[0], s * c_[1], s * c_[2]});
}

CycElem CycElem::operator*(const RatFunc& s) const {
    return *this * ExtElem::constant(ki_, s);
}

CycElem CycElem::operator-() const { return CycElem(ki_, {-c_[0], -c_[1], -c_[2]}); }

bool CycElem::operator==(const CycElem& o) const {
    if (!(*ki_ == *o.ki_)) return false;
    return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
}

CycElem CycElem::inv() const {
    try {
        SqMatrix w = cyc_reg_rep(*this).inv();
        return CycElem(ki_, {w.at(0, 0), w.at(0, 1), w.at(0, 2)});
    } catch (const error& e) {
        if (e.code() == errc::singular_matrix)
            fail(errc::not_invertible, "regular representation is singular");
        throw;
    }
}

CycElem CycElem::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CycElem acc = CycElem::one(ki_);
    CycElem base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc = acc * base;
        if (e > 1) base = base * base;
    }
    return acc;
}

std::string CycElem::str() const {
    static const char* names[3] = {"", "j", "j^2"};
    std::string out;
    for (int q = 0; q < 3; ++q) {
        if (c_[q].is_zero()) continue;
        std::string piece;
        if (q == 0) {
            piece = c_[0].str();
        } else if (c_[q].is_one()) {
            piece = names[q];
        } else {
            piece = "(" + c_[q].str() + ")*" + names[q];
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

SqMatrix cyc_reg_rep(const CycElem& x) {
    const ExtDescPtr& d = x.descriptor();
    const ExtElem b = central_b(d);
    SqMatrix m(d, 3);
    for (int p = 0; p < 3; ++p) {
        for (int r = 0; r < 3; ++r) {
            ExtElem entry = cyc_sigma(x.coord(r), p);
            int col = (p + r) % 3;
            if (p + r >= 3) entry = entry * b;
            m.set(p, col, entry);
        }
    }
    return m;
}

CycElem cayley(const CycElem& r) {
    const CycElem one = CycElem::one(r.descriptor());
    return (one - r) * (one + r).inv();
}

CycInvolution::CycInvolution(CycElem i_star, CycElem j_star, RatFunc sigma_a, RatFunc sigma_b)
    : i_star_(std::move(i_star)),
      j_star_(std::move(j_star)),
      sigma_a_(std::move(sigma_a)),
      sigma_b_(std::move(sigma_b)) {}

RatFunc CycInvolution::center(const RatFunc& c) const {
    return c.subst({{"a", sigma_a_}, {"b", sigma_b_}});
}

CycElem CycInvolution::operator()(const CycElem& x) const {
    const ExtDescPtr& d = x.descriptor();
    CycElem out = CycElem::zero(d);
    CycElem jpow = CycElem::one(d);
    for (int q = 0; q < 3; ++q) {
        if (q > 0) jpow = jpow * j_star_;
        const ExtElem& c = x.coord(q);
        if (c.is_zero()) continue;
        // Image of the K-coefficient: sigma-twisted coefficients evaluated at i's image.
        CycElem kc = CycElem::zero(d);
        CycElem ipow = CycElem::one(d);
        for (int k = 0; k < 3; ++k) {
            if (k > 0) ipow = ipow * i_star_;
            kc = kc + ipow * center(c.coeff(k));
        }
        out = out + jpow * kc;
    }
    return out;
}

CycInvolution make_cyc_involution(CycElem i_star, CycElem j_star, RatFunc sigma_a,
                                  RatFunc sigma_b) {
    const ExtDescPtr d = i_star.descriptor();
    const BaseField& f = d->field();
    if (!(*j_star.descriptor() == *d) || sigma_a.field() != f || sigma_b.field() != f)
        fail(errc::descriptor_mismatch, "involution data over different algebras");

    std::map<std::string, RatFunc> sigma{{"a", sigma_a}, {"b", sigma_b}};
    if (sigma_a.subst(sigma) != RatFunc::variable(f, "a") ||
        sigma_b.subst(sigma) != RatFunc::variable(f, "b"))
        fail(errc::not_order_two, "center map does not square to the identity");

    const CycElem one = CycElem::one(d);
    if (i_star * i_star * i_star != i_star + one * sigma_a)
        fail(errc::invalid_spec, "image of i does not satisfy the cubic relation");
    if (j_star * j_star * j_star != one * sigma_b)
        fail(errc::invalid_spec, "image of j does not cube to the image of b");
    if (j_star * i_star != (i_star + one) * j_star)
        fail(errc::invalid_spec, "images of i and j do not satisfy the twist relation");

    CycInvolution inv(std::move(i_star), std::move(j_star), std::move(sigma_a),
                      std::move(sigma_b));
    const CycElem gi = CycElem::gen_i(d), gj = CycElem::gen_j(d);
    if (inv(inv(gi)) != gi || inv(inv(gj)) != gj)
        fail(errc::not_order_two, "map does not square to the identity on the generators");
    return inv;
}

std::ostream& operator<<(std::ostream& os, const CycElem& x) { return os << x.str(); }

} // namespace freepairs
