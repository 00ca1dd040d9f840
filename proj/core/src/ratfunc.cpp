#include "freepairs/ratfunc.hpp"

#include <ostream>

namespace freepairs {

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(num_.field(), 1)) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.field() != den_.field())
        fail(errc::descriptor_mismatch, "RatFunc: mixed base fields");
    if (den_.is_zero()) fail(errc::division_by_zero, "RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.field(), 1);
        return;
    }
    if (!den_.is_one()) {
        MultiPoly g = MultiPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = MultiPoly::must_div(num_, g);
            den_ = MultiPoly::must_div(den_, g);
        }
    }
    Scalar lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Scalar s = lc.inv();
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }
}

RatFunc RatFunc::from_reduced(MultiPoly num, MultiPoly den) {
    RatFunc r(std::move(num));
    if (r.num_.is_zero()) return r;
    r.den_ = std::move(den);
    Scalar lc = r.den_.leading_coeff();
    if (!lc.is_one()) {
        Scalar s = lc.inv();
        r.num_ = r.num_.scaled(s);
        r.den_ = r.den_.scaled(s);
    }
    return r;
}

// The sum/product paths cancel shared factors before multiplying out, so the
// expensive gcds run on the small inputs instead of their products.
RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ + o.num_);
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    MultiPoly g = MultiPoly::gcd(den_, o.den_);
    if (g.is_one())
        return from_reduced(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    MultiPoly d1 = MultiPoly::must_div(den_, g), d2 = MultiPoly::must_div(o.den_, g);
    return RatFunc(num_ * d2 + o.num_ * d1, den_ * d2);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return zero(field());
    if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ * o.num_);
    MultiPoly g1 = MultiPoly::gcd(num_, o.den_);
    MultiPoly g2 = MultiPoly::gcd(o.num_, den_);
    const MultiPoly n1 = g1.is_one() ? num_ : MultiPoly::must_div(num_, g1);
    const MultiPoly d2 = g1.is_one() ? o.den_ : MultiPoly::must_div(o.den_, g1);
    const MultiPoly n2 = g2.is_one() ? o.num_ : MultiPoly::must_div(o.num_, g2);
    const MultiPoly d1 = g2.is_one() ? den_ : MultiPoly::must_div(den_, g2);
    return from_reduced(n1 * n2, d1 * d2);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) fail(errc::division_by_zero, "RatFunc: division by zero");
    return *this * o.inv();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inv() const {
    if (is_zero()) fail(errc::division_by_zero, "RatFunc: inverse of zero");
    return from_reduced(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc acc = RatFunc::one(field()), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

RatFunc poly_subst(const MultiPoly& p, const std::map<std::string, RatFunc>& images) {
    const BaseField& f = p.field();
    RatFunc acc = RatFunc::zero(f);
    for (const auto& [m, c] : p.terms()) {
        RatFunc term = RatFunc(MultiPoly::constant(c));
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            const std::string& v = p.vars()[i];
            auto it = images.find(v);
            RatFunc base = (it != images.end()) ? it->second : RatFunc::variable(f, v);
            term = term * base.pow(m[i]);
        }
        acc = acc + term;
    }
    return acc;
}

RatFunc RatFunc::subst(const std::map<std::string, RatFunc>& images) const {
    RatFunc n = poly_subst(num_, images);
    RatFunc d = poly_subst(den_, images);
    return n / d; // throws DIVISION_BY_ZERO when the point lies on the denominator
}

RatFunc RatFunc::shift_var(const std::string& var, const Rat& offset) const {
    std::map<std::string, RatFunc> im;
    im[var] = RatFunc::variable(field(), var) + RatFunc::constant(field(), offset);
    return subst(im);
}

namespace detail {

// A denominator can be printed bare when it is a single atom such as "b" or
// "b^2"; anything with a coefficient or several factors needs parentheses so
// the left-associative parse of "/" round-trips.
static bool atomic_poly(const MultiPoly& p) {
    if (p.terms().size() != 1) return false;
    const auto& [m, c] = *p.terms().begin();
    int used = 0;
    for (int e : m) used += (e > 0) ? 1 : 0;
    if (used == 0) return true; // bare integer constant
    return used == 1 && c.is_one();
}

std::string fraction_str(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_one()) return num.str();
    std::string ns = num.str();
    // wrap sums, and single terms whose coefficient itself prints a slash
    std::string n = (num.terms().size() > 1 || ns.find('/') != std::string::npos) ? "(" + ns + ")" : ns;
    std::string d = atomic_poly(den) ? den.str() : "(" + den.str() + ")";
    return n + "/" + d;
}

} // namespace detail

std::string RatFunc::str() const { return detail::fraction_str(num_, den_); }

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.str(); }

} // namespace freepairs
