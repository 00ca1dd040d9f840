#include "freepairs/weyl.hpp"

#include <algorithm>
#include <sstream>

#include "freepairs/errors.hpp"

namespace freepairs {

namespace {

/** n (n-1) ... (n-k+1). */
Int falling(int n, int k) {
    Int r = 1;
    for (int t = 0; t < k; ++t) r *= n - t;
    return r;
}

Int binom(int n, int k) {
    Int r = 1;
    for (int t = 1; t <= k; ++t) {
        r *= n - t + 1;
        r /= t;
    }
    return r;
}

const std::string kVarX = "X";

} // namespace

WeylElem WeylElem::monomial(int m, int n, const Rat& c) {
    if (m < 0 || n < 0) fail(errc::invalid_spec, "normal-form exponents must be nonnegative");
    WeylElem u;
    u.add_term(m, n, c);
    return u;
}

void WeylElem::add_term(int m, int n, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(Key{m, n}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int WeylElem::max_t_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int WeylElem::max_s_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

WeylElem WeylElem::operator+(const WeylElem& o) const {
    WeylElem r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

WeylElem WeylElem::operator-(const WeylElem& o) const { return *this + (-o); }

WeylElem WeylElem::operator*(const WeylElem& o) const {
    // t^m1 s^n1 * t^m2 s^n2: commute s^n1 past t^m2, contracting k pairs at
    // a time with multiplicity (n1 falling k) * binom(m2, k).
    WeylElem r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            const int n1 = k1.second, m2 = k2.first;
            const int top = std::min(n1, m2);
            for (int k = 0; k <= top; ++k) {
                Rat f = Rat(falling(n1, k) * binom(m2, k)) * c1 * c2;
                r.add_term(k1.first + m2 - k, n1 - k + k2.second, f);
            }
        }
    return r;
}

WeylElem WeylElem::operator*(const Rat& c) const {
    WeylElem r;
    for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
    return r;
}

WeylElem WeylElem::operator-() const { return *this * Rat(-1); }

WeylElem WeylElem::pow(int e) const {
    if (e < 0) fail(errc::invalid_spec, "negative power in the Weyl algebra");
    WeylElem acc = one();
    for (int t = 0; t < e; ++t) acc = acc * *this;
    return acc;
}

std::string WeylElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string body;
        if (k.first > 0) {
            body = "t";
            if (k.first > 1) body += "^" + std::to_string(k.first);
        }
        if (k.second > 0) {
            if (!body.empty()) body += " * ";
            body += "s";
            if (k.second > 1) body += "^" + std::to_string(k.second);
        }
        if (body.empty()) {
            os << c;
        } else if (c == 1) {
            os << body;
        } else {
            os << c << " * " << body;
        }
    }
    return os.str();
}

WeylElem weyl_involution(const WeylInvolutionSpec& spec, const WeylElem& u) {
    if (spec.alpha * spec.alpha + spec.beta * spec.gamma != 1)
        fail(errc::invalid_spec, "involution parameters must satisfy alpha^2 + beta*gamma = 1");
    const WeylElem ss = WeylElem::s() * spec.alpha + WeylElem::t() * spec.beta;
    const WeylElem ts = WeylElem::s() * spec.gamma - WeylElem::t() * spec.alpha;
    WeylElem r;
    for (const auto& [k, c] : u.terms())
        r = r + ss.pow(k.second) * ts.pow(k.first) * c;
    return r;
}

SkewLaurentElem SkewLaurentElem::one() {
    return term(0, RatFunc::one(BaseField::rationals()));
}

SkewLaurentElem SkewLaurentElem::x() {
    return term(0, RatFunc::variable(BaseField::rationals(), kVarX));
}

SkewLaurentElem SkewLaurentElem::y(int e) {
    return term(e, RatFunc::one(BaseField::rationals()));
}

SkewLaurentElem SkewLaurentElem::term(int ypow, const RatFunc& f) {
    SkewLaurentElem u;
    u.add_term(ypow, f);
    return u;
}

void SkewLaurentElem::add_term(int ypow, const RatFunc& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.emplace(ypow, f);
    if (!inserted) {
        it->second = it->second + f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatFunc SkewLaurentElem::coeff(int n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? RatFunc::zero(BaseField::rationals()) : it->second;
}

SkewLaurentElem SkewLaurentElem::operator+(const SkewLaurentElem& o) const {
    SkewLaurentElem r = *this;
    for (const auto& [n, f] : o.terms_) r.add_term(n, f);
    return r;
}

SkewLaurentElem SkewLaurentElem::operator-(const SkewLaurentElem& o) const {
    return *this + (-o);
}

SkewLaurentElem SkewLaurentElem::operator*(const SkewLaurentElem& o) const {
    // (Y^a f) (Y^b g) = Y^(a+b) f(X+b) g
    SkewLaurentElem r;
    for (const auto& [a, f] : terms_)
        for (const auto& [b, g] : o.terms_)
            r.add_term(a + b, f.shift_var(kVarX, b) * g);
    return r;
}

SkewLaurentElem SkewLaurentElem::operator-() const {
    SkewLaurentElem r;
    for (const auto& [n, f] : terms_) r.add_term(n, -f);
    return r;
}

SkewLaurentElem SkewLaurentElem::pow(int e) const {
    if (e < 0) fail(errc::invalid_spec, "negative power of a skew-Laurent element");
    SkewLaurentElem acc = one();
    for (int t = 0; t < e; ++t) acc = acc * *this;
    return acc;
}

std::string SkewLaurentElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, f] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (n == 0) {
            os << f.str();
            continue;
        }
        os << "Y";
        if (n != 1) os << "^" << n;
        if (!f.is_one()) os << " * (" << f.str() << ")";
    }
    return os.str();
}

SkewLaurentElem weyl_to_skew(const WeylElem& u) {
    const SkewLaurentElem simg = SkewLaurentElem::y(-1) * SkewLaurentElem::x();
    const SkewLaurentElem timg = SkewLaurentElem::y();
    if (simg * timg - timg * simg != SkewLaurentElem::one())
        fail(errc::internal, "images do not satisfy st - ts = 1");
    SkewLaurentElem r;
    for (const auto& [k, c] : u.terms()) {
        SkewLaurentElem mono =
            SkewLaurentElem::y(k.first) * simg.pow(k.second) *
            SkewLaurentElem::term(0, RatFunc::constant(BaseField::rationals(), c));
        r = r + mono;
    }
    return r;
}

CycElem weyl_to_cyclic(const ExtDescPtr& ki, const WeylElem& u) {
    if (!ki || ki->field().characteristic() != 3)
        fail(errc::invalid_spec, "target must be the cyclic algebra in characteristic 3");
    const CycElem jimg = CycElem::gen_j(ki);
    const CycElem simg = jimg.inv() * CycElem::gen_i(ki);
    if (simg * jimg - jimg * simg != CycElem::one(ki))
        fail(errc::internal, "images do not satisfy st - ts = 1");
    CycElem r = CycElem::zero(ki);
    for (const auto& [k, c] : u.terms()) {
        if (denominator(c) % 3 == 0)
            fail(errc::not_3_integral, "coefficient denominator divisible by 3");
        RatFunc cbar = RatFunc::constant(ki->field(), c);
        r = r + jimg.pow(k.first) * simg.pow(k.second) * cbar;
    }
    return r;
}

namespace {

MultiPoly derivative_x(const MultiPoly& f) {
    std::vector<MultiPoly> cs = f.to_univariate(kVarX);
    std::vector<MultiPoly> out;
    for (size_t k = 1; k < cs.size(); ++k)
        out.push_back(cs[k].scaled(Scalar::from_int(f.field(), Int(k))));
    return MultiPoly::from_univariate(f.field(), kVarX, out);
}

} // namespace

MultiPoly weyl_action(const WeylElem& u, const MultiPoly& f, int bound) {
    if (!f.field().is_rationals())
        fail(errc::invalid_spec, "action polynomial must have rational coefficients");
    for (const std::string& v : f.vars())
        if (v != kVarX) fail(errc::invalid_spec, "action polynomial must be univariate in X");
    if (f.degree_in(kVarX) + std::max(u.max_t_degree(), 0) >= bound)
        fail(errc::degree_overflow, "action would exceed the degree bound");
    MultiPoly r = MultiPoly::zero(f.field());
    for (const auto& [k, c] : u.terms()) {
        MultiPoly g = f;
        for (int d = 0; d < k.second && !g.is_zero(); ++d) g = derivative_x(g);
        if (g.is_zero()) continue;
        if (k.first > 0) g = g * MultiPoly::variable(f.field(), kVarX, k.first);
        r = r + g.scaled(Scalar(f.field(), c));
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const WeylElem& u) { return os << u.str(); }
std::ostream& operator<<(std::ostream& os, const SkewLaurentElem& u) { return os << u.str(); }

} // namespace freepairs
