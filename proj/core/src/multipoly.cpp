#include "freepairs/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace freepairs {

int var_rank(const std::string& name) {
    if (name == "a") return 0;
    if (name == "b") return 1;
    if (name == "lambda") return 2;
    if (name == "X") return 3;
    return 100; // everything else (generators, formal symbols) sorts after, by name
}

bool var_less(const std::string& lhs, const std::string& rhs) {
    int rl = var_rank(lhs), rr = var_rank(rhs);
    if (rl != rr) return rl < rr;
    return lhs < rhs;
}

bool MultiPoly::GrlexDesc::operator()(const Mono& x, const Mono& y) const {
    // x sorts before y iff x > y in graded lex: higher total degree first,
    // ties broken by the first differing exponent (earlier variable heavier).
    long dx = 0, dy = 0;
    for (int e : x) dx += e;
    for (int e : y) dy += e;
    if (dx != dy) return dx > dy;
    for (size_t i = 0; i < x.size() && i < y.size(); ++i)
        if (x[i] != y[i]) return x[i] > y[i];
    return false;
}

MultiPoly MultiPoly::constant(const Scalar& c) {
    MultiPoly p(c.field());
    if (!c.is_zero()) p.terms_.emplace(Mono{}, c);
    return p;
}

MultiPoly MultiPoly::variable(const BaseField& f, const std::string& name, int exp) {
    if (exp < 0) fail(errc::invalid_spec, "MultiPoly::variable: negative exponent");
    if (exp == 0) return constant(f, 1);
    MultiPoly p(f);
    p.vars_ = {name};
    p.terms_.emplace(Mono{exp}, Scalar::one(f));
    return p;
}

MultiPoly MultiPoly::from_terms(const BaseField& f, std::vector<std::string> vars,
                                std::vector<std::pair<Mono, Scalar>> terms) {
    MultiPoly p(f);
    p.vars_ = std::move(vars);
    for (auto& [m, c] : terms) {
        if (m.size() != p.vars_.size())
            fail(errc::invalid_spec, "MultiPoly::from_terms: exponent arity mismatch");
        p.insert_term(m, c);
    }
    p.prune_vars();
    return p;
}

void MultiPoly::insert_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        Scalar s = it->second + c;
        if (s.is_zero()) terms_.erase(it);
        else it->second = s;
    }
}

void MultiPoly::prune_vars() {
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [m, c] : terms_)
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
    std::vector<std::string> nv;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) nv.push_back(vars_[i]);
    TermMap nt;
    for (const auto& [m, c] : terms_) {
        Mono mm;
        for (size_t i = 0; i < m.size(); ++i)
            if (used[i]) mm.push_back(m[i]);
        nt.emplace(std::move(mm), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

MultiPoly MultiPoly::aligned_to(const std::vector<std::string>& uv) const {
    if (uv == vars_) return *this;
    MultiPoly p(field_);
    p.vars_ = uv;
    std::vector<int> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(uv.begin(), uv.end(), vars_[i]);
        pos[i] = int(it - uv.begin());
    }
    for (const auto& [m, c] : terms_) {
        Mono mm(uv.size(), 0);
        for (size_t i = 0; i < m.size(); ++i) mm[pos[i]] = m[i];
        p.terms_.emplace(std::move(mm), c);
    }
    return p;
}

std::vector<std::string> MultiPoly::var_union(const MultiPoly& x, const MultiPoly& y) {
    std::vector<std::string> uv = x.vars_;
    for (const auto& v : y.vars_)
        if (std::find(uv.begin(), uv.end(), v) == uv.end()) uv.push_back(v);
    std::sort(uv.begin(), uv.end(), var_less);
    return uv;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar MultiPoly::constant_value() const {
    if (terms_.empty()) return Scalar::zero(field_);
    if (!is_constant()) fail(errc::internal, "MultiPoly::constant_value: not constant");
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    long d = 0;
    for (int e : terms_.begin()->first) d += e; // leading term has maximal degree
    return int(d);
}

int MultiPoly::degree_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return terms_.empty() ? -1 : 0;
    size_t idx = it - vars_.begin();
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[idx]);
    return d;
}

Scalar MultiPoly::leading_coeff() const {
    if (terms_.empty()) return Scalar::zero(field_);
    return terms_.begin()->second;
}

MultiPoly MultiPoly::coeff_of(const std::string& var, int exp) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) {
        if (exp == 0) return *this;
        return MultiPoly::zero(field_);
    }
    size_t idx = it - vars_.begin();
    MultiPoly p(field_);
    p.vars_ = vars_;
    for (const auto& [m, c] : terms_) {
        if (m[idx] != exp) continue;
        Mono mm = m;
        mm[idx] = 0;
        p.insert_term(mm, c);
    }
    p.prune_vars();
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (field_ != o.field_) fail(errc::descriptor_mismatch, "MultiPoly: mixed base fields");
    auto uv = var_union(*this, o);
    MultiPoly x = aligned_to(uv), y = o.aligned_to(uv);
    for (const auto& [m, c] : y.terms_) x.insert_term(m, c);
    x.prune_vars();
    return x;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(field_);
    p.vars_ = vars_;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (field_ != o.field_) fail(errc::descriptor_mismatch, "MultiPoly: mixed base fields");
    auto uv = var_union(*this, o);
    MultiPoly x = aligned_to(uv), y = o.aligned_to(uv);
    MultiPoly p(field_);
    p.vars_ = uv;
    for (const auto& [mx, cx] : x.terms_) {
        for (const auto& [my, cy] : y.terms_) {
            Mono m(uv.size());
            for (size_t i = 0; i < uv.size(); ++i) m[i] = mx[i] + my[i];
            p.insert_term(m, cx * cy);
        }
    }
    p.prune_vars();
    return p;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    if (c.is_zero()) return MultiPoly::zero(field_);
    MultiPoly p(field_);
    p.vars_ = vars_;
    for (const auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
    return p;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0) fail(errc::invalid_spec, "MultiPoly::pow: negative exponent");
    MultiPoly acc = constant(field_, 1), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && terms_ == o.terms_;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
    if (vars_ != o.vars_) return vars_ < o.vars_;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return GrlexDesc{}(it->first, jt->first);
        if (it->second != jt->second) return it->second < jt->second;
    }
    return terms_.size() < o.terms_.size();
}

std::vector<MultiPoly> MultiPoly::to_univariate(const std::string& var) const {
    int d = degree_in(var);
    std::vector<MultiPoly> out;
    for (int k = 0; k <= std::max(d, 0); ++k) out.push_back(coeff_of(var, k));
    if (d < 0) out.assign(1, MultiPoly::zero(field_));
    return out;
}

MultiPoly MultiPoly::from_univariate(const BaseField& f, const std::string& var,
                                     const std::vector<MultiPoly>& coeffs) {
    MultiPoly acc = MultiPoly::zero(f);
    for (size_t k = 0; k < coeffs.size(); ++k)
        acc = acc + coeffs[k] * MultiPoly::variable(f, var, int(k));
    return acc;
}

std::optional<MultiPoly> MultiPoly::try_div(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) fail(errc::division_by_zero, "MultiPoly: division by zero polynomial");
    if (num.is_zero()) return MultiPoly::zero(num.field_);
    if (den.is_constant()) return num.scaled(den.constant_value().inv());
    const std::string v = den.vars_.front(); // den definitely uses this variable
    int dd = den.degree_in(v);
    auto dc = den.to_univariate(v);
    auto nc = num.to_univariate(v);
    int nd = int(nc.size()) - 1;
    if (nd < dd) return std::nullopt;
    std::vector<MultiPoly> q(nd - dd + 1, MultiPoly::zero(num.field_));
    for (int k = nd - dd; k >= 0; --k) {
        if (nc[k + dd].is_zero()) continue;
        auto qc = try_div(nc[k + dd], dc[dd]);
        if (!qc) return std::nullopt;
        q[k] = *qc;
        for (int t = 0; t <= dd; ++t) nc[k + t] = nc[k + t] - dc[t] * q[k];
    }
    for (const auto& r : nc)
        if (!r.is_zero()) return std::nullopt;
    return from_univariate(num.field_, v, q);
}

MultiPoly MultiPoly::must_div(const MultiPoly& num, const MultiPoly& den) {
    auto q = try_div(num, den);
    if (!q) fail(errc::internal, "MultiPoly: expected exact division failed");
    return *q;
}

namespace {

// Content of a coefficient list: monic gcd of the entries.
MultiPoly list_content(const BaseField& f, const std::vector<MultiPoly>& list) {
    MultiPoly g = MultiPoly::zero(f);
    for (const auto& c : list) {
        g = MultiPoly::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// Over the rationals, rescale a coefficient list by one common constant so
// every coefficient becomes an integer and the whole list is primitive; the
// subresultant PRS then runs with controlled integer growth.  Units do not
// change the gcd (it is monic-normalized at the end).
void scalar_normalize_list(std::vector<MultiPoly>& list) {
    if (list.empty() || !list.front().field().is_rationals()) return;
    Int g = 0, l = 1;
    for (const auto& p : list)
        for (const auto& [m, c] : p.terms()) {
            g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(c.value()));
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c.value()));
        }
    if (g == 0) return;
    Scalar scale(list.front().field(), Rat(l) / Rat(g));
    for (auto& p : list) p = p.scaled(scale);
}

// Pseudo-remainder of dense univariate polynomials with polynomial
// coefficients: prem(f, g) = lc(g)^(deg f - deg g + 1) * f  mod  g.
std::vector<MultiPoly> prem(std::vector<MultiPoly> f, const std::vector<MultiPoly>& g) {
    auto deg = [](const std::vector<MultiPoly>& u) {
        int d = int(u.size()) - 1;
        while (d >= 0 && u[d].is_zero()) --d;
        return d;
    };
    int df = deg(f), dg = deg(g);
    const MultiPoly& lcg = g[dg];
    int e = df - dg + 1;
    while (true) {
        int d = deg(f);
        if (d < dg) break;
        MultiPoly lcf = f[d];
        for (auto& c : f) c = c * lcg;
        for (int t = 0; t <= dg; ++t)
            f[d - dg + t] = f[d - dg + t] - lcf * g[t];
        --e;
    }
    for (int k = 0; k < e; ++k)
        for (auto& c : f) c = c * lcg;
    return f;
}

} // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& x, const MultiPoly& y) {
    if (x.is_zero() && y.is_zero()) return x;
    if (x.is_zero()) return y.scaled(y.leading_coeff().inv());
    if (y.is_zero()) return x.scaled(x.leading_coeff().inv());
    if (x.is_constant() || y.is_constant()) return constant(x.field_, 1);

    // Main variable: the earliest one present; the gcd is computed as a
    // univariate subresultant PRS over the polynomial ring in the rest.
    std::vector<std::string> uv = var_union(x, y);
    const std::string v = uv.front();
    if (!x.uses_var(v) || !y.uses_var(v)) {
        // v appears in only one of them: gcd divides the v-free one, so it is
        // v-free; recurse on the v-coefficients of the other.
        const MultiPoly& with = x.uses_var(v) ? x : y;
        const MultiPoly& without = x.uses_var(v) ? y : x;
        MultiPoly g = without;
        for (const auto& c : with.to_univariate(v)) {
            g = gcd(g, c);
            if (g.is_one()) break;
        }
        return g;
    }

    auto fx = x.to_univariate(v), fy = y.to_univariate(v);
    MultiPoly contx = list_content(x.field_, fx), conty = list_content(x.field_, fy);
    for (auto& c : fx) c = must_div(c, contx);
    for (auto& c : fy) c = must_div(c, conty);
    MultiPoly cont_gcd = gcd(contx, conty);

    scalar_normalize_list(fx);
    scalar_normalize_list(fy);

    auto deg = [](const std::vector<MultiPoly>& u) {
        int d = int(u.size()) - 1;
        while (d >= 0 && u[d].is_zero()) --d;
        return d;
    };
    std::vector<MultiPoly> f = fx, g = fy;
    if (deg(f) < deg(g)) std::swap(f, g);

    const BaseField& F = x.field_;
    MultiPoly psi = constant(F, -1);
    int d = deg(f) - deg(g);
    MultiPoly beta = (d % 2 == 0) ? constant(F, -1) : constant(F, 1); // (-1)^(d+1)
    while (true) {
        std::vector<MultiPoly> r = prem(f, g);
        if (deg(r) < 0) break;
        for (auto& c : r) c = must_div(c, beta);
        MultiPoly lcg = g[deg(g)];
        // update psi then beta for the next round (subresultant bookkeeping)
        if (d > 0) {
            MultiPoly num = (-lcg).pow(d);
            psi = (d == 1) ? num : must_div(num, psi.pow(d - 1));
        }
        f = g;
        g = r;
        d = deg(f) - deg(g);
        beta = -lcg * psi.pow(d);
    }
    if (deg(g) == 0) return cont_gcd;
    // primitive part of the last nonzero remainder, times the content gcd
    MultiPoly cont = list_content(F, g);
    MultiPoly result = MultiPoly::zero(F);
    for (int k = deg(g); k >= 0; --k)
        result = result + must_div(g[k], cont) * variable(F, v, k);
    result = result * cont_gcd;
    return result.scaled(result.leading_coeff().inv());
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Scalar coeff = c;
        bool neg = false;
        if (field_.is_rationals() && coeff.value() < 0) {
            neg = true;
            coeff = -coeff;
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        std::string varpart;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!varpart.empty()) varpart += "*";
            varpart += vars_[i];
            if (m[i] != 1) varpart += "^" + std::to_string(m[i]);
        }
        if (varpart.empty()) {
            os << coeff.str();
        } else if (coeff.is_one()) {
            os << varpart;
        } else {
            os << coeff.str() << "*" << varpart;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

} // namespace freepairs
