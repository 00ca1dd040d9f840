#include "freepairs/place.hpp"

#include <algorithm>

#include "freepairs/parse.hpp"

namespace freepairs {

namespace {

long ord_poly_at(const MultiPoly& q, const MultiPoly& p) {
    if (q.is_zero()) fail(errc::zero_input, "ord at a prime of the zero polynomial");
    long n = 0;
    MultiPoly cur = q;
    for (;;) {
        auto div = MultiPoly::try_div(cur, p);
        if (!div) return n;
        cur = *div;
        ++n;
    }
}

/** Coefficient-wise reduction of a polynomial modulo the residue minpoly. */
ExtElem reduce_poly_into(const ExtDescPtr& residue, const std::string& base_var,
                         const MultiPoly& q) {
    std::vector<RatFunc> coeffs;
    for (const auto& c : q.to_univariate(base_var)) coeffs.emplace_back(c);
    return ExtElem(residue, std::move(coeffs));
}

std::vector<MultiPoly> integral_coords(const ExtElem& x) {
    std::vector<MultiPoly> out;
    out.reserve(x.coeffs().size());
    for (const auto& c : x.coeffs()) {
        if (!c.is_polynomial())
            fail(errc::internal, "integral_coords: element unexpectedly has denominators");
        out.push_back(c.num());
    }
    return out;
}

ExtElem from_coords(const ExtDescPtr& d, const std::vector<MultiPoly>& coords) {
    std::vector<RatFunc> c;
    c.reserve(coords.size());
    for (const auto& q : coords) c.emplace_back(q);
    return ExtElem(d, std::move(c));
}

} // namespace

struct Place::Parts {
    std::string name;
    ExtDescPtr field;
    std::string base_var;
    MultiPoly base_prime;
    ExtDescPtr residue;
    ExtElem gen_image;
    ExtElem uniformizer;
    ExtElem u;
    MultiPoly m_tilde;
    ExtElem res_u_inv;
    ExtElem theta;
    ExtElem theta_inv;
};

Place::Place(Parts p)
    : name_(std::move(p.name)), field_(std::move(p.field)), base_var_(std::move(p.base_var)),
      base_prime_(std::move(p.base_prime)), residue_(std::move(p.residue)),
      gen_image_(std::move(p.gen_image)), uniformizer_(std::move(p.uniformizer)),
      u_(std::move(p.u)), m_tilde_(std::move(p.m_tilde)), res_u_inv_(std::move(p.res_u_inv)),
      theta_(std::move(p.theta)), theta_inv_(std::move(p.theta_inv)) {}

long Place::ord_poly(const MultiPoly& q) const { return ord_poly_at(q, base_prime_); }

long Place::ord_base(const RatFunc& r) const {
    if (r.is_zero()) fail(errc::zero_input, "ord at " + name_ + " of zero");
    return ord_poly(r.num()) - ord_poly(r.den());
}

ExtElem Place::residue_of_poly(const MultiPoly& c) const {
    return reduce_poly_into(residue_, base_var_, c);
}

ExtElem Place::residue_of_base(const RatFunc& r) const {
    ExtElem den = residue_of_poly(r.den());
    if (den.is_zero())
        fail(errc::internal, "residue_of_base: denominator is not prime to the place");
    return residue_of_poly(r.num()) * den.inv();
}

Place::Value Place::analyze(const ExtElem& x) const {
    if (x.is_zero()) fail(errc::zero_input, "valuation of zero at " + name_);
    if (*x.descriptor() != *field_)
        fail(errc::descriptor_mismatch, "analyze: element lives in a different extension");

    auto split = x.integral_split();
    std::vector<MultiPoly> coords = std::move(split.first);

    // denominator: c = p^j * c_tilde with p not dividing c_tilde
    long j = 0;
    MultiPoly c_tilde = std::move(split.second);
    for (;;) {
        auto q = MultiPoly::try_div(c_tilde, base_prime_);
        if (!q) break;
        c_tilde = *q;
        ++j;
    }

    auto res_coords = [&](const std::vector<MultiPoly>& cs) {
        ExtElem acc = ExtElem::zero(residue_);
        for (size_t k = cs.size(); k-- > 0;)
            acc = acc * gen_image_ + residue_of_poly(cs[k]);
        return acc;
    };

    long nu = 0;
    ExtElem rho_corr = ExtElem::one(residue_);
    for (int guard = 0; guard < 10000; ++guard) {
        // strip common powers of p from the integral coordinates
        long strip = -1;
        for (const auto& q : coords) {
            if (q.is_zero()) continue;
            long o = ord_poly(q);
            strip = (strip < 0) ? o : std::min(strip, o);
            if (strip == 0) break;
        }
        if (strip > 0) {
            for (auto& q : coords)
                if (!q.is_zero())
                    for (long t = 0; t < strip; ++t) q = MultiPoly::must_div(q, base_prime_);
            nu += strip;
            rho_corr = rho_corr * theta_.pow(strip);
        }
        ExtElem r = res_coords(coords);
        if (!r.is_zero()) {
            ExtElem rho = r * rho_corr;
            if (j != 0) rho = rho * theta_inv_.pow(j);
            if (!c_tilde.is_one()) rho = rho * residue_of_poly(c_tilde).inv();
            return Value{nu - j, std::move(rho)};
        }
        // residue zero without p-content: peel one uniformizer via f <- f * u
        ExtElem f = from_coords(field_, coords) * u_;
        coords = integral_coords(f);
        rho_corr = rho_corr * res_u_inv_;
    }
    fail(errc::internal, "analyze: divide-by-uniformizer loop did not terminate");
}

long Place::valuation_of(const ExtElem& x) const { return analyze(x).nu; }

std::optional<ExtElem> Place::residue_of(const ExtElem& x) const {
    if (x.is_zero()) return ExtElem::zero(residue_);
    auto [coords, c] = x.integral_split();
    if (ord_poly(c) == 0) {
        // denominator prime to p: reduce coordinates directly
        ExtElem acc = ExtElem::zero(residue_);
        for (size_t k = coords.size(); k-- > 0;)
            acc = acc * gen_image_ + residue_of_poly(coords[k]);
        return acc * residue_of_poly(c).inv();
    }
    Value v = analyze(x);
    if (v.nu < 0) return std::nullopt;
    if (v.nu == 0) return v.unit_residue;
    return ExtElem::zero(residue_);
}

Place make_place(const ExtDescPtr& field, const std::string& base_var, const MultiPoly& base_prime,
                 const std::string& gen_image, const ExtElem& uniformizer, const std::string& name) {
    const BaseField& F = field->field();
    const auto& vars = field->vars();
    if (std::find(vars.begin(), vars.end(), base_var) == vars.end())
        fail(errc::invalid_spec, "make_place: base variable is not part of the extension's base field");
    if (base_prime.field() != F)
        fail(errc::descriptor_mismatch, "make_place: base prime lives over the wrong coefficient field");
    for (const auto& c : field->minpoly())
        if (!c.is_polynomial())
            fail(errc::invalid_spec,
                 "make_place: defining polynomial must have polynomial coefficients");
    const int dp = base_prime.degree_in(base_var);
    if (dp < 1) fail(errc::invalid_spec, "make_place: base prime must involve the base variable");
    if (dp > 2) fail(errc::invalid_spec, "make_place: residue degree above 2 is not supported");
    if (*uniformizer.descriptor() != *field)
        fail(errc::descriptor_mismatch, "make_place: uniformizer lives in a different extension");
    if (uniformizer.is_zero() || !uniformizer.is_integral())
        fail(errc::invalid_spec, "make_place: uniformizer must be a nonzero integral element");

    auto pc = base_prime.to_univariate(base_var);
    if (!pc[static_cast<size_t>(dp)].is_constant())
        fail(errc::invalid_spec, "make_place: base prime must have a constant leading coefficient");
    MultiPoly p_monic = base_prime.scaled(pc[static_cast<size_t>(dp)].constant_value().inv());

    std::vector<std::string> rest;
    for (const auto& v : vars)
        if (v != base_var) rest.push_back(v);
    std::vector<RatFunc> rmp;
    for (const auto& c : p_monic.to_univariate(base_var)) rmp.emplace_back(c);
    ExtDescPtr residue = make_ext_descriptor(F, std::move(rest), base_var, std::move(rmp));

    ExtElem gi = parse_ext(residue, gen_image);

    // the generator image must satisfy the extension's defining relation
    ExtElem eval = ExtElem::zero(residue);
    {
        const auto& mp = field->minpoly();
        for (size_t k = mp.size(); k-- > 0;)
            eval = eval * gi + reduce_poly_into(residue, base_var, mp[k].num());
    }
    if (!eval.is_zero())
        fail(errc::invalid_place, "GEN_IMAGE_NOT_ROOT: " + gen_image +
                                      " does not satisfy the defining relation at " + name);

    // the uniformizer must reduce to zero
    ExtElem res_pi = ExtElem::zero(residue);
    for (size_t k = uniformizer.coeffs().size(); k-- > 0;)
        res_pi = res_pi * gi + reduce_poly_into(residue, base_var, uniformizer.coeff(static_cast<int>(k)).num());
    if (!res_pi.is_zero())
        fail(errc::invalid_place,
             "UNIFORMIZER_NOT_IN_PRIME: residue of the uniformizer is nonzero at " + name);

    // exactly one power of the base prime in the norm (unramified, residue degree 1 over p)
    RatFunc nrm = uniformizer.norm();
    long ord_norm = ord_poly_at(nrm.num(), p_monic) - ord_poly_at(nrm.den(), p_monic);
    if (ord_norm != 1)
        fail(errc::invalid_place, "RAMIFICATION_UNSUPPORTED: norm of the uniformizer has order " +
                                      std::to_string(ord_norm) + " (need 1) at " + name);

    // precompute pi^-1 = u / (p * m_tilde)
    ExtElem pinv = uniformizer.inv();
    auto [ucoords, m] = pinv.integral_split();
    if (ord_poly_at(m, p_monic) != 1)
        fail(errc::internal, "make_place: denominator of 1/pi should contain p exactly once");
    MultiPoly m_tilde = MultiPoly::must_div(m, p_monic);
    ExtElem u = from_coords(field, ucoords);

    ExtElem res_u = ExtElem::zero(residue);
    for (size_t k = ucoords.size(); k-- > 0;)
        res_u = res_u * gi + reduce_poly_into(residue, base_var, ucoords[k]);
    if (res_u.is_zero()) fail(errc::internal, "make_place: residue of the inverse numerator vanishes");
    ExtElem res_mt = reduce_poly_into(residue, base_var, m_tilde);
    if (res_mt.is_zero()) fail(errc::internal, "make_place: residue of the cleared denominator vanishes");
    ExtElem theta = res_u * res_mt.inv();

    Place::Parts parts{name,          field,         base_var, p_monic, residue, gi,
                       uniformizer,   u,             m_tilde,  res_u.inv(), theta,
                       theta.inv()};
    return Place(std::move(parts));
}

} // namespace freepairs
