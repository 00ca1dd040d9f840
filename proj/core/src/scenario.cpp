#include "freepairs/scenario.hpp"

#include <json.hpp>
#include <sstream>

#include "freepairs/parse.hpp"
#include "freepairs/weyl.hpp"

namespace freepairs {

namespace {

using Rows = std::vector<std::pair<std::string, std::string>>;

void put(Rows& rows, std::string name, std::string value) {
    rows.emplace_back(std::move(name), std::move(value));
}

void check(ScenarioReport& r, std::string name, bool ok) {
    r.checks.emplace_back(std::move(name), ok);
}

RatFunc rf(const BaseField& f, const std::string& text) { return parse_ratfunc(f, text); }

QuatElem quat(const BaseField& f, const std::string& c0, const std::string& c1,
              const std::string& c2, const std::string& c3) {
    return QuatElem(f, {rf(f, c0), rf(f, c1), rf(f, c2), rf(f, c3)});
}

RatFunc central_value(const QuatElem& x) {
    if (!x.is_central()) fail(errc::internal, "expected a central quaternion value");
    return x.coord(0);
}

const char* specialization_note(QuatSpecialization kind) {
    return kind == QuatSpecialization::PSI ? "specialization: lambda -> -1, x -> i, y -> j"
                                           : "specialization: lambda -> -1, x -> i, y -> ij";
}

/**
 * Involution of the quaternion algebra induced by a group involution through
 * the specialization: the generator images are the specialized images of the
 * starred generators, and the center map is read off their squares.  The
 * construction is validated by make_quat_involution, so a specialization that
 * fails to preserve the involution cannot slip through.
 */
QuatInvolution transport_involution(QuatSpecialization kind, const HeisInvolution& inv,
                                    const BaseField& f) {
    QuatElem i_star = specialize_quat(kind, f, inv(heis_x()));
    QuatElem y_star = specialize_quat(kind, f, inv(heis_y()));
    RatFunc sigma_a = central_value(i_star * i_star);
    // When y specializes to ij, the image of j = a^-1 i (ij) under an
    // anti-automorphism is (ij)* i* sigma(a)^-1.
    QuatElem j_star = kind == QuatSpecialization::PSI
                          ? y_star
                          : (y_star * i_star) * (RatFunc::one(f) / sigma_a);
    RatFunc sigma_b = central_value(j_star * j_star);
    return make_quat_involution(i_star, j_star, sigma_a, sigma_b);
}

/** Cayley transform (1 - r)(1 + r)^-1 split into a numerator (1 - r)^2 and a
 *  central denominator 1 - r^2, for r with a central square. */
struct CayleySplit {
    QuatElem image;
    QuatElem numerator;
    RatFunc denominator;
};

CayleySplit cayley_split(const QuatElem& r) {
    const BaseField& f = r.field();
    QuatElem one = QuatElem::one(f);
    QuatElem num = (one - r) * (one - r);
    RatFunc den = central_value(one - r * r);
    CayleySplit cs{cayley(r), num, den};
    if (cs.image * QuatElem::constant(den) != num) fail(errc::internal, "cayley split mismatch");
    return cs;
}

Place place_over(const ExtDescPtr& d, const std::string& var, const std::string& prime,
                 const std::string& gen_image, const std::string& uniformizer,
                 const std::string& name) {
    const BaseField& f = d->field();
    return make_place(d, var, rf(f, prime).num(), gen_image, parse_ext(d, uniformizer), name);
}

long central_valuation(const Place& pl, const RatFunc& c) {
    return pl.valuation_of(ExtElem::constant(pl.field_descriptor(), c));
}

std::string factor_note(const Place& pl, const std::string& what, const RatFunc& c) {
    return what + " " + c.str() + " has valuation " +
           std::to_string(central_valuation(pl, c)) + " at " + pl.name();
}

/**
 * Specialize b to a fixed rational point before word sampling.  A relation
 * between the target images would survive the substitution, so a clean sample
 * is still evidence for the pair itself, while the matrix arithmetic drops
 * from two base variables to one.  Only b may be specialized here: the
 * quaternion descriptor used by these scenarios keeps a in its minimal
 * polynomial.
 */
constexpr long kSampleB = 5;

SqMatrix at_sample_point(const SqMatrix& m) {
    const BaseField& f = m.descriptor()->field();
    std::map<std::string, RatFunc> im{{"b", RatFunc::constant(f, Rat(kSampleB))}};
    return m.map([&](const ExtElem& e) {
        return e.map_coeffs([&](const RatFunc& r) { return r.subst(im); });
    });
}

WordSampleReport sample_at_point(const SqMatrix& g, const SqMatrix& h,
                                 unsigned long long seed) {
    return sample_words(at_sample_point(g), at_sample_point(h), 8, 200, seed);
}

std::string sample_point_note() {
    return "words are evaluated after substituting b = " + std::to_string(kSampleB) +
           " into the generators; a relation between the images would survive the "
           "substitution, so a clean sample remains evidence for the target pair";
}

void set_partial(ScenarioReport& r) {
    if (!r.certificate || !r.certificate->certified() ||
        r.certificate->strength != Strength::SUBGROUP_WITNESS)
        fail(errc::internal, "partial verdict requires a certified subgroup witness");
    if (!r.words || !r.words->passed())
        fail(errc::internal, "partial verdict requires a clean word sample");
    if (!r.all_checks_passed()) fail(errc::internal, "partial verdict with failing checks");
    r.verdict = ScenarioVerdict::PARTIAL;
}

void set_certified(ScenarioReport& r) {
    if (!r.certificate || !r.certificate->certified() ||
        r.certificate->strength != Strength::EXACT_PAIR)
        fail(errc::internal, "certified verdict requires an exact-pair certificate");
    if (!r.all_checks_passed()) fail(errc::internal, "certified verdict with failing checks");
    r.verdict = ScenarioVerdict::CERTIFIED;
}

/** Shared state for the group-ring scenarios over the rationals. */
struct HeisContext {
    BaseField f = BaseField::rationals();
    ExtDescPtr L, K;
    GroupRingElem one;
    HeisContext() : L(quat_desc_L(f)), K(quat_desc_K(f)), one(GroupRingElem::one(f)) {}
    GroupRingElem g(const HeisElem& e) const { return GroupRingElem::group_elem(f, e); }
};

Place place_1_plus_2i(const HeisContext& c) {
    return place_over(c.L, "a", "1-4*a", "-1/2", "1+2*i", "P(1+2i)");
}

Place place_1_plus_i(const HeisContext& c) {
    return place_over(c.L, "a", "1-a", "-1", "1+i", "P(1+i)");
}

void note_involution(ScenarioReport& r, const HeisInvolution& inv, QuatSpecialization kind) {
    r.notes.push_back(std::string("involution: ") + inv.str());
    r.notes.push_back(specialization_note(kind));
}

const char kWitnessNote[] =
    "the certificate proves {A, B^-1 A B} free, a witness pair inside the group generated by "
    "the images; the word sample tests the target pair directly";

const char kCentralScalingNote[] =
    "central factors cancel in the conjugate B^-1 A B and shift the diagonal valuations of A "
    "uniformly, so the certified pair and the target pair have the same image in the "
    "projective group and are free together";

ScenarioReport sym_i_even_even(const HeisContext& c, const HeisInvolution& inv,
                               unsigned long long seed) {
    ScenarioReport r;
    r.id = "heis/sym/I/even-even";
    GroupRingElem u = c.one + c.g(heis_x()) + c.g(inv(heis_x()));
    GroupRingElem v = c.one + c.g(heis_y()) + c.g(inv(heis_y()));
    put(r.elements, "u", u.str());
    put(r.elements, "v", v.str());
    check(r, "u* = u", involution_apply(inv, u) == u);
    check(r, "v* = v", involution_apply(inv, v) == v);

    QuatInvolution qinv = transport_involution(QuatSpecialization::PSI, inv, c.f);
    QuatElem qu = specialize_quat(QuatSpecialization::PSI, u);
    QuatElem qv = specialize_quat(QuatSpecialization::PSI, v);
    put(r.images, "psi(u)", qu.str());
    put(r.images, "psi(v)", qv.str());
    check(r, "psi(u) = 1 + 2i", qu == quat(c.f, "1", "2", "0", "0"));
    check(r, "psi(v) = 1 + 2j", qv == quat(c.f, "1", "0", "2", "0"));
    check(r, "psi(u) is symmetric", is_symmetric(qinv, qu));
    check(r, "psi(v) is symmetric", is_symmetric(qinv, qv));

    SqMatrix A = quat_rep_L(qu), B = quat_rep_L(qv);
    put(r.matrices, "A", A.str());
    put(r.matrices, "B", B.str());
    Place pl = place_1_plus_2i(c);
    r.certificate = certify(A, B, pl, Strength::SUBGROUP_WITNESS);
    r.words = sample_at_point(A, B, seed);
    note_involution(r, inv, QuatSpecialization::PSI);
    r.notes.push_back("the target pair is {u, v}, realized by the images {1+2i, 1+2j}");
    r.notes.push_back(kWitnessNote);
    r.notes.push_back("the same image pair underlies heis/sym/IV/even");
    set_partial(r);
    return r;
}

ScenarioReport sym_i_even_odd(const HeisContext& c, const HeisInvolution& inv) {
    ScenarioReport r;
    r.id = "heis/sym/I/even-odd";
    GroupRingElem u = c.one + c.g(heis_x()) + c.g(inv(heis_x()));
    GroupRingElem d = c.g(heis_y()) - c.g(inv(heis_y()));
    put(r.elements, "u", u.str());
    put(r.elements, "r", d.str());
    check(r, "u* = u", involution_apply(inv, u) == u);
    check(r, "r* = -r", involution_apply(inv, d) == -d);

    QuatInvolution qinv = transport_involution(QuatSpecialization::PSI, inv, c.f);
    QuatElem qu = specialize_quat(QuatSpecialization::PSI, u);
    QuatElem qr = specialize_quat(QuatSpecialization::PSI, d);
    check(r, "psi(u) = 1 + 2i", qu == quat(c.f, "1", "2", "0", "0"));
    check(r, "psi(r) = 2j", qr == quat(c.f, "0", "0", "2", "0"));
    CayleySplit cs = cayley_split(qr);
    put(r.images, "psi(u)", qu.str());
    put(r.images, "psi(r)", qr.str());
    put(r.images, "psi(v)", cs.image.str());
    check(r, "psi(u) is symmetric", is_symmetric(qinv, qu));
    check(r, "psi(r) is skew", qinv(qr) == -qr);
    check(r, "psi(v) is unitary", is_unitary(qinv, cs.image));
    check(r, "psi(v)^-1 psi(u) psi(v) is symmetric",
          is_symmetric(qinv, cs.image.inv() * qu * cs.image));

    SqMatrix A = quat_rep_L(qu), B = quat_rep_L(cs.numerator);
    put(r.matrices, "A", A.str());
    put(r.matrices, "B", B.str());
    Place pl = place_1_plus_2i(c);
    r.certificate = certify(A, B, pl, Strength::EXACT_PAIR);
    note_involution(r, inv, QuatSpecialization::PSI);
    r.notes.push_back("v = (1 - r)(1 + r)^-1; B represents the numerator (1 - psi(r))^2");
    r.notes.push_back(factor_note(pl, "the central Cayley denominator", cs.denominator) +
                      " and cancels in B^-1 A B, so the certified pair is exactly the image "
                      "of the target pair {u, v^-1 u v}");
    set_certified(r);
    return r;
}

ScenarioReport sym_i_odd_even(const HeisContext& c, const HeisInvolution& inv) {
    ScenarioReport r;
    r.id = "heis/sym/I/odd-even";
    GroupRingElem d = c.g(heis_x()) - c.g(inv(heis_x()));
    GroupRingElem v = c.one + c.g(heis_y()) + c.g(inv(heis_y()));
    put(r.elements, "r", d.str());
    put(r.elements, "v", v.str());
    check(r, "r* = -r", involution_apply(inv, d) == -d);
    check(r, "v* = v", involution_apply(inv, v) == v);

    QuatInvolution qinv = transport_involution(QuatSpecialization::PSI, inv, c.f);
    QuatElem qr = specialize_quat(QuatSpecialization::PSI, d);
    QuatElem qv = specialize_quat(QuatSpecialization::PSI, v);
    check(r, "psi(r) = 2i", qr == quat(c.f, "0", "2", "0", "0"));
    check(r, "psi(v) = 1 + 2j", qv == quat(c.f, "1", "0", "2", "0"));
    CayleySplit cs = cayley_split(qr);
    put(r.images, "psi(r)", qr.str());
    put(r.images, "psi(v)", qv.str());
    put(r.images, "psi(u)", cs.image.str());
    check(r, "psi(v) is symmetric", is_symmetric(qinv, qv));
    check(r, "psi(r) is skew", qinv(qr) == -qr);
    check(r, "psi(u) is unitary", is_unitary(qinv, cs.image));
    check(r, "psi(u)^-1 psi(v) psi(u) is symmetric",
          is_symmetric(qinv, cs.image.inv() * qv * cs.image));

    SqMatrix A = quat_rep_K(qv), B = quat_rep_K(cs.numerator);
    put(r.matrices, "A", A.str());
    put(r.matrices, "B", B.str());
    Place pl = place_over(c.K, "b", "1-4*b", "-1/2", "1+2*j", "P(1+2j)");
    r.certificate = certify(A, B, pl, Strength::EXACT_PAIR);
    note_involution(r, inv, QuatSpecialization::PSI);
    r.notes.push_back("mirror of heis/sym/I/even-odd: the representation is taken over the "
                      "subfield generated by j, so the symmetric image 1 + 2j is diagonal");
    r.notes.push_back("u = (1 - r)(1 + r)^-1; B represents the numerator (1 - psi(r))^2");
    r.notes.push_back(factor_note(pl, "the central Cayley denominator", cs.denominator) +
                      " and cancels in B^-1 A B, so the certified pair is exactly the image "
                      "of the target pair {v, u^-1 v u}");
    set_certified(r);
    return r;
}

ScenarioReport sym_i_odd_odd(const HeisContext& c, const HeisInvolution& inv) {
    ScenarioReport r;
    r.id = "heis/sym/I/odd-odd";
    QuatInvolution qinv = transport_involution(QuatSpecialization::PSI, inv, c.f);
    QuatElem qi = QuatElem::unit_i(c.f), qj = QuatElem::unit_j(c.f);
    check(r, "transported involution negates i", qinv(qi) == -qi);
    check(r, "transported involution negates j", qinv(qj) == -qj);
    check(r, "transported involution negates ij", qinv(qi * qj) == -(qi * qj));
    note_involution(r, inv, QuatSpecialization::PSI);
    r.notes.push_back("the transported involution is quaternion conjugation, whose symmetric "
                      "elements are exactly the central ones; a symmetric pair therefore "
                      "cannot generate a nonabelian free group and the construction does not "
                      "apply");
    r.notes.push_back("the existence of a free symmetric pair upstairs is left open");
    return r;
}

ScenarioReport sym_ii(const HeisContext& c, const HeisInvolution& inv,
                      unsigned long long seed) {
    ScenarioReport r;
    r.id = "heis/sym/II";
    GroupRingElem u = c.one + c.g(heis_x()) + c.g(inv(heis_x()));
    GroupRingElem v = c.one + c.g(heis_y()) + c.g(inv(heis_y()));
    put(r.elements, "u", u.str());
    put(r.elements, "v", v.str());
    check(r, "u* = u", involution_apply(inv, u) == u);
    check(r, "v* = v", involution_apply(inv, v) == v);

    QuatInvolution qinv = transport_involution(QuatSpecialization::PSI, inv, c.f);
    QuatElem qu = specialize_quat(QuatSpecialization::PSI, u);
    QuatElem qv = specialize_quat(QuatSpecialization::PSI, v);
    put(r.images, "psi(u)", qu.str());
    put(r.images, "psi(v)", qv.str());
    check(r, "psi(u) = 1 + (1 + 1/a) i", qu == quat(c.f, "1", "1+1/a", "0", "0"));
    check(r, "psi(v) = 1 + (1 + 1/b) j", qv == quat(c.f, "1", "0", "1+1/b", "0"));
    check(r, "psi(u) is symmetric", is_symmetric(qinv, qu));
    check(r, "psi(v) is symmetric", is_symmetric(qinv, qv));

    QuatElem qa = qu * rf(c.f, "a"), qb = qv * rf(c.f, "b");
    check(r, "a psi(u) = a + (1 + a) i", qa == quat(c.f, "a", "1+a", "0", "0"));
    check(r, "b psi(v) = b + (1 + b) j", qb == quat(c.f, "b", "0", "1+b", "0"));
    SqMatrix A = quat_rep_L(qa), B = quat_rep_L(qb);
    put(r.matrices, "A", A.str());
    put(r.matrices, "B", B.str());
    Place pl = place_over(c.L, "a", "a^2+a+1", "-1-a", "a+(1+a)*i", "P(a+(1+a)i)");
    r.certificate = certify(A, B, pl, Strength::SUBGROUP_WITNESS);
    r.words = sample_at_point(quat_rep_L(qu), quat_rep_L(qv), seed);
    note_involution(r, inv, QuatSpecialization::PSI);
    r.notes.push_back("A and B are the images scaled by the central factors a and b to clear "
                      "denominators; " + factor_note(pl, "the factor", rf(c.f, "a")) +
                      " and " + factor_note(pl, "the factor", rf(c.f, "b")));
    r.notes.push_back(kCentralScalingNote);
    r.notes.push_back(kWitnessNote);
    r.notes.push_back(sample_point_note());
    set_partial(r);
    return r;
}

ScenarioReport sym_iii(const HeisContext& c, const HeisInvolution& inv, bool odd) {
    ScenarioReport r;
    r.id = odd ? "heis/sym/III/odd" : "heis/sym/III/even";
    GroupRingElem u = c.one + c.g(heis_x());
    HeisElem w = heis_mul(heis_x(), heis_pow(heis_y(), odd ? 1 : 5));
    GroupRingElem d = c.g(w) - c.g(inv(w));
    put(r.elements, "u", u.str());
    put(r.elements, "r", d.str());
    check(r, "u* = u", involution_apply(inv, u) == u);
    check(r, "r* = -r", involution_apply(inv, d) == -d);

    QuatInvolution qinv = transport_involution(QuatSpecialization::PSI, inv, c.f);
    QuatElem qu = specialize_quat(QuatSpecialization::PSI, u);
    QuatElem qr = specialize_quat(QuatSpecialization::PSI, d);
    check(r, "psi(u) = 1 + i", qu == quat(c.f, "1", "1", "0", "0"));
    if (odd)
        check(r, "psi(r) = (1 - 1/b) ij", qr == quat(c.f, "0", "0", "0", "1-1/b"));
    else
        check(r, "psi(r) = (b^2 + 1/b^3) ij", qr == quat(c.f, "0", "0", "0", "(1+b^5)/b^3"));
    CayleySplit cs = cayley_split(qr);
    put(r.images, "psi(u)", qu.str());
    put(r.images, "psi(r)", qr.str());
    put(r.images, "psi(v)", cs.image.str());
    check(r, "psi(u) is symmetric", is_symmetric(qinv, qu));
    check(r, "psi(r) is skew", qinv(qr) == -qr);
    check(r, "psi(v) is unitary", is_unitary(qinv, cs.image));
    check(r, "psi(v)^-1 psi(u) psi(v) is symmetric",
          is_symmetric(qinv, cs.image.inv() * qu * cs.image));

    SqMatrix A = quat_rep_L(qu), B = quat_rep_L(cs.numerator);
    put(r.matrices, "A", A.str());
    put(r.matrices, "B", B.str());
    Place pl = place_1_plus_i(c);
    r.certificate = certify(A, B, pl, Strength::EXACT_PAIR);
    note_involution(r, inv, QuatSpecialization::PSI);
    r.notes.push_back(odd ? "r = xy - (xy)*" : "r = xy^5 - (xy^5)*");
    r.notes.push_back("v = (1 - r)(1 + r)^-1; B represents the numerator (1 - psi(r))^2");
    r.notes.push_back(factor_note(pl, "the central Cayley denominator", cs.denominator) +
                      " and cancels in B^-1 A B, so the certified pair is exactly the image "
                      "of the target pair {u, v^-1 u v}");
    set_certified(r);
    return r;
}

ScenarioReport sym_iv(const HeisContext& c, const HeisInvolution& inv, bool odd,
                      unsigned long long seed) {
    ScenarioReport r;
    r.id = odd ? "heis/sym/IV/odd" : "heis/sym/IV/even";
    GroupRingElem u = c.one;
    if (odd) {
        GroupRingElem degenerate = c.one + c.g(heis_x()) + c.g(inv(heis_y()));
        check(r, "without the central twist, psi(1 + x + y*) = 1",
              specialize_quat(QuatSpecialization::PSI, degenerate).is_one());
        HeisElem zeta_ystar =
            heis_mul(heis_pow(heis_lambda(), inv.param_m()), inv(heis_y()));
        u = c.one + c.g(heis_x()) + c.g(zeta_ystar);
    } else {
        u = c.one + c.g(heis_x()) + c.g(inv(heis_y()));
    }
    GroupRingElem us = involution_apply(inv, u);
    GroupRingElem p1 = u * us, p2 = us * u;
    put(r.elements, "u", u.str());
    put(r.elements, "u*", us.str());
    put(r.elements, "u u*", p1.str());
    put(r.elements, "u* u", p2.str());
    check(r, "(u*)* = u", involution_apply(inv, us) == u);
    check(r, "(u u*)* = u u*", involution_apply(inv, p1) == p1);
    check(r, "(u* u)* = u* u", involution_apply(inv, p2) == p2);

    QuatInvolution qinv = transport_involution(QuatSpecialization::PSI, inv, c.f);
    QuatElem qu = specialize_quat(QuatSpecialization::PSI, u);
    QuatElem qus = specialize_quat(QuatSpecialization::PSI, us);
    put(r.images, "psi(u)", qu.str());
    put(r.images, "psi(u*)", qus.str());
    put(r.images, "psi(u u*)", (qu * qus).str());
    put(r.images, "psi(u* u)", (qus * qu).str());
    check(r, "psi(u) = 1 + 2i", qu == quat(c.f, "1", "2", "0", "0"));
    if (odd)
        check(r, "psi(u*) = 1 - 2j", qus == quat(c.f, "1", "0", "-2", "0"));
    else
        check(r, "psi(u*) = 1 + 2j", qus == quat(c.f, "1", "0", "2", "0"));
    check(r, "psi(u u*) is symmetric", is_symmetric(qinv, qu * qus));
    check(r, "psi(u* u) is symmetric", is_symmetric(qinv, qus * qu));

    SqMatrix A = quat_rep_L(qu), B = quat_rep_L(qus);
    put(r.matrices, "A", A.str());
    put(r.matrices, "B", B.str());
    put(r.matrices, "rep(psi(u u*))", (A * B).str());
    put(r.matrices, "rep(psi(u* u))", (B * A).str());
    Place pl = place_1_plus_2i(c);
    r.certificate = certify(A, B, pl, Strength::SUBGROUP_WITNESS);
    r.words = sample_at_point(A * B, B * A, seed);
    note_involution(r, inv, QuatSpecialization::PSI);
    if (odd)
        r.notes.push_back("the even-parameter element 1 + x + y* specializes to the identity "
                          "here; the central twist zeta restores a pair that switches under "
                          "the involution");
    r.notes.push_back("the target pair is {u u*, u* u}; its images are the products of the "
                      "free witness images represented by A and B");
    r.notes.push_back(kWitnessNote);
    r.notes.push_back(sample_point_note());
    set_partial(r);
    return r;
}

ScenarioReport uni_i_open(const HeisContext& c, const HeisInvolution& inv) {
    ScenarioReport r;
    r.id = "heis/uni/I/not-both-odd";
    QuatInvolution qinv = transport_involution(QuatSpecialization::PSI, inv, c.f);
    int fixed = 0;
    for (const QuatElem& e :
         {QuatElem::one(c.f), QuatElem::unit_i(c.f), QuatElem::unit_j(c.f),
          QuatElem::unit_i(c.f) * QuatElem::unit_j(c.f)})
        if (is_symmetric(qinv, e)) ++fixed;
    check(r, "exactly three basis directions are symmetric (orthogonal type)", fixed == 3);
    note_involution(r, inv, QuatSpecialization::PSI);
    r.notes.push_back("an involution of orthogonal type on the quaternion algebra admits no "
                      "free unitary pair, so nothing can be certified through this "
                      "specialization");
    r.notes.push_back("the existence of a free unitary pair upstairs is left open");
    return r;
}

ScenarioReport uni_i_odd_odd(const HeisContext& c, const HeisInvolution& inv,
                             unsigned long long seed) {
    ScenarioReport r;
    r.id = "heis/uni/I/odd-odd";
    GroupRingElem d1 = c.g(heis_x()) - c.g(inv(heis_x()));
    GroupRingElem d2 = c.g(heis_y()) - c.g(inv(heis_y()));
    put(r.elements, "r1", d1.str());
    put(r.elements, "r2", d2.str());
    check(r, "r1* = -r1", involution_apply(inv, d1) == -d1);
    check(r, "r2* = -r2", involution_apply(inv, d2) == -d2);

    QuatInvolution qinv = transport_involution(QuatSpecialization::PSI, inv, c.f);
    QuatElem q1 = specialize_quat(QuatSpecialization::PSI, d1);
    QuatElem q2 = specialize_quat(QuatSpecialization::PSI, d2);
    check(r, "psi(r1) = 2i", q1 == quat(c.f, "0", "2", "0", "0"));
    check(r, "psi(r2) = 2j", q2 == quat(c.f, "0", "0", "2", "0"));
    CayleySplit cs1 = cayley_split(q1), cs2 = cayley_split(q2);
    put(r.images, "psi(r1)", q1.str());
    put(r.images, "psi(r2)", q2.str());
    put(r.images, "psi(u)", cs1.image.str());
    put(r.images, "psi(v)", cs2.image.str());
    check(r, "psi(u) is unitary", is_unitary(qinv, cs1.image));
    check(r, "psi(v) is unitary", is_unitary(qinv, cs2.image));

    SqMatrix A = quat_rep_L(cs1.numerator), B = quat_rep_L(cs2.numerator);
    put(r.matrices, "A", A.str());
    put(r.matrices, "B", B.str());
    Place pl = place_1_plus_2i(c);
    r.certificate = certify(A, B, pl, Strength::SUBGROUP_WITNESS);
    r.words = sample_at_point(quat_rep_L(cs1.image), quat_rep_L(cs2.image), seed);
    note_involution(r, inv, QuatSpecialization::PSI);
    r.notes.push_back("u = (1 - r1)(1 + r1)^-1 and v = (1 - r2)(1 + r2)^-1; A and B "
                      "represent the Cayley numerators (1 - 2i)^2 and (1 - 2j)^2");
    r.notes.push_back(factor_note(pl, "the central Cayley denominator", cs1.denominator) +
                      "; " + factor_note(pl, "the central Cayley denominator",
                                         cs2.denominator));
    r.notes.push_back(kCentralScalingNote);
    r.notes.push_back(kWitnessNote);
    r.notes.push_back(sample_point_note());
    set_partial(r);
    return r;
}

ScenarioReport uni_ii(const HeisContext& c, const HeisInvolution& inv,
                      unsigned long long seed) {
    ScenarioReport r;
    r.id = "heis/uni/II";
    GroupRingElem d1 = c.g(heis_x()) - c.g(inv(heis_x()));
    GroupRingElem d2 = c.g(heis_y()) - c.g(inv(heis_y()));
    put(r.elements, "r1", d1.str());
    put(r.elements, "r2", d2.str());
    check(r, "r1* = -r1", involution_apply(inv, d1) == -d1);
    check(r, "r2* = -r2", involution_apply(inv, d2) == -d2);

    QuatInvolution qinv = transport_involution(QuatSpecialization::PSI, inv, c.f);
    QuatElem q1 = specialize_quat(QuatSpecialization::PSI, d1);
    QuatElem q2 = specialize_quat(QuatSpecialization::PSI, d2);
    check(r, "psi(r1) = (1 - 1/a) i", q1 == quat(c.f, "0", "1-1/a", "0", "0"));
    check(r, "psi(r2) = (1 - 1/b) j", q2 == quat(c.f, "0", "0", "1-1/b", "0"));
    CayleySplit cs1 = cayley_split(q1), cs2 = cayley_split(q2);
    put(r.images, "psi(r1)", q1.str());
    put(r.images, "psi(r2)", q2.str());
    put(r.images, "psi(u)", cs1.image.str());
    put(r.images, "psi(v)", cs2.image.str());
    check(r, "psi(u) is unitary", is_unitary(qinv, cs1.image));
    check(r, "psi(v) is unitary", is_unitary(qinv, cs2.image));

    QuatElem qalpha = quat(c.f, "a", "-(a-1)", "0", "0");
    QuatElem qbeta = quat(c.f, "b", "0", "-(b-1)", "0");
    QuatElem qa = cs1.numerator * rf(c.f, "a^2");
    QuatElem qb = cs2.numerator * rf(c.f, "b^2");
    check(r, "a^2 (1 - psi(r1))^2 = (a - (a-1) i)^2", qa == qalpha * qalpha);
    check(r, "b^2 (1 - psi(r2))^2 = (b - (b-1) j)^2", qb == qbeta * qbeta);
    SqMatrix A = quat_rep_L(qa), B = quat_rep_L(qb);
    put(r.matrices, "A", A.str());
    put(r.matrices, "B", B.str());
    Place pl = place_over(c.L, "a", "1-3*a+a^2", "-1+a", "a-(a-1)*i", "P(a-(a-1)i)");
    r.certificate = certify(A, B, pl, Strength::SUBGROUP_WITNESS);
    r.words = sample_at_point(quat_rep_L(cs1.image), quat_rep_L(cs2.image), seed);
    note_involution(r, inv, QuatSpecialization::PSI);
    r.notes.push_back("u = (1 - r1)(1 + r1)^-1 and v = (1 - r2)(1 + r2)^-1; A and B are "
                      "their images scaled by the central factors below");
    r.notes.push_back(factor_note(pl, "the factor", rf(c.f, "a^2") * cs1.denominator) + "; " +
                      factor_note(pl, "the factor", rf(c.f, "b^2") * cs2.denominator));
    r.notes.push_back(kCentralScalingNote);
    r.notes.push_back(kWitnessNote);
    r.notes.push_back(sample_point_note());
    set_partial(r);
    return r;
}

ScenarioReport uni_iii(const HeisContext& c, const HeisInvolution& inv, bool odd) {
    ScenarioReport r;
    r.id = odd ? "heis/uni/III/odd" : "heis/uni/III/even";
    GroupRingElem d1 = c.g(heis_y()) - c.g(inv(heis_y()));
    HeisElem w = heis_mul(heis_x(), heis_pow(heis_y(), odd ? 1 : 5));
    GroupRingElem d2 = c.g(w) - c.g(inv(w));
    put(r.elements, "r1", d1.str());
    put(r.elements, "r2", d2.str());
    check(r, "r1* = -r1", involution_apply(inv, d1) == -d1);
    check(r, "r2* = -r2", involution_apply(inv, d2) == -d2);

    QuatInvolution qinv = transport_involution(QuatSpecialization::PSI, inv, c.f);
    QuatElem q1 = specialize_quat(QuatSpecialization::PSI, d1);
    QuatElem q2 = specialize_quat(QuatSpecialization::PSI, d2);
    if (odd) {
        check(r, "psi(r1) = (1 + 1/b) j", q1 == quat(c.f, "0", "0", "1+1/b", "0"));
        check(r, "psi(r2) = (1 - 1/b) ij", q2 == quat(c.f, "0", "0", "0", "1-1/b"));
    } else {
        check(r, "psi(r1) = (1 - 1/b) j", q1 == quat(c.f, "0", "0", "1-1/b", "0"));
        check(r, "psi(r2) = (b^2 + 1/b^3) ij", q2 == quat(c.f, "0", "0", "0", "(1+b^5)/b^3"));
    }
    CayleySplit cs1 = cayley_split(q1), cs2 = cayley_split(q2);
    put(r.images, "psi(r1)", q1.str());
    put(r.images, "psi(r2)", q2.str());
    put(r.images, "psi(u)", cs1.image.str());
    put(r.images, "psi(v)", cs2.image.str());
    check(r, "psi(u) is unitary", is_unitary(qinv, cs1.image));
    check(r, "psi(v) is unitary", is_unitary(qinv, cs2.image));
    check(r, "psi(v)^-1 psi(u) psi(v) is unitary",
          is_unitary(qinv, cs2.image.inv() * cs1.image * cs2.image));

    QuatElem qalpha = odd ? quat(c.f, "b", "0", "-1-b", "0") : quat(c.f, "b", "0", "1-b", "0");
    RatFunc calpha = odd ? rf(c.f, "-b^3-b^2-b") : rf(c.f, "-b+3*b^2-b^3");
    QuatElem qbeta = odd ? quat(c.f, "b", "0", "0", "1-b") : quat(c.f, "b^3", "0", "0", "-1-b^5");
    RatFunc cbeta = odd ? rf(c.f, "b^2+a*b*(b-1)^2") : rf(c.f, "b^6+a*b*(1+b^5)^2");
    check(r, odd ? "psi(u) = (b - (1+b) j)^2 / (-b - b^2 - b^3)"
                 : "psi(u) = (b + (1-b) j)^2 / (-b + 3b^2 - b^3)",
          cs1.image == (qalpha * qalpha) * (RatFunc::one(c.f) / calpha));
    check(r, odd ? "psi(v) = (b + (1-b) ij)^2 / (b^2 + ab(b-1)^2)"
                 : "psi(v) = (b^3 - (1+b^5) ij)^2 / (b^6 + ab(1+b^5)^2)",
          cs2.image == (qbeta * qbeta) * (RatFunc::one(c.f) / cbeta));

    SqMatrix A = quat_rep_K(qalpha), B = quat_rep_K(qbeta);
    SqMatrix A2 = A.pow(2), B2 = B * B;
    put(r.matrices, "A", A.str());
    put(r.matrices, "B", B.str());
    put(r.matrices, "A^2", A2.str());
    put(r.matrices, "B^2", B2.str());
    Place pl = odd ? place_over(c.K, "b", "1+b+b^2", "1+b", "b-(1+b)*j", "P(b-(1+b)j)")
                   : place_over(c.K, "b", "1-3*b+b^2", "1-b", "-1+b+j", "P(alpha)");
    r.certificate = certify(A2, B2, pl, Strength::EXACT_PAIR);
    note_involution(r, inv, QuatSpecialization::PSI);
    r.notes.push_back(odd ? "r2 = xy - (xy)*" : "r2 = xy^5 - (xy^5)*");
    r.notes.push_back("u and v are the Cayley transforms (1 - r)(1 + r)^-1 of the skew "
                      "images; the representation is taken over the subfield generated by j");
    r.notes.push_back("A^2 and B^2 equal the images of u and v scaled by central factors; " +
                      factor_note(pl, "the u-side factor", calpha) + "; " +
                      factor_note(pl, "the v-side factor", cbeta));
    r.notes.push_back(kCentralScalingNote);
    set_certified(r);
    return r;
}

ScenarioReport uni_iv(const HeisContext& c, const HeisInvolution& inv, bool odd) {
    ScenarioReport r;
    r.id = odd ? "heis/uni/IV/odd" : "heis/uni/IV/even";
    HeisElem xy1 = heis_mul(heis_x(), heis_pow(heis_y(), -1));
    GroupRingElem d1 = c.g(xy1) - c.g(inv(xy1));
    GroupRingElem d2 = c.g(heis_x()) - c.g(inv(heis_x()));
    put(r.elements, "r1", d1.str());
    put(r.elements, "r2", d2.str());
    check(r, "r1* = -r1", involution_apply(inv, d1) == -d1);
    check(r, "r2* = -r2", involution_apply(inv, d2) == -d2);

    QuatInvolution qinv = transport_involution(QuatSpecialization::PHI, inv, c.f);
    QuatElem q1 = specialize_quat(QuatSpecialization::PHI, d1);
    QuatElem q2 = specialize_quat(QuatSpecialization::PHI, d2);
    check(r, "phi(r1) = -(1 + 1/b) j", q1 == quat(c.f, "0", "0", "(-1-b)/b", "0"));
    if (odd)
        check(r, "phi(r2) = i + ij", q2 == quat(c.f, "0", "1", "0", "1"));
    else
        check(r, "phi(r2) = i - ij", q2 == quat(c.f, "0", "1", "0", "-1"));
    CayleySplit cs1 = cayley_split(q1), cs2 = cayley_split(q2);
    put(r.images, "phi(r1)", q1.str());
    put(r.images, "phi(r2)", q2.str());
    put(r.images, "phi(u)", cs1.image.str());
    put(r.images, "phi(v)", cs2.image.str());
    check(r, "phi(u) is unitary", is_unitary(qinv, cs1.image));
    check(r, "phi(v) is unitary", is_unitary(qinv, cs2.image));
    check(r, "phi(v)^-1 phi(u) phi(v) is unitary",
          is_unitary(qinv, cs2.image.inv() * cs1.image * cs2.image));

    QuatElem qmu = quat(c.f, "1+b", "0", "1", "0");
    RatFunc cmu = rf(c.f, "-1-b-b^2");
    QuatElem qbeta = odd ? quat(c.f, "1", "-1", "0", "-1") : quat(c.f, "1", "-1", "0", "1");
    RatFunc cbeta = rf(c.f, "1-a+a*b");
    check(r, "phi(u) = (1 + b + j)^2 / (-1 - b - b^2)",
          cs1.image == (qmu * qmu) * (RatFunc::one(c.f) / cmu));
    check(r, odd ? "phi(v) = (1 - (1-j) i)^2 / (1 - a + ab)"
                 : "phi(v) = (1 - (1+j) i)^2 / (1 - a + ab)",
          cs2.image == (qbeta * qbeta) * (RatFunc::one(c.f) / cbeta));

    SqMatrix A = quat_rep_K(qmu), B = quat_rep_K(qbeta);
    SqMatrix A2 = A.pow(2), B2 = B * B;
    put(r.matrices, "A", A.str());
    put(r.matrices, "B", B.str());
    put(r.matrices, "A^2", A2.str());
    put(r.matrices, "B^2", B2.str());
    Place pl = place_over(c.K, "b", "1+b+b^2", "-1-b", "1+b+j", "P(mu)");
    r.certificate = certify(A2, B2, pl, Strength::EXACT_PAIR);
    note_involution(r, inv, QuatSpecialization::PHI);
    r.notes.push_back("r1 = x y^-1 - (x y^-1)* and r2 = x - x*; u and v are their Cayley "
                      "transforms; the representation is taken over the subfield generated "
                      "by j");
    r.notes.push_back("A^2 and B^2 equal the images of u and v scaled by central factors; " +
                      factor_note(pl, "the u-side factor", cmu) + "; " +
                      factor_note(pl, "the v-side factor", cbeta));
    r.notes.push_back(kCentralScalingNote);
    set_certified(r);
    return r;
}

ScenarioReport weyl_one() {
    ScenarioReport r;
    r.id = "weyl/1";
    WeylElem s = WeylElem::s(), t = WeylElem::t(), one = WeylElem::one();
    WeylElem ts = t * s;
    WeylElem n = one + ts * ts;
    WeylElem m = one + (ts + one) * (ts + one);
    WeylElem d = s * t * s - t * s * t;
    put(r.elements, "u numerator", n.str());
    put(r.elements, "u denominator", m.str());
    put(r.elements, "r", d.str());
    WeylInvolutionSpec spec = WeylInvolutionSpec::swap();
    check(r, "(1 + (ts)^2)* = 1 + (ts)^2", weyl_involution(spec, n) == n);
    check(r, "(1 + (ts+1)^2)* = 1 + (ts+1)^2", weyl_involution(spec, m) == m);
    check(r, "r* = -r", weyl_involution(spec, d) == -d);
    check(r, "numerator and denominator of u commute", n * m == m * n);

    const BaseField f3 = BaseField::gf3();
    ExtDescPtr ki = make_cyc_descriptor(f3);
    CycElem uc = weyl_to_cyclic(ki, n) * weyl_to_cyclic(ki, m).inv();
    CycElem rc = weyl_to_cyclic(ki, d);
    CycElem cone = CycElem::one(ki);
    CycElem vc = (cone + rc) * (cone - rc).inv();
    put(r.images, "tau(u)", uc.str());
    put(r.images, "tau(r)", rc.str());
    put(r.images, "tau(v)", vc.str());
    ExtElem gi = ExtElem::generator(ki), eone = ExtElem::one(ki);
    check(r, "tau(u) = (1 + i^2)(1 + (i+1)^2)^-1",
          uc == CycElem::from_ext((eone + gi * gi) / (eone + (gi + eone) * (gi + eone))));

    CycInvolution cinv =
        make_cyc_involution(CycElem::gen_i(ki), CycElem::gen_j(ki).inv() * CycElem::gen_i(ki),
                            rf(f3, "a"), rf(f3, "a/b"));
    check(r, "tau(u) is symmetric", is_symmetric(cinv, uc));
    check(r, "tau(r) is skew", cinv(rc) == -rc);
    check(r, "tau(v) is unitary", is_unitary(cinv, vc));
    check(r, "tau(v)^-1 tau(u) tau(v) is symmetric", is_symmetric(cinv, vc.inv() * uc * vc));

    SqMatrix U = cyc_reg_rep(uc), W = cyc_reg_rep(rc);
    SqMatrix I = SqMatrix::identity(ki, 3);
    SqMatrix V = (I + W) * (I - W).inv();
    check(r, "V = rep(tau(v))", V == cyc_reg_rep(vc));
    put(r.matrices, "U", U.str());
    put(r.matrices, "W", W.str());
    put(r.matrices, "V", V.str());

    Place pl = place_over(ki, "a", "1+a^2", "a", "1+i^2", "P(1+i^2)");
    ExtElem dm = (I - W).det(), dp = (I + W).det();
    auto record = [&](const std::string& name, const ExtElem& x) {
        auto res = pl.residue_of(x);
        if (!res) fail(errc::internal, "residue requested below the valuation ring: " + name);
        put(r.residues, name, res->str());
    };
    record("det(I-W)", dm);
    record("det(I+W)", dp);
    SqMatrix Vinv = V.inv();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            record("(det(I-W) V)_" + std::to_string(i + 1) + std::to_string(j + 1),
                   V.at(i, j) * dm);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            record("(det(I+W) V^-1)_" + std::to_string(i + 1) + std::to_string(j + 1),
                   Vinv.at(i, j) * dp);

    r.certificate = certify(U, V, pl, Strength::EXACT_PAIR);
    r.notes.push_back("involution: s* = t, t* = s");
    r.notes.push_back("specialization: s -> j^-1 i, t -> j into the degree-3 cyclic algebra "
                      "over GF(3)(a,b)");
    r.notes.push_back("u = (1 + (ts)^2)(1 + (ts+1)^2)^-1 is symmetric because numerator and "
                      "denominator are fixed and commute; v = (1 + r)(1 - r)^-1 is unitary "
                      "because r is skew");
    r.notes.push_back("the residue table lists det(I-W), det(I+W) and the entries of "
                      "(det(I-W)) V and (det(I+W)) V^-1 in the residue field, where "
                      "V = (I + W)(I - W)^-1");
    r.notes.push_back("the companion case with the sign involution is weyl/2");
    set_certified(r);
    return r;
}

ScenarioReport weyl_two() {
    ScenarioReport r;
    r.id = "weyl/2";
    WeylElem s = WeylElem::s(), t = WeylElem::t(), one = WeylElem::one();
    WeylElem p = t * s + s * t;
    WeylElem q = t * t * s - s * t * t;
    put(r.elements, "p", p.str());
    put(r.elements, "q", q.str());
    WeylInvolutionSpec spec = WeylInvolutionSpec::sign();
    check(r, "p* = -p", weyl_involution(spec, p) == -p);
    check(r, "q* = -q", weyl_involution(spec, q) == -q);

    const BaseField f3 = BaseField::gf3();
    ExtDescPtr ki = make_cyc_descriptor(f3);
    CycElem uc = weyl_to_cyclic(ki, one + p) * weyl_to_cyclic(ki, one - p).inv();
    CycElem vc = weyl_to_cyclic(ki, one - q) * weyl_to_cyclic(ki, one + q).inv();
    put(r.images, "tau(u)", uc.str());
    put(r.images, "tau(v)", vc.str());
    ExtElem gi = ExtElem::generator(ki), eone = ExtElem::one(ki);
    check(r, "tau(u) = 2 (i+1) i^-1",
          uc == CycElem::from_ext(((eone + gi) / gi) * rf(f3, "2")));
    CycElem expected_v(ki, {ExtElem::constant(ki, rf(f3, "(1+2*b)/(1+b)")),
                            ExtElem::constant(ki, rf(f3, "1/(1+b)")),
                            ExtElem::constant(ki, rf(f3, "2/(1+b)"))});
    check(r, "tau(v) = (1 + 2b + j + 2 j^2)/(1 + b)", vc == expected_v);

    CycInvolution cinv = make_cyc_involution(-(CycElem::gen_i(ki) + CycElem::one(ki)),
                                             -CycElem::gen_j(ki), rf(f3, "-a"), rf(f3, "-b"));
    check(r, "tau(u) is unitary", is_unitary(cinv, uc));
    check(r, "tau(v) is unitary", is_unitary(cinv, vc));
    check(r, "tau(v)^-1 tau(u) tau(v) is unitary", is_unitary(cinv, vc.inv() * uc * vc));

    SqMatrix U = cyc_reg_rep(uc), V = cyc_reg_rep(vc);
    put(r.matrices, "U", U.str());
    put(r.matrices, "V", V.str());
    put(r.matrices, "V^-1", V.inv().str());

    Place pl = place_over(ki, "a", "a", "0", "i", "P(i)");
    r.certificate = certify(U, V, pl, Strength::EXACT_PAIR);
    r.notes.push_back("involution: s* = s, t* = -t");
    r.notes.push_back("specialization: s -> j^-1 i, t -> j into the degree-3 cyclic algebra "
                      "over GF(3)(a,b)");
    r.notes.push_back("u = (1 + p)(1 - p)^-1 and v = (1 - q)(1 + q)^-1 are unitary because "
                      "p and q are skew");
    r.notes.push_back("the companion case with the swap involution is weyl/1");
    set_certified(r);
    return r;
}

ScenarioVerdict verdict_from_name(const std::string& s) {
    if (s == "CERTIFIED") return ScenarioVerdict::CERTIFIED;
    if (s == "PARTIAL") return ScenarioVerdict::PARTIAL;
    if (s == "OPEN") return ScenarioVerdict::OPEN;
    fail(errc::parse_error, "unknown scenario verdict: " + s);
}

Verdict cert_verdict_from_name(const std::string& s) {
    if (s == "CERTIFIED") return Verdict::CERTIFIED;
    if (s == "FAILED") return Verdict::FAILED;
    if (s == "INAPPLICABLE") return Verdict::INAPPLICABLE;
    fail(errc::parse_error, "unknown certificate verdict: " + s);
}

Strength strength_from_name(const std::string& s) {
    if (s == "EXACT_PAIR") return Strength::EXACT_PAIR;
    if (s == "SUBGROUP_WITNESS") return Strength::SUBGROUP_WITNESS;
    fail(errc::parse_error, "unknown certificate strength: " + s);
}

nlohmann::ordered_json rows_json(const Rows& rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [name, value] : rows)
        arr.push_back(nlohmann::ordered_json{{"name", name}, {"value", value}});
    return arr;
}

Rows rows_from(const nlohmann::json& j) {
    Rows rows;
    for (const auto& item : j)
        rows.emplace_back(item.at("name").get<std::string>(),
                          item.at("value").get<std::string>());
    return rows;
}

std::vector<std::optional<long>> opt_vec_from(const nlohmann::json& j) {
    std::vector<std::optional<long>> out;
    for (const auto& item : j)
        out.push_back(item.is_null() ? std::optional<long>()
                                     : std::optional<long>(item.get<long>()));
    return out;
}

std::string emit_json(const ScenarioReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["verdict"] = scenario_verdict_name(r.verdict);
    j["elements"] = rows_json(r.elements);
    auto checks = nlohmann::ordered_json::array();
    for (const auto& [name, ok] : r.checks)
        checks.push_back(nlohmann::ordered_json{{"name", name}, {"passed", ok}});
    j["checks"] = checks;
    j["images"] = rows_json(r.images);
    j["matrices"] = rows_json(r.matrices);
    j["residues"] = rows_json(r.residues);
    if (r.certificate) {
        j["certificate"] = nlohmann::ordered_json::parse(r.certificate->json());
        j["certificate_reason"] = r.certificate->reason;
    } else {
        j["certificate"] = nullptr;
    }
    if (r.words) {
        j["words"] = nlohmann::ordered_json{{"generators", r.words->generators},
                                            {"max_len", r.words->max_len},
                                            {"count", r.words->count},
                                            {"seed", r.words->seed},
                                            {"failures", r.words->failures}};
    } else {
        j["words"] = nullptr;
    }
    j["notes"] = r.notes;
    return j.dump(2) + "\n";
}

void emit_rows(std::ostream& os, const char* title, const Rows& rows) {
    if (rows.empty()) return;
    os << title << ":\n";
    for (const auto& [name, value] : rows) os << "  " << name << " = " << value << "\n";
}

void emit_block(std::ostream& os, const char* title, const std::string& body) {
    os << title << ":\n";
    std::istringstream in(body);
    std::string line;
    while (std::getline(in, line)) os << "  " << line << "\n";
}

std::string emit_text(const ScenarioReport& r) {
    std::ostringstream os;
    os << "scenario: " << r.id << "\n";
    os << "verdict: " << scenario_verdict_name(r.verdict) << "\n";
    emit_rows(os, "elements", r.elements);
    if (!r.checks.empty()) {
        os << "checks:\n";
        for (const auto& [name, ok] : r.checks)
            os << "  [" << (ok ? "ok" : "FAIL") << "] " << name << "\n";
    }
    emit_rows(os, "images", r.images);
    emit_rows(os, "matrices", r.matrices);
    emit_rows(os, "residues", r.residues);
    if (r.certificate) emit_block(os, "certificate", r.certificate->str());
    if (r.words) emit_block(os, "word sample", r.words->str());
    if (!r.notes.empty()) {
        os << "notes:\n";
        for (const auto& note : r.notes) os << "  - " << note << "\n";
    }
    return os.str();
}

} // namespace

const char* scenario_verdict_name(ScenarioVerdict v) {
    switch (v) {
    case ScenarioVerdict::CERTIFIED: return "CERTIFIED";
    case ScenarioVerdict::PARTIAL: return "PARTIAL";
    case ScenarioVerdict::OPEN: return "OPEN";
    }
    return "OPEN";
}

const char* pair_mode_name(PairMode m) {
    return m == PairMode::SYMMETRIC ? "SYMMETRIC" : "UNITARY";
}

bool ScenarioReport::all_checks_passed() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

ScenarioReport run_heisenberg(InvolutionType type, const Int& m, const Int& n, PairMode mode,
                              unsigned long long seed) {
    HeisContext c;
    const bool modd = (m % 2) != 0, nodd = (n % 2) != 0;
    switch (type) {
    case InvolutionType::I: {
        HeisInvolution inv = HeisInvolution::make(type, m, n);
        if (mode == PairMode::SYMMETRIC) {
            if (!modd && !nodd) return sym_i_even_even(c, inv, seed);
            if (!modd && nodd) return sym_i_even_odd(c, inv);
            if (modd && !nodd) return sym_i_odd_even(c, inv);
            return sym_i_odd_odd(c, inv);
        }
        if (modd && nodd) return uni_i_odd_odd(c, inv, seed);
        return uni_i_open(c, inv);
    }
    case InvolutionType::II: {
        if (m != 0 || n != 0)
            fail(errc::undefined_case, "this involution shape takes no parameters");
        HeisInvolution inv = HeisInvolution::make(type);
        return mode == PairMode::SYMMETRIC ? sym_ii(c, inv, seed) : uni_ii(c, inv, seed);
    }
    case InvolutionType::III: {
        if (n != 0)
            fail(errc::undefined_case, "this involution shape takes a single parameter");
        HeisInvolution inv = HeisInvolution::make(type, m);
        return mode == PairMode::SYMMETRIC ? sym_iii(c, inv, modd) : uni_iii(c, inv, modd);
    }
    case InvolutionType::IV: {
        if (n != 0)
            fail(errc::undefined_case, "this involution shape takes a single parameter");
        HeisInvolution inv = HeisInvolution::make(type, m);
        return mode == PairMode::SYMMETRIC ? sym_iv(c, inv, modd, seed) : uni_iv(c, inv, modd);
    }
    }
    fail(errc::internal, "unreachable involution type");
}

ScenarioReport run_weyl(int which) {
    if (which == 1) return weyl_one();
    if (which == 2) return weyl_two();
    fail(errc::undefined_case, "no such case: only 1 and 2 are defined");
}

std::vector<std::string> scenario_ids() {
    return {
        "heis/sym/I/even-even", "heis/sym/I/even-odd", "heis/sym/I/odd-even",
        "heis/sym/I/odd-odd",   "heis/sym/II",         "heis/sym/III/even",
        "heis/sym/III/odd",     "heis/sym/IV/even",    "heis/sym/IV/odd",
        "heis/uni/I/not-both-odd", "heis/uni/I/odd-odd", "heis/uni/II",
        "heis/uni/III/even",    "heis/uni/III/odd",    "heis/uni/IV/even",
        "heis/uni/IV/odd",      "weyl/1",              "weyl/2",
    };
}

ScenarioReport run_scenario(const std::string& id, unsigned long long seed) {
    const auto heis = [&](InvolutionType t, int m, int n, PairMode mode) {
        return run_heisenberg(t, m, n, mode, seed);
    };
    if (id == "heis/sym/I/even-even") return heis(InvolutionType::I, 0, 0, PairMode::SYMMETRIC);
    if (id == "heis/sym/I/even-odd") return heis(InvolutionType::I, 0, 1, PairMode::SYMMETRIC);
    if (id == "heis/sym/I/odd-even") return heis(InvolutionType::I, 1, 0, PairMode::SYMMETRIC);
    if (id == "heis/sym/I/odd-odd") return heis(InvolutionType::I, 1, 1, PairMode::SYMMETRIC);
    if (id == "heis/sym/II") return heis(InvolutionType::II, 0, 0, PairMode::SYMMETRIC);
    if (id == "heis/sym/III/even") return heis(InvolutionType::III, 0, 0, PairMode::SYMMETRIC);
    if (id == "heis/sym/III/odd") return heis(InvolutionType::III, 1, 0, PairMode::SYMMETRIC);
    if (id == "heis/sym/IV/even") return heis(InvolutionType::IV, 0, 0, PairMode::SYMMETRIC);
    if (id == "heis/sym/IV/odd") return heis(InvolutionType::IV, 1, 0, PairMode::SYMMETRIC);
    if (id == "heis/uni/I/not-both-odd") return heis(InvolutionType::I, 0, 0, PairMode::UNITARY);
    if (id == "heis/uni/I/odd-odd") return heis(InvolutionType::I, 1, 1, PairMode::UNITARY);
    if (id == "heis/uni/II") return heis(InvolutionType::II, 0, 0, PairMode::UNITARY);
    if (id == "heis/uni/III/even") return heis(InvolutionType::III, 0, 0, PairMode::UNITARY);
    if (id == "heis/uni/III/odd") return heis(InvolutionType::III, 1, 0, PairMode::UNITARY);
    if (id == "heis/uni/IV/even") return heis(InvolutionType::IV, 0, 0, PairMode::UNITARY);
    if (id == "heis/uni/IV/odd") return heis(InvolutionType::IV, 1, 0, PairMode::UNITARY);
    if (id == "weyl/1") return run_weyl(1);
    if (id == "weyl/2") return run_weyl(2);
    fail(errc::undefined_case, "unknown scenario id: " + id);
}

std::string emit_report(const ScenarioReport& r, ReportFormat format) {
    return format == ReportFormat::JSON ? emit_json(r) : emit_text(r);
}

ScenarioReport parse_report(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        fail(errc::parse_error, std::string("malformed report: ") + e.what());
    }
    ScenarioReport r;
    try {
        r.id = j.at("id").get<std::string>();
        r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
        r.elements = rows_from(j.at("elements"));
        for (const auto& item : j.at("checks"))
            r.checks.emplace_back(item.at("name").get<std::string>(),
                                  item.at("passed").get<bool>());
        r.images = rows_from(j.at("images"));
        r.matrices = rows_from(j.at("matrices"));
        r.residues = rows_from(j.at("residues"));
        if (!j.at("certificate").is_null()) {
            const auto& cj = j.at("certificate");
            FreenessCertificate cert;
            cert.place_name = cj.at("place").get<std::string>();
            cert.eigen_valuations = opt_vec_from(cj.at("eigen_valuations"));
            for (const auto& row : cj.at("B_valuations"))
                cert.b_valuations.push_back(opt_vec_from(row));
            for (const auto& row : cj.at("Binv_valuations"))
                cert.binv_valuations.push_back(opt_vec_from(row));
            cert.verdict = cert_verdict_from_name(cj.at("verdict").get<std::string>());
            cert.strength = strength_from_name(cj.at("strength").get<std::string>());
            cert.reason = j.value("certificate_reason", std::string());
            r.certificate = std::move(cert);
        }
        if (!j.at("words").is_null()) {
            const auto& wj = j.at("words");
            WordSampleReport words;
            words.generators = wj.at("generators").get<std::string>();
            words.max_len = wj.at("max_len").get<int>();
            words.count = wj.at("count").get<int>();
            words.seed = wj.at("seed").get<unsigned long long>();
            words.failures = wj.at("failures").get<std::vector<std::string>>();
            r.words = std::move(words);
        }
        r.notes = j.at("notes").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, std::string("malformed report: ") + e.what());
    }
    return r;
}

} // namespace freepairs
