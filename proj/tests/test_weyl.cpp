#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "freepairs/weyl.hpp"
#include "helpers.hpp"

using namespace freepairs;
using namespace testutil;

static Rat rand_rat3free(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4), pick(0, 2);
    const int dens[] = {1, 2, 5};
    int n = num(rng);
    if (n == 0) n = 1;
    return Rat(n, dens[pick(rng)]);
}

static WeylElem rand_weyl(std::mt19937_64& rng, int max_deg = 3, int max_terms = 3) {
    std::uniform_int_distribution<int> deg(0, max_deg), nterms(1, max_terms);
    WeylElem u;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t)
        u = u + WeylElem::monomial(deg(rng), deg(rng), rand_rat3free(rng));
    return u;
}

/** Random univariate polynomial in X with small integer coefficients. */
static MultiPoly rand_upoly(std::mt19937_64& rng, int max_deg = 5) {
    BaseField q = BaseField::rationals();
    std::uniform_int_distribution<int> deg(0, max_deg), coeff(-5, 5);
    MultiPoly f = MultiPoly::zero(q);
    int d = deg(rng);
    for (int k = 0; k <= d; ++k)
        f = f + MultiPoly::variable(q, "X", k).scaled(Scalar::from_int(q, coeff(rng)));
    return f;
}

/**
 * Reduce a skew-Laurent element mod 3 and substitute X -> i, Y -> j.  This
 * re-derives the cyclic specialization along the alternative route, so the
 * two maps can be compared on common inputs.
 */
static CycElem skew_reduce_to_cyclic(const ExtDescPtr& ki, const SkewLaurentElem& u) {
    const BaseField& f3 = ki->field();
    const ExtElem gi = ExtElem::generator(ki);
    CycElem acc = CycElem::zero(ki);
    for (const auto& [n, f] : u.terms()) {
        REQUIRE(f.is_polynomial());
        std::vector<MultiPoly> cs = f.num().to_univariate("X");
        ExtElem val = ExtElem::zero(ki);
        for (size_t k = cs.size(); k-- > 0;) {
            REQUIRE(cs[k].is_constant());
            Rat c = cs[k].is_zero() ? Rat(0) : cs[k].constant_value().value();
            REQUIRE(denominator(c) % 3 != 0);
            val = val * gi + ExtElem::constant(ki, RatFunc::constant(f3, c));
        }
        acc = acc + CycElem::gen_j(ki).pow(n) * CycElem::from_ext(val);
    }
    return acc;
}

TEST_CASE("normal ordering in the Weyl algebra") {
    const WeylElem s = WeylElem::s(), t = WeylElem::t(), one = WeylElem::one();
    const WeylElem ts = t * s;

    CHECK(s * t == ts + one);
    CHECK(s * t - t * s == one);

    // The action on polynomials (s = d/dX, t = X) is the independent check
    // for every derived product identity below.
    BaseField q = BaseField::rationals();
    const MultiPoly x2 = MultiPoly::variable(q, "X", 2);
    CHECK(weyl_action(s, x2, 64) ==
          MultiPoly::variable(q, "X").scaled(Scalar::from_int(q, 2)));

    std::mt19937_64 rng(20240917);
    for (int k = 0; k < 20; ++k) {
        MultiPoly f = rand_upoly(rng);
        CHECK(weyl_action(s * t, f, 64) - weyl_action(ts, f, 64) == f);
    }

    const WeylElem tsts = ts * ts;
    const WeylElem sts = s * t * s, tst = t * s * t;
    for (int k = 0; k < 20; ++k) {
        MultiPoly f = rand_upoly(rng);
        CHECK(weyl_action(tsts, f, 64) == weyl_action(ts, weyl_action(ts, f, 64), 64));
        CHECK(weyl_action(sts - tst, f, 64) ==
              weyl_action(s, weyl_action(t, weyl_action(s, f, 64), 64), 64) -
                  weyl_action(t, weyl_action(s, weyl_action(t, f, 64), 64), 64));
    }
    CHECK(tsts == WeylElem::monomial(2, 2) + ts);
    CHECK(sts - tst == WeylElem::monomial(1, 2) + s - WeylElem::monomial(2, 1) - t);

    for (int k = 0; k < 100; ++k) {
        WeylElem u = rand_weyl(rng), v = rand_weyl(rng);
        MultiPoly f = rand_upoly(rng);
        CHECK(weyl_action(u * v, f, 64) == weyl_action(u, weyl_action(v, f, 64), 64));
    }
    for (int k = 0; k < 30; ++k) {
        WeylElem u = rand_weyl(rng), v = rand_weyl(rng), w = rand_weyl(rng);
        CHECK((u * v) * w == u * (v * w));
    }

    CHECK((t * s).str() == "t * s");
    CHECK((s * t).str() == "1 + t * s");
    CHECK(WeylElem::monomial(2, 1, Rat(-3, 2)).str() == "-3/2 * t^2 * s");
    CHECK(WeylElem::zero().str() == "0");

    CHECK(thrown_code([&] { weyl_action(t * t, rand_upoly(rng), 2); }) ==
          errc::degree_overflow);
}

TEST_CASE("linear involutions of the Weyl algebra") {
    const WeylElem s = WeylElem::s(), t = WeylElem::t();
    const WeylElem ts = t * s, st = s * t;
    const WeylInvolutionSpec sw = WeylInvolutionSpec::swap();
    const WeylInvolutionSpec sg = WeylInvolutionSpec::sign();

    CHECK(weyl_involution(sw, s) == t);
    CHECK(weyl_involution(sw, t) == s);
    CHECK(weyl_involution(sw, ts) == ts);
    CHECK(weyl_involution(sw, s * t * s) == t * s * t);
    CHECK(weyl_involution(sg, s) == s);
    CHECK(weyl_involution(sg, t) == -t);
    CHECK(weyl_involution(sg, ts + st) == -(ts + st));

    std::mt19937_64 rng(20240918);
    auto rand_spec = [&rng]() {
        Rat alpha = rand_rat3free(rng), beta = rand_rat3free(rng);
        return WeylInvolutionSpec{alpha, beta, (1 - alpha * alpha) / beta};
    };
    std::vector<WeylInvolutionSpec> specs = {sw, sg};
    for (int k = 0; k < 4; ++k) specs.push_back(rand_spec());
    for (const WeylInvolutionSpec& spec : specs) {
        for (int k = 0; k < 25; ++k) {
            WeylElem u = rand_weyl(rng, 2, 2), v = rand_weyl(rng, 2, 2);
            CHECK(weyl_involution(spec, u * v) ==
                  weyl_involution(spec, v) * weyl_involution(spec, u));
            CHECK(weyl_involution(spec, weyl_involution(spec, u)) == u);
        }
    }

    CHECK(thrown_code([&] { weyl_involution({1, 1, 1}, s); }) == errc::invalid_spec);
}

TEST_CASE("embedding into the skew-Laurent ring") {
    BaseField q = BaseField::rationals();
    const WeylElem s = WeylElem::s(), t = WeylElem::t();
    const SkewLaurentElem X = SkewLaurentElem::x(), Y = SkewLaurentElem::y();
    const RatFunc xf = RatFunc::variable(q, "X");

    // Y^-1 X Y = X + 1 is the defining twist.
    CHECK(SkewLaurentElem::y(-1) * X * Y ==
          X + SkewLaurentElem::one());
    CHECK(SkewLaurentElem::y(-1) * Y == SkewLaurentElem::one());
    CHECK(X * Y == Y * SkewLaurentElem::term(0, xf + RatFunc::one(q)));

    CHECK(weyl_to_skew(WeylElem::one()) == SkewLaurentElem::one());
    CHECK(weyl_to_skew(t * s) == X);
    CHECK(weyl_to_skew(s) == SkewLaurentElem::y(-1) * X);
    CHECK(weyl_to_skew(s * t * s - t * s * t) ==
          SkewLaurentElem::term(-1, xf * xf) -
              SkewLaurentElem::term(1, xf + RatFunc::one(q)));

    std::mt19937_64 rng(20240919);
    for (int k = 0; k < 50; ++k) {
        WeylElem u = rand_weyl(rng), v = rand_weyl(rng);
        CHECK(weyl_to_skew(u * v) == weyl_to_skew(u) * weyl_to_skew(v));
        CHECK(weyl_to_skew(u + v) == weyl_to_skew(u) + weyl_to_skew(v));
    }

    CHECK((SkewLaurentElem::y(-1) * X).str() == "Y^-1 * (X)");
}

TEST_CASE("specialization into the cyclic algebra") {
    ExtDescPtr ki = make_cyc_descriptor(BaseField::gf3());
    const WeylElem s = WeylElem::s(), t = WeylElem::t();
    const CycElem gi = CycElem::gen_i(ki), gj = CycElem::gen_j(ki);

    CHECK(weyl_to_cyclic(ki, WeylElem::one()) == CycElem::one(ki));
    CHECK(weyl_to_cyclic(ki, t) == gj);
    CHECK(weyl_to_cyclic(ki, s) == gj.inv() * gi);
    CHECK(weyl_to_cyclic(ki, t * s) == gi);
    CHECK(weyl_to_cyclic(ki, s * t * s - t * s * t) ==
          gj.inv() * gi * gi - gi * gj);

    CHECK(thrown_code([&] { weyl_to_cyclic(ki, WeylElem::monomial(1, 0, Rat(1, 3))); }) ==
          errc::not_3_integral);
    CHECK(thrown_code([&] { weyl_to_cyclic(nullptr, t); }) == errc::invalid_spec);

    std::mt19937_64 rng(20240920);
    for (int k = 0; k < 25; ++k) {
        WeylElem u = rand_weyl(rng);
        CHECK(weyl_to_cyclic(ki, u) == skew_reduce_to_cyclic(ki, weyl_to_skew(u)));
    }
    for (int k = 0; k < 10; ++k) {
        WeylElem u = rand_weyl(rng, 2, 2), v = rand_weyl(rng, 2, 2);
        CHECK(weyl_to_cyclic(ki, u * v) == weyl_to_cyclic(ki, u) * weyl_to_cyclic(ki, v));
    }
}
