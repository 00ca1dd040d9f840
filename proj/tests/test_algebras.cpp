#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace freepairs;
using namespace testutil;

static QuatElem qe(const BaseField& f, const std::string& c0, const std::string& c1,
                   const std::string& c2, const std::string& c3) {
    return QuatElem(f, {rf(f, c0), rf(f, c1), rf(f, c2), rf(f, c3)});
}

TEST_CASE("quaternion defining relations") {
    BaseField q = BaseField::rationals();
    const QuatElem i = QuatElem::unit_i(q), j = QuatElem::unit_j(q);
    const RatFunc a = rf(q, "a"), b = rf(q, "b");

    CHECK((i * j + j * i).is_zero());
    CHECK(i * i == QuatElem::constant(a));
    CHECK(j * j == QuatElem::constant(b));
    CHECK((i * j) * (i * j) == QuatElem::constant(-(a * b)));
    CHECK(i * j == -(j * i));

    std::mt19937_64 rng(20240902);
    for (int t = 0; t < 20; ++t) {
        QuatElem x = rand_quat(q, rng), y = rand_quat(q, rng), z = rand_quat(q, rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("quaternion conjugation and reduced norm") {
    BaseField q = BaseField::rationals();
    CHECK(qe(q, "1", "0", "2", "0").norm() == rf(q, "1-4*b"));
    CHECK(qe(q, "1", "2", "0", "0").norm() == rf(q, "1-4*a"));

    std::mt19937_64 rng(20240903);
    for (int t = 0; t < 30; ++t) {
        QuatElem x = rand_quat(q, rng), y = rand_quat(q, rng);
        CHECK((x * y).conj() == y.conj() * x.conj());
        CHECK(x * x.conj() == QuatElem::constant(x.norm()));
        CHECK((x * y).norm() == x.norm() * y.norm());
        if (!x.is_zero()) {
            CHECK((x * x.inv()).is_one());
            CHECK((x.inv() * x).is_one());
        }
    }
}

TEST_CASE("quaternion inverse matches the closed forms") {
    BaseField q = BaseField::rationals();
    // (1-2j)(1+2j)^-1 = (1-4b)^-1 (1-2j)^2
    QuatElem r = qe(q, "1", "0", "-2", "0"), s = qe(q, "1", "0", "2", "0");
    CHECK(r * s.inv() == r * r * rf(q, "1/(1-4*b)"));

    // with w = b^2 + b^-3: (1-w ij)(1+w ij)^-1 = (1+w^2 ab)^-1 (1 - w^2 ab - 2w ij)
    RatFunc w = rf(q, "b^2+1/b^3");
    QuatElem p = QuatElem::one(q) - QuatElem(q, {rf(q, "0"), rf(q, "0"), rf(q, "0"), w});
    QuatElem m = QuatElem::one(q) + QuatElem(q, {rf(q, "0"), rf(q, "0"), rf(q, "0"), w});
    RatFunc n = rf(q, "1") + w * w * rf(q, "a*b");
    QuatElem expect =
        QuatElem(q, {(rf(q, "1") - w * w * rf(q, "a*b")) / n, rf(q, "0"), rf(q, "0"),
                     -(w + w) / n});
    CHECK(p * m.inv() == expect);

    CHECK(thrown_code([&] { QuatElem::zero(q).inv(); }) == errc::zero_norm);
}

TEST_CASE("cayley transform in the quaternions") {
    BaseField q = BaseField::rationals();
    CHECK(cayley(QuatElem::zero(q)).is_one());

    // r = (1 - 1/b) j gives (-b+3b^2-b^3)^-1 (b + (1-b) j)^2
    QuatElem r = qe(q, "0", "0", "1-1/b", "0");
    QuatElem base = qe(q, "b", "0", "1-b", "0");
    CHECK(cayley(r) == base * base * rf(q, "1/(-b+3*b^2-b^3)"));

    // r anti-symmetric under conjugation gives a norm-one result
    QuatElem skew = qe(q, "0", "1", "2", "b");
    CHECK(cayley(skew).norm() == rf(q, "1"));

    CHECK(thrown_code([&] { cayley(-QuatElem::one(q)); }) == errc::not_invertible);
}

TEST_CASE("quaternion regular representations") {
    BaseField q = BaseField::rationals();
    ExtDescPtr L = quat_desc_L(q), K = quat_desc_K(q);

    CHECK(quat_rep_L(QuatElem::one(q)) == SqMatrix::identity(L, 2));
    CHECK(quat_rep_K(QuatElem::one(q)) == SqMatrix::identity(K, 2));

    // 1 + i is diagonal over L with conjugate entries.
    SqMatrix d = quat_rep_L(qe(q, "1", "1", "0", "0"));
    CHECK(d == SqMatrix::diag({parse_ext(L, "1+i"), parse_ext(L, "1-i")}));
    CHECK(d.is_diagonal());

    // the Cayley image of w ij over L
    RatFunc w = rf(q, "b^2+1/b^3");
    RatFunc n = rf(q, "1") + w * w * rf(q, "a*b");
    QuatElem v = cayley(QuatElem(q, {rf(q, "0"), rf(q, "0"), rf(q, "0"), w}));
    RatFunc zero = rf(q, "0");
    SqMatrix expect = SqMatrix::from_rows(
        {{ExtElem(L, {(rf(q, "1") - w * w * rf(q, "a*b")) / n, zero}),
          ExtElem(L, {zero, -(w + w) / n})},
         {ExtElem(L, {zero, (w + w) * rf(q, "b") / n}),
          ExtElem(L, {(rf(q, "1") - w * w * rf(q, "a*b")) / n, zero})}});
    CHECK(quat_rep_L(v) == expect);
    CHECK(v.norm() == rf(q, "1"));

    std::mt19937_64 rng(20240904);
    for (int t = 0; t < 30; ++t) {
        QuatElem x = rand_quat(q, rng), y = rand_quat(q, rng);
        CHECK(quat_rep_L(x * y) == quat_rep_L(x) * quat_rep_L(y));
        CHECK(quat_rep_K(x * y) == quat_rep_K(x) * quat_rep_K(y));
        CHECK(quat_rep_L(x).det() == ExtElem::constant(L, x.norm()));
        CHECK(quat_rep_K(x).det() == ExtElem::constant(K, x.norm()));
    }
}

TEST_CASE("quaternion involutions") {
    BaseField q = BaseField::rationals();
    const QuatElem i = QuatElem::unit_i(q), j = QuatElem::unit_j(q);
    const RatFunc a = rf(q, "a"), b = rf(q, "b");

    QuatInvolution conj_inv = make_quat_involution(-i, -j, a, b);
    QuatInvolution orth = make_quat_involution(i, j, a, b);
    QuatInvolution swap = make_quat_involution(j, i, b, a);
    QuatInvolution inverting =
        make_quat_involution(i * a.inv(), j * b.inv(), a.inv(), b.inv());

    std::mt19937_64 rng(20240905);
    for (int t = 0; t < 25; ++t) {
        QuatElem x = rand_quat(q, rng), y = rand_quat(q, rng);
        CHECK(conj_inv(x) == x.conj());
        for (const QuatInvolution* inv : {&conj_inv, &orth, &swap, &inverting}) {
            CHECK((*inv)((*inv)(x)) == x);
            CHECK((*inv)(x * y) == (*inv)(y) * (*inv)(x));
        }
    }
    CHECK(is_symmetric(orth, i));
    CHECK_FALSE(is_symmetric(conj_inv, i));
    CHECK(inverting(QuatElem::constant(a)) == QuatElem::constant(a.inv()));

    // center map of order four
    CHECK(thrown_code([&] { make_quat_involution(i, j, a * a, b); }) == errc::not_order_two);
    // image squares inconsistent with the center map
    CHECK(thrown_code([&] { make_quat_involution(i, j, a.inv(), b.inv()); }) ==
          errc::invalid_spec);
    // image square not central
    CHECK(thrown_code([&] { make_quat_involution(i + QuatElem::one(q), j, a, b); }) ==
          errc::invalid_spec);
    // image square central but not the image of b
    CHECK(thrown_code([&] { make_quat_involution(i, j * (a / b), a, b); }) ==
          errc::invalid_spec);
}

TEST_CASE("cyclic algebra defining relations") {
    BaseField f = BaseField::gf3();
    ExtDescPtr ki = make_cyc_descriptor(f);
    const CycElem i = CycElem::gen_i(ki), j = CycElem::gen_j(ki), one = CycElem::one(ki);
    const ExtElem gi = ExtElem::generator(ki);

    CHECK(i * j == j * (i + one));
    CHECK(j * i == (i + one + one) * j);
    CHECK(j * j * j == one * rf(f, "b"));
    CHECK(i * i * i - i == one * rf(f, "a"));

    std::mt19937_64 rng(20240906);
    for (int t = 0; t < 15; ++t) {
        CycElem x = rand_cyc(ki, rng), y = rand_cyc(ki, rng), z = rand_cyc(ki, rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        // a and b are central
        for (const char* c : {"a", "b"}) {
            CycElem s = one * rf(f, c);
            CHECK(s * x == x * s);
        }
    }
    // in left-coordinate form i j is already normal: the j-coefficient is i itself,
    // while j i picks up the twist
    CHECK((i * j).coord(1) == gi);
    CHECK((j * i).coord(1) == gi + ExtElem::one(ki) + ExtElem::one(ki));
}

TEST_CASE("cyclic inverse matches the closed forms") {
    BaseField f = BaseField::gf3();
    ExtDescPtr ki = make_cyc_descriptor(f);
    const CycElem j = CycElem::gen_j(ki), one = CycElem::one(ki);

    // (1+2j)(1+j)^-1 = (1+b)^-1 (1+2b + j + 2j^2)
    CycElem lhs = (one + j * rf(f, "2")) * (one + j).inv();
    CycElem rhs = CycElem(ki, {ExtElem::constant(ki, rf(f, "(1+2*b)/(1+b)")),
                               ExtElem::constant(ki, rf(f, "1/(1+b)")),
                               ExtElem::constant(ki, rf(f, "2/(1+b)"))});
    CHECK(lhs == rhs);

    // inside K: 2(1+i) i^-1 = 2 a^-1 (i+1)^2 (i+2)   (note -2 = 1 in GF(3))
    CycElem num = CycElem::from_ext(parse_ext(ki, "2*(1+i)"));
    CycElem den = CycElem::from_ext(parse_ext(ki, "-2*i"));
    CHECK(num * den.inv() == CycElem::from_ext(parse_ext(ki, "2*(i+1)^2*(i+2)/a")));

    std::mt19937_64 rng(20240907);
    int done = 0;
    while (done < 100) {
        CycElem x = rand_cyc(ki, rng, 1);
        if (x.is_zero()) continue;
        CycElem y = x.inv();
        CHECK((x * y).is_one());
        if (done < 10) CHECK((y * x).is_one());
        ++done;
    }

    CHECK(cayley(CycElem::zero(ki)).is_one());
    CHECK(thrown_code([&] { cayley(-one); }) == errc::not_invertible);
    CHECK(thrown_code([&] { CycElem::zero(ki).inv(); }) == errc::not_invertible);
}

TEST_CASE("cyclic regular representation") {
    BaseField f = BaseField::gf3();
    ExtDescPtr ki = make_cyc_descriptor(f);
    const CycElem i = CycElem::gen_i(ki), j = CycElem::gen_j(ki);
    auto pe = [&](const std::string& s) { return parse_ext(ki, s); };

    CHECK(cyc_reg_rep(CycElem::one(ki)) == SqMatrix::identity(ki, 3));

    // j^-1 i^2 - i j
    CycElem x = j.inv() * i * i - i * j;
    SqMatrix w = SqMatrix::from_rows({{pe("0"), pe("2*i"), pe("(i+1)^2/b")},
                                      {pe("i^2"), pe("0"), pe("2*i+1")},
                                      {pe("2*b*(i+1)"), pe("(i+2)^2"), pe("0")}});
    CHECK(cyc_reg_rep(x) == w);

    // a central scalar becomes the diagonal of its conjugates
    CycElem u = CycElem::from_ext(pe("(1+i^2)/(1+(i+1)^2)"));
    SqMatrix ud = SqMatrix::diag({pe("(1+i^2)/(1+(i+1)^2)"), pe("(1+(i+2)^2)/(1+i^2)"),
                                  pe("(1+(i+1)^2)/(1+(i+2)^2)")});
    CHECK(cyc_reg_rep(u) == ud);

    // (1+2j)(1+j)^-1 over the scalar part of K
    CycElem v = (CycElem::one(ki) + j * rf(f, "2")) * (CycElem::one(ki) + j).inv();
    SqMatrix vm = SqMatrix::from_rows({{pe("(1+2*b)/(1+b)"), pe("1/(1+b)"), pe("2/(1+b)")},
                                       {pe("2*b/(1+b)"), pe("(1+2*b)/(1+b)"), pe("1/(1+b)")},
                                       {pe("b/(1+b)"), pe("2*b/(1+b)"), pe("(1+2*b)/(1+b)")}});
    CHECK(cyc_reg_rep(v) == vm);

    std::mt19937_64 rng(20240908);
    for (int t = 0; t < 25; ++t) {
        CycElem p = rand_cyc(ki, rng), r = rand_cyc(ki, rng);
        CHECK(cyc_reg_rep(p * r) == cyc_reg_rep(p) * cyc_reg_rep(r));
    }
}

TEST_CASE("cyclic involutions") {
    BaseField f = BaseField::gf3();
    ExtDescPtr ki = make_cyc_descriptor(f);
    const CycElem i = CycElem::gen_i(ki), j = CycElem::gen_j(ki), one = CycElem::one(ki);

    // sign involution: i -> -i-1, j -> -j, a -> -a, b -> -b
    CycInvolution sign = make_cyc_involution(-(i + one), -j, rf(f, "-a"), rf(f, "-b"));
    // swap involution: i -> i, j -> j^-1 i, a -> a, b -> a/b
    CycInvolution swap = make_cyc_involution(i, j.inv() * i, rf(f, "a"), rf(f, "a/b"));

    std::mt19937_64 rng(20240909);
    for (int t = 0; t < 15; ++t) {
        CycElem x = rand_cyc(ki, rng), y = rand_cyc(ki, rng);
        for (const CycInvolution* inv : {&sign, &swap}) {
            CHECK((*inv)((*inv)(x)) == x);
            CHECK((*inv)(x * y) == (*inv)(y) * (*inv)(x));
        }
    }
    CHECK(is_symmetric(swap, i));

    // twist relation violated
    CHECK(thrown_code([&] { make_cyc_involution(i + one, j, rf(f, "a"), rf(f, "b")); }) ==
          errc::invalid_spec);
    // center map of the wrong order
    CHECK(thrown_code([&] { make_cyc_involution(i, j, rf(f, "a+1"), rf(f, "b")); }) ==
          errc::not_order_two);
    // wrong characteristic rejected outright
    CHECK(thrown_code([&] { make_cyc_descriptor(BaseField::rationals()); }) ==
          errc::invalid_spec);
}
