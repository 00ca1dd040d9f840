#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <vector>

#include "freepairs/heisenberg.hpp"
#include "helpers.hpp"

using namespace freepairs;
using namespace testutil;

static HeisElem rand_heis(std::mt19937_64& rng, int bound = 4) {
    std::uniform_int_distribution<int> d(-bound, bound);
    return {d(rng), d(rng), d(rng)};
}

/** Power by iterated multiplication; the closed form must agree with it. */
static HeisElem pow_by_loop(const HeisElem& g, int k) {
    HeisElem acc = heis_identity();
    for (int t = 0; t < k; ++t) acc = heis_mul(acc, g);
    return acc;
}

/** Random matrix of determinant +-1 as a short product of elementary matrices. */
static IntMatrix2 rand_unimodular(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 3), shear(-2, 2);
    IntMatrix2 u = IntMatrix2::identity();
    for (int t = 0; t < 6; ++t) {
        switch (pick(rng)) {
        case 0: u = u * IntMatrix2(1, shear(rng), 0, 1); break;
        case 1: u = u * IntMatrix2(1, 0, shear(rng), 1); break;
        case 2: u = u * IntMatrix2(1, 0, 0, -1); break;
        case 3: u = u * IntMatrix2(0, 1, 1, 0); break;
        }
    }
    return u;
}

/**
 * Conjugacy class of an order-two matrix found by exhaustive search over
 * conjugators with small entries.  Empty when no small conjugator reaches
 * any of the four representatives.
 */
static std::optional<Order2Class> exhaustive_class(const IntMatrix2& a) {
    const Order2Class classes[] = {Order2Class::ID, Order2Class::NEG_ID, Order2Class::D,
                                   Order2Class::S};
    for (int t00 = -3; t00 <= 3; ++t00)
        for (int t01 = -3; t01 <= 3; ++t01)
            for (int t10 = -3; t10 <= 3; ++t10)
                for (int t11 = -3; t11 <= 3; ++t11) {
                    int dt = t00 * t11 - t01 * t10;
                    if (dt != 1 && dt != -1) continue;
                    IntMatrix2 t(t00, t01, t10, t11);
                    IntMatrix2 c = t * a * t.inv();
                    for (Order2Class cls : classes)
                        if (c == order2_representative(cls)) return cls;
                }
    return std::nullopt;
}

TEST_CASE("group normal form arithmetic") {
    const HeisElem x = heis_x(), y = heis_y(), l = heis_lambda();

    CHECK(heis_mul(x, y) == HeisElem{1, 1, 1});
    CHECK(heis_mul(y, x) == HeisElem{0, 1, 1});
    CHECK(heis_pow(heis_mul(y, x), 2) == HeisElem{1, 2, 2});
    CHECK(heis_pow(heis_mul(y, x), 3) == HeisElem{3, 3, 3});
    CHECK(heis_mul(heis_mul(x, y), heis_inv(y)) == x);
    CHECK(heis_mul(heis_inv(y), heis_mul(y, x)) == x);
    CHECK(heis_mul(x, heis_mul(y, heis_mul(heis_inv(x), heis_inv(y)))) ==
          heis_lambda());
    CHECK(heis_pow(x, 0) == heis_identity());
    CHECK(heis_mul(l, x) == heis_mul(x, l));

    CHECK(heis_identity().str() == "1");
    CHECK(HeisElem{2, 1, -1}.str() == "L^2 Y X^-1");
    CHECK(HeisElem{0, 0, 3}.str() == "X^3");

    std::mt19937_64 rng(20240910);
    for (int t = 0; t < 100; ++t) {
        HeisElem g = rand_heis(rng), h = rand_heis(rng), k = rand_heis(rng);
        CHECK(heis_mul(heis_mul(g, h), k) == heis_mul(g, heis_mul(h, k)));
        CHECK(heis_mul(g, heis_inv(g)) == heis_identity());
        CHECK(heis_mul(heis_inv(g), g) == heis_identity());
    }
    for (int t = 0; t < 25; ++t) {
        HeisElem g = rand_heis(rng);
        for (int s = 0; s <= 6; ++s) {
            CHECK(heis_pow(g, s) == pow_by_loop(g, s));
            CHECK(heis_pow(g, -s) == heis_inv(pow_by_loop(g, s)));
        }
    }
}

TEST_CASE("order-two classification in GL2(Z)") {
    const IntMatrix2 I = IntMatrix2::identity();
    const IntMatrix2 D = order2_representative(Order2Class::D);
    const IntMatrix2 S = order2_representative(Order2Class::S);

    CHECK(classify_order2(I).cls == Order2Class::ID);
    CHECK(classify_order2(-I).cls == Order2Class::NEG_ID);
    CHECK(classify_order2(D).cls == Order2Class::D);
    CHECK(classify_order2(D).conjugator == I);
    CHECK(classify_order2(S).cls == Order2Class::S);
    CHECK(classify_order2(S).conjugator == I);

    // Every order-two matrix with small entries: classifier against brute force.
    int checked = 0;
    for (int a00 = -2; a00 <= 2; ++a00)
        for (int a01 = -2; a01 <= 2; ++a01)
            for (int a10 = -2; a10 <= 2; ++a10)
                for (int a11 = -2; a11 <= 2; ++a11) {
                    int dt = a00 * a11 - a01 * a10;
                    if (dt != 1 && dt != -1) continue;
                    IntMatrix2 a(a00, a01, a10, a11);
                    if (a * a != IntMatrix2::identity()) continue;
                    auto brute = exhaustive_class(a);
                    REQUIRE(brute.has_value());
                    Order2Classification got = classify_order2(a);
                    CHECK(got.cls == *brute);
                    CHECK(got.conjugator * a ==
                          order2_representative(got.cls) * got.conjugator);
                    ++checked;
                }
    CHECK(checked > 20);

    auto swap_like = classify_order2(IntMatrix2(1, 0, 1, -1));
    CHECK(swap_like.cls == Order2Class::S);
    auto anti_diag = classify_order2(IntMatrix2(0, -1, -1, 0));
    CHECK(anti_diag.cls == Order2Class::S);
    CHECK(exhaustive_class(IntMatrix2(0, -1, -1, 0)) == Order2Class::S);

    std::mt19937_64 rng(20240911);
    for (Order2Class cls :
         {Order2Class::ID, Order2Class::NEG_ID, Order2Class::D, Order2Class::S}) {
        const IntMatrix2 rep = order2_representative(cls);
        for (int t = 0; t < 100; ++t) {
            IntMatrix2 u = rand_unimodular(rng);
            IntMatrix2 a = u * rep * u.inv();
            Order2Classification res = classify_order2(a);
            CHECK(res.cls == cls);
            CHECK(res.conjugator * a == order2_representative(cls) * res.conjugator);
        }
    }

    CHECK(thrown_code([&] { classify_order2(IntMatrix2(1, 1, 0, 1)); }) ==
          errc::not_order_two);
    CHECK(thrown_code([&] { IntMatrix2(1, 0, 0, 2); }) == errc::invalid_spec);
}

TEST_CASE("automorphism lifts") {
    const HeisElem x = heis_x(), y = heis_y();

    HeisAutomorphism sw = lift_automorphism(IntMatrix2(0, 1, 1, 0));
    CHECK(sw.x_image == y);
    CHECK(sw.y_image == x);
    CHECK(sw.lambda_exp == -1);

    HeisAutomorphism id = lift_automorphism(IntMatrix2::identity());
    CHECK(id.x_image == x);
    CHECK(id.y_image == y);
    CHECK(id.lambda_exp == 1);

    HeisAutomorphism tri = lift_automorphism(IntMatrix2(1, 0, 1, -1));
    CHECK(tri.x_image == x);
    CHECK(tri.y_image == HeisElem{-1, -1, 1});
    CHECK(tri.lambda_exp == -1);

    std::mt19937_64 rng(20240912);
    for (int t = 0; t < 100; ++t) {
        IntMatrix2 u = rand_unimodular(rng);
        HeisAutomorphism phi = lift_automorphism(u);
        CHECK(phi.x_image.n == u.at(0, 0));
        CHECK(phi.x_image.m == u.at(0, 1));
        CHECK(phi.y_image.n == u.at(1, 0));
        CHECK(phi.y_image.m == u.at(1, 1));
        CHECK(Int(phi.lambda_exp) == u.det());
        HeisElem g = rand_heis(rng), h = rand_heis(rng);
        CHECK(phi(heis_mul(g, h)) == heis_mul(phi(g), phi(h)));
    }
}

TEST_CASE("group involutions") {
    const HeisElem x = heis_x(), y = heis_y(), l = heis_lambda();

    HeisInvolution flip = HeisInvolution::make(InvolutionType::II);
    CHECK(flip(x) == heis_inv(x));
    CHECK(flip(y) == heis_inv(y));
    CHECK(flip(l) == heis_inv(l));

    HeisInvolution tw = HeisInvolution::make(InvolutionType::I, 2, 4);
    CHECK(tw(x) == HeisElem{2, 0, 1});
    CHECK(tw(y) == HeisElem{4, 1, 0});
    CHECK(tw(l) == heis_inv(l));
    CHECK(tw.str() == "type I (m=2, n=4)");

    HeisInvolution tilt = HeisInvolution::make(InvolutionType::III, 1);
    CHECK(tilt(x) == x);
    CHECK(tilt(y) == HeisElem{1, -1, 0});
    CHECK(tilt(l) == l);

    HeisInvolution cross = HeisInvolution::make(InvolutionType::IV, 1);
    CHECK(cross(x) == HeisElem{1, 1, 0});
    CHECK(cross(y) == HeisElem{-1, 0, 1});
    CHECK(cross(l) == l);

    // Word reversal is the defining anti-automorphism property: apply the
    // involution letter by letter in reverse and compare with the closed form.
    std::mt19937_64 rng(20240913);
    const HeisElem letters[] = {x,         y,         l,
                                heis_inv(x), heis_inv(y), heis_inv(l)};
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<int> len(1, 8), pick(0, 5);
        std::vector<int> word(len(rng));
        HeisElem prod = heis_identity();
        for (int& c : word) {
            c = pick(rng);
            prod = heis_mul(prod, letters[c]);
        }
        HeisElem reversed = heis_identity();
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            reversed = heis_mul(reversed, tw(letters[*it]));
        CHECK(tw(prod) == reversed);
    }

    std::mt19937_64 rng2(20240914);
    for (const HeisInvolution& inv : {flip, tw, tilt, cross}) {
        for (int t = 0; t < 200; ++t) {
            HeisElem g = rand_heis(rng2), h = rand_heis(rng2);
            CHECK(inv(heis_mul(g, h)) == heis_mul(inv(h), inv(g)));
            CHECK(inv(inv(g)) == g);
        }
    }
}

TEST_CASE("group ring arithmetic") {
    BaseField q = BaseField::rationals();
    auto ge = [&](const HeisElem& g) { return GroupRingElem::group_elem(q, g); };
    const GroupRingElem one = GroupRingElem::one(q);

    GroupRingElem u = one + ge(heis_x());
    GroupRingElem v = one + ge(heis_y());
    GroupRingElem prod = u * v;
    GroupRingElem expect =
        one + ge(heis_x()) + ge(heis_y()) + ge(HeisElem{1, 1, 1});
    CHECK(prod == expect);
    CHECK(prod.str() == "1 + X + Y + L Y X");

    CHECK((u - u).is_zero());
    CHECK((u * GroupRingElem::zero(q)).is_zero());
    GroupRingElem cancel = GroupRingElem::monomial(q, heis_x(), Scalar::from_int(q, 3)) +
                           GroupRingElem::monomial(q, heis_x(), Scalar::from_int(q, -3));
    CHECK(cancel.is_zero());
    CHECK((u * Scalar::from_int(q, 2)).str() == "2 + 2 * X");

    HeisInvolution flip = HeisInvolution::make(InvolutionType::II);
    GroupRingElem w = one + ge(heis_x()) * Scalar::from_int(q, 2);
    CHECK(involution_apply(flip, w) ==
          one + ge(heis_inv(heis_x())) * Scalar::from_int(q, 2));

    std::mt19937_64 rng(20240915);
    for (int t = 0; t < 50; ++t) {
        GroupRingElem s = ge(rand_heis(rng)) + ge(rand_heis(rng));
        GroupRingElem r = ge(rand_heis(rng)) - ge(rand_heis(rng));
        CHECK(involution_apply(flip, s * r) ==
              involution_apply(flip, r) * involution_apply(flip, s));
    }
}

TEST_CASE("specialization to the quaternions") {
    BaseField q = BaseField::rationals();
    auto ge = [&](const HeisElem& g) { return GroupRingElem::group_elem(q, g); };
    const GroupRingElem one = GroupRingElem::one(q);
    const QuatElem qi = QuatElem::unit_i(q), qj = QuatElem::unit_j(q);

    CHECK(specialize_quat(QuatSpecialization::PSI, q, heis_lambda()) == -QuatElem::one(q));
    CHECK(specialize_quat(QuatSpecialization::PSI, q, heis_x()) == qi);
    CHECK(specialize_quat(QuatSpecialization::PSI, q, heis_y()) == qj);
    CHECK(specialize_quat(QuatSpecialization::PHI, q, heis_y()) == qi * qj);

    HeisInvolution tw = HeisInvolution::make(InvolutionType::I, 2, 4);
    GroupRingElem sym_x = one + ge(heis_x()) + ge(tw(heis_x()));
    GroupRingElem sym_y = one + ge(heis_y()) + ge(tw(heis_y()));
    CHECK(specialize_quat(QuatSpecialization::PSI, sym_x) ==
          QuatElem::one(q) + qi + qi);
    CHECK(specialize_quat(QuatSpecialization::PSI, sym_y) ==
          QuatElem::one(q) + qj + qj);
    CHECK(specialize_quat(QuatSpecialization::PHI, sym_x) ==
          QuatElem::one(q) + qi + qi);

    // Unitary pair with odd twist: the i-terms cancel and the image is 1.
    HeisInvolution cross = HeisInvolution::make(InvolutionType::IV, 1);
    GroupRingElem mixed = one + ge(heis_x()) + ge(cross(heis_y()));
    CHECK(specialize_quat(QuatSpecialization::PSI, mixed) == QuatElem::one(q));

    std::mt19937_64 rng(20240916);
    for (QuatSpecialization kind : {QuatSpecialization::PSI, QuatSpecialization::PHI}) {
        for (int t = 0; t < 50; ++t) {
            GroupRingElem s = ge(rand_heis(rng, 3)) + ge(rand_heis(rng, 3));
            GroupRingElem r = ge(rand_heis(rng, 3)) - ge(rand_heis(rng, 3));
            CHECK(specialize_quat(kind, s * r) ==
                  specialize_quat(kind, s) * specialize_quat(kind, r));
            HeisElem g = rand_heis(rng, 3), h = rand_heis(rng, 3);
            CHECK(specialize_quat(kind, q, heis_mul(g, h)) ==
                  specialize_quat(kind, q, g) * specialize_quat(kind, q, h));
        }
    }
}
