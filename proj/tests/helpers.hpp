#pragma once

#include <optional>
#include <random>

#include "freepairs/cyclic.hpp"
#include "freepairs/matrix.hpp"
#include "freepairs/parse.hpp"
#include "freepairs/quaternion.hpp"

namespace testutil {

using namespace freepairs;

template <typename F>
std::optional<errc> thrown_code(F&& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline RatFunc rf(const BaseField& f, const std::string& s) { return parse_ratfunc(f, s); }

/** gen^2 = under over field(a, b). */
inline ExtDescPtr desc_sqrt(const BaseField& f, const std::string& gen, const std::string& under) {
    return make_ext_descriptor(f, {"a", "b"}, gen,
                               {-RatFunc::variable(f, under), RatFunc::zero(f), RatFunc::one(f)});
}

/** i^3 = i + a over field(a, b). */
inline ExtDescPtr desc_cubic_i(const BaseField& f) {
    return make_ext_descriptor(f, {"a", "b"}, "i",
                               {-RatFunc::variable(f, "a"), -RatFunc::one(f), RatFunc::zero(f),
                                RatFunc::one(f)});
}

/** j^3 = b over field(a, b). */
inline ExtDescPtr desc_cube_j(const BaseField& f) {
    return make_ext_descriptor(f, {"a", "b"}, "j",
                               {-RatFunc::variable(f, "b"), RatFunc::zero(f), RatFunc::zero(f),
                                RatFunc::one(f)});
}

inline Scalar rand_scalar(const BaseField& f, std::mt19937_64& rng) {
    if (f.is_prime()) {
        long p = f.characteristic().convert_to<long>();
        return Scalar::from_int(f, rng() % static_cast<unsigned long>(p));
    }
    long num = static_cast<long>(rng() % 11) - 5;
    long den = 1 + static_cast<long>(rng() % 3);
    return Scalar(f, Rat(num, den));
}

inline MultiPoly rand_poly(const BaseField& f, std::mt19937_64& rng, int max_terms = 3,
                           int max_exp = 2) {
    MultiPoly p = MultiPoly::zero(f);
    int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int t = 0; t < terms; ++t) {
        MultiPoly mono = MultiPoly::variable(f, "a", static_cast<int>(rng() % (max_exp + 1))) *
                         MultiPoly::variable(f, "b", static_cast<int>(rng() % (max_exp + 1)));
        p = p + mono.scaled(rand_scalar(f, rng));
    }
    return p;
}

inline MultiPoly rand_nonzero_poly(const BaseField& f, std::mt19937_64& rng, int max_terms = 3,
                                   int max_exp = 2) {
    for (;;) {
        MultiPoly p = rand_poly(f, rng, max_terms, max_exp);
        if (!p.is_zero()) return p;
    }
}

inline RatFunc rand_ratfunc(const BaseField& f, std::mt19937_64& rng) {
    return RatFunc(rand_poly(f, rng), rand_nonzero_poly(f, rng, 2, 1));
}

inline ExtElem rand_ext(const ExtDescPtr& d, std::mt19937_64& rng) {
    std::vector<RatFunc> c;
    for (int k = 0; k < d->degree(); ++k)
        c.push_back(RatFunc(rand_poly(d->field(), rng, 2, 1), rand_nonzero_poly(d->field(), rng, 1, 1)));
    return ExtElem(d, std::move(c));
}

/** Random element with only polynomial coordinates. */
inline ExtElem rand_integral_ext(const ExtDescPtr& d, std::mt19937_64& rng) {
    std::vector<RatFunc> c;
    for (int k = 0; k < d->degree(); ++k) c.emplace_back(rand_poly(d->field(), rng, 2, 1));
    return ExtElem(d, std::move(c));
}

inline ExtElem eval_poly_at(const std::vector<RatFunc>& coeffs, const ExtElem& x) {
    ExtElem acc = ExtElem::zero(x.descriptor());
    for (size_t k = coeffs.size(); k-- > 0;)
        acc = acc * x + ExtElem::constant(x.descriptor(), coeffs[k]);
    return acc;
}

/** Small polynomial coordinate, occasionally divided by b to cover the fraction path. */
inline RatFunc rand_light_ratfunc(const BaseField& f, std::mt19937_64& rng, int max_terms = 2) {
    RatFunc p{rand_poly(f, rng, max_terms, 1)};
    if (rng() % 3 == 0) p = p / RatFunc::variable(f, "b");
    return p;
}

inline QuatElem rand_quat(const BaseField& f, std::mt19937_64& rng) {
    return QuatElem(f, {rand_light_ratfunc(f, rng), rand_light_ratfunc(f, rng),
                        rand_light_ratfunc(f, rng), rand_light_ratfunc(f, rng)});
}

inline ExtElem rand_light_ext(const ExtDescPtr& d, std::mt19937_64& rng, int max_terms = 2) {
    std::vector<RatFunc> c;
    for (int k = 0; k < d->degree(); ++k)
        c.push_back(rand_light_ratfunc(d->field(), rng, max_terms));
    return ExtElem(d, std::move(c));
}

inline CycElem rand_cyc(const ExtDescPtr& ki, std::mt19937_64& rng, int max_terms = 2) {
    return CycElem(ki, {rand_light_ext(ki, rng, max_terms), rand_light_ext(ki, rng, max_terms),
                        rand_light_ext(ki, rng, max_terms)});
}

} // namespace testutil
