#pragma once

#include <optional>
#include <string>

#include "freepairs/extension.hpp"

namespace freepairs {

/**
 * A discrete valuation on a (possibly trivial) extension E of the rational
 * function field, specified by
 *   - base_var / base_prime: the prime p of k(rest)[base_var] below it,
 *   - gen_image: image of E's generator in the residue field
 *       R = k(rest)[base_var]/(p)  (a degree-1 or degree-2 descriptor whose
 *       generator is base_var itself),
 *   - uniformizer: an integral element pi with residue 0 and
 *       ord_p(Norm(pi)) = 1.
 * The last condition pins down exactly one unramified prime above p with
 * residue field R, so valuations and residues are well defined and are
 * computed by the divide-by-pi loop in analyze().
 */
class Place {
public:
    const std::string& name() const { return name_; }
    const ExtDescPtr& field_descriptor() const { return field_; }
    const std::string& base_var() const { return base_var_; }
    /** Monic (in base_var) canonical generator of the base prime. */
    const MultiPoly& base_prime() const { return base_prime_; }
    const ExtDescPtr& residue_descriptor() const { return residue_; }
    const ExtElem& gen_image() const { return gen_image_; }
    const ExtElem& uniformizer() const { return uniformizer_; }

    /** ord at base_prime of an element of the base field (num minus den order). */
    long ord_base(const RatFunc& r) const;
    /** Coefficient-wise reduction of a polynomial into the residue field. */
    ExtElem residue_of_poly(const MultiPoly& c) const;
    /** Reduction of a base-field element whose denominator is prime to p. */
    ExtElem residue_of_base(const RatFunc& r) const;

    struct Value {
        long nu;              // the valuation
        ExtElem unit_residue; // nonzero residue of x * pi^(-nu)
    };
    /** Full valuation data; errors: ZERO_INPUT on x = 0. */
    Value analyze(const ExtElem& x) const;
    long valuation_of(const ExtElem& x) const;
    /** Image in the residue field, or nullopt when x is below the valuation ring. */
    std::optional<ExtElem> residue_of(const ExtElem& x) const;

private:
    friend Place make_place(const ExtDescPtr&, const std::string&, const MultiPoly&,
                            const std::string&, const ExtElem&, const std::string&);
    struct Parts; // everything make_place computes, moved in wholesale
    explicit Place(Parts parts);

    long ord_poly(const MultiPoly& q) const; // errors on zero input

    std::string name_;
    ExtDescPtr field_;
    std::string base_var_;
    MultiPoly base_prime_;
    ExtDescPtr residue_;
    ExtElem gen_image_;
    ExtElem uniformizer_;

    // precomputed data for the valuation loop: pi^-1 = u / (p * m_tilde)
    ExtElem u_;
    MultiPoly m_tilde_;
    ExtElem res_u_inv_;  // res(u)^-1
    ExtElem theta_;      // res(p / pi) = res(u)/res(m_tilde)
    ExtElem theta_inv_;
};

/**
 * Validate and build a place.  gen_image is parsed over the residue field
 * (generator = base_var, identifiers = remaining variables).
 * Errors: INVALID_PLACE with reason GEN_IMAGE_NOT_ROOT, UNIFORMIZER_NOT_IN_PRIME
 * or RAMIFICATION_UNSUPPORTED; INVALID_SPEC for structurally malformed input.
 */
Place make_place(const ExtDescPtr& field, const std::string& base_var, const MultiPoly& base_prime,
                 const std::string& gen_image, const ExtElem& uniformizer, const std::string& name);

/** Field norm of x down to the rational function field. */
inline RatFunc norm_to_base(const ExtElem& x) { return x.norm(); }

} // namespace freepairs
