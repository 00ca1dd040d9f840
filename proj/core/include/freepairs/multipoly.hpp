#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freepairs/scalar.hpp"

namespace freepairs {

/** Fixed global variable order: a < b < lambda < X, then everything else. */
int var_rank(const std::string& name);
bool var_less(const std::string& lhs, const std::string& rhs);

using Mono = std::vector<int>; // exponent vector, aligned with the owner's vars

/**
 * Multivariate polynomial over a BaseField with a canonical representation:
 * variables kept sorted in the global order and pruned when unused, terms kept
 * in descending graded-lex order, zero coefficients dropped.  Representational
 * equality therefore coincides with mathematical equality.
 */
class MultiPoly {
public:
    struct GrlexDesc {
        // "less" for std::map; greater monomials sort first so that iteration
        // runs from the leading term downwards.
        bool operator()(const Mono& x, const Mono& y) const;
    };
    using TermMap = std::map<Mono, Scalar, GrlexDesc>;

    explicit MultiPoly(const BaseField& f) : field_(f) {}
    static MultiPoly zero(const BaseField& f) { return MultiPoly(f); }
    static MultiPoly constant(const Scalar& c);
    static MultiPoly constant(const BaseField& f, const Rat& c) { return constant(Scalar(f, c)); }
    static MultiPoly variable(const BaseField& f, const std::string& name, int exp = 1);
    static MultiPoly from_terms(const BaseField& f, std::vector<std::string> vars,
                                std::vector<std::pair<Mono, Scalar>> terms);

    const BaseField& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_value() const; // requires is_constant()
    bool is_one() const { return is_constant() && !is_zero() && constant_value().is_one(); }

    int total_degree() const;               // -1 for the zero polynomial
    int degree_in(const std::string& var) const;
    bool uses_var(const std::string& var) const { return degree_in(var) > 0; }

    Scalar leading_coeff() const;           // under global graded-lex
    MultiPoly coeff_of(const std::string& var, int exp) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Scalar& c) const;
    MultiPoly pow(long e) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    bool operator<(const MultiPoly& o) const; // arbitrary canonical order, for map keys

    /** Dense coefficient list in `var`, index = exponent; coefficients do not involve `var`. */
    std::vector<MultiPoly> to_univariate(const std::string& var) const;
    static MultiPoly from_univariate(const BaseField& f, const std::string& var,
                                     const std::vector<MultiPoly>& coeffs);

    /** Exact division; nullopt when the divisor does not divide exactly. */
    static std::optional<MultiPoly> try_div(const MultiPoly& num, const MultiPoly& den);
    static MultiPoly must_div(const MultiPoly& num, const MultiPoly& den);

    /** Monic (leading coefficient 1) gcd; gcd(0,0) = 0. */
    static MultiPoly gcd(const MultiPoly& x, const MultiPoly& y);

    std::string str() const;

private:
    friend class RatFunc;
    void insert_term(const Mono& m, const Scalar& c); // accumulates
    void prune_vars();
    MultiPoly aligned_to(const std::vector<std::string>& union_vars) const;
    static std::vector<std::string> var_union(const MultiPoly& x, const MultiPoly& y);

    BaseField field_;
    std::vector<std::string> vars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

} // namespace freepairs
