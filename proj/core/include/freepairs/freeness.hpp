#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freepairs/matrix.hpp"
#include "freepairs/place.hpp"

namespace freepairs {

enum class Verdict { CERTIFIED, FAILED, INAPPLICABLE };
enum class Strength { EXACT_PAIR, SUBGROUP_WITNESS };

const char* verdict_name(Verdict v);
const char* strength_name(Strength s);

/**
 * Everything the valuation criterion looked at, so the conclusion can be
 * re-checked from the certificate alone: the diagonal valuations of A and
 * the entry valuations of B and B^-1 at the chosen place.  nullopt stands
 * for an infinite valuation (a zero entry).
 *
 * verdict == CERTIFIED iff the eigen valuations have a unique maximum and a
 * unique minimum and every entry of B and B^-1 has valuation exactly 0;
 * then {A, B^-1 A B} is a free pair.
 */
struct FreenessCertificate {
    std::string place_name;
    std::string pair_description = "{A, B^-1 A B}";
    std::vector<std::optional<long>> eigen_valuations;
    std::vector<std::vector<std::optional<long>>> b_valuations;
    std::vector<std::vector<std::optional<long>>> binv_valuations;
    Verdict verdict = Verdict::FAILED;
    Strength strength = Strength::EXACT_PAIR;
    std::string reason; // one line saying which condition decided the verdict

    bool certified() const { return verdict == Verdict::CERTIFIED; }
    std::string str() const;
    std::string json() const;

    friend bool operator==(const FreenessCertificate&, const FreenessCertificate&) = default;
};

/**
 * Apply the valuation criterion to a diagonal A and an invertible B at the
 * given place.  Non-diagonal A yields verdict INAPPLICABLE (this library
 * never diagonalizes); a singular B yields FAILED.
 */
FreenessCertificate certify(const SqMatrix& a, const SqMatrix& b, const Place& pl,
                            Strength strength = Strength::EXACT_PAIR);

/** Outcome of random reduced-word sampling in the group generated by two matrices. */
struct WordSampleReport {
    std::string generators;
    int max_len = 0;
    int count = 0;
    unsigned long long seed = 0;
    std::vector<std::string> failures; // words that evaluated to the identity

    bool passed() const { return failures.empty(); }
    std::string str() const;

    friend bool operator==(const WordSampleReport&, const WordSampleReport&) = default;
};

/**
 * Evaluate `count` random reduced words of length <= max_len in g, h and
 * their inverses, and record every word that collapses to the identity.
 * A clean run is necessary but not sufficient for freeness; the sampling is
 * deterministic in the seed.
 */
WordSampleReport sample_words(const SqMatrix& g, const SqMatrix& h, int max_len, int count,
                              unsigned long long seed);

} // namespace freepairs
