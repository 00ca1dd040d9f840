#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freepairs/freeness.hpp"
#include "freepairs/heisenberg.hpp"

namespace freepairs {

/**
 * Outcome of a scenario.  CERTIFIED means the valuation criterion proves the
 * target pair free as stated; PARTIAL means the certificate proves a free
 * pair inside the group the images generate, with word sampling as evidence
 * for the target pair itself; OPEN marks the parameter cases where no pair
 * is constructed.
 */
enum class ScenarioVerdict { CERTIFIED, PARTIAL, OPEN };

/** Whether the target pair consists of symmetric or of unitary elements. */
enum class PairMode { SYMMETRIC, UNITARY };

enum class ReportFormat { JSON, TEXT };

const char* scenario_verdict_name(ScenarioVerdict v);
const char* pair_mode_name(PairMode m);

/** Seed used for word sampling when the caller does not pick one. */
inline constexpr unsigned long long kDefaultSampleSeed = 62702;

/**
 * Full record of one end-to-end construction: the elements built in the
 * source ring, the involution checks run on them, their specialized images,
 * the matrices handed to the valuation criterion, the resulting certificate
 * and, for PARTIAL verdicts, the word-sample evidence.  All values are
 * canonical strings, so reports serialize deterministically.
 */
struct ScenarioReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> elements;
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::pair<std::string, std::string>> images;
    std::vector<std::pair<std::string, std::string>> matrices;
    std::vector<std::pair<std::string, std::string>> residues;
    std::optional<FreenessCertificate> certificate;
    std::optional<WordSampleReport> words;
    ScenarioVerdict verdict = ScenarioVerdict::OPEN;
    std::vector<std::string> notes;

    bool all_checks_passed() const;

    friend bool operator==(const ScenarioReport&, const ScenarioReport&) = default;
};

/**
 * Run one group-ring construction for the involution of the given type and
 * parameters, in the requested mode.  Only the parities of m and n matter
 * for the shape of the construction; the exact values enter the elements.
 * Errors: UNDEFINED_CASE for parameter combinations outside the case table.
 */
ScenarioReport run_heisenberg(InvolutionType type, const Int& m, const Int& n, PairMode mode,
                              unsigned long long seed = kDefaultSampleSeed);

/**
 * Run one of the two differential-operator-ring constructions: case 1 uses
 * the involution swapping s and t, case 2 the one fixing s and negating t.
 * Errors: UNDEFINED_CASE for any other case number.
 */
ScenarioReport run_weyl(int which);

/** Ids of every scenario in the catalogue, in canonical order. */
std::vector<std::string> scenario_ids();

/**
 * Run the scenario with the given catalogue id.
 * Errors: UNDEFINED_CASE when the id is not in the catalogue.
 */
ScenarioReport run_scenario(const std::string& id,
                            unsigned long long seed = kDefaultSampleSeed);

/** Deterministic serialization; the JSON form round-trips through parse_report. */
std::string emit_report(const ScenarioReport& r, ReportFormat format);

/**
 * Rebuild a report from its JSON form.
 * Errors: PARSE_ERROR on malformed input.
 */
ScenarioReport parse_report(const std::string& json_text);

} // namespace freepairs
