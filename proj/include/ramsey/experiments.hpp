#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramsey/coloring.hpp"
#include "ramsey/detect.hpp"
#include "ramsey/family.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

inline constexpr const char* kToolVersion = "0.1.0";

// Wilson 95% score interval; well behaved at 0 and 1.
struct EstimateWithCI {
    double point = 0, lo = 0, hi = 0;
    long long trials = 0;
};
EstimateWithCI wilson_interval(long long successes, long long trials);

// One serialized trial outcome: a single JSON object per line, keys sorted,
// loss-free round trip.
struct ExperimentRecord {
    std::string experiment;
    std::map<std::string, double> params;
    std::uint64_t seed = 0;
    nlohmann::json outcome;  // structured result; "success" bool expected
    std::string constants_mode = "paper";  // "paper" | "override"
    double wall_ms = 0;
    std::string tool_version = kToolVersion;

    nlohmann::json to_json() const;
    std::string to_line() const;
    static ExperimentRecord from_json(const nlohmann::json& j, int line_no);
    static ExperimentRecord from_line(const std::string& line, int line_no);
};

// Named coloring constructors for the harness and CLI:
//   uniform | all_red | all_blue | hypergeometric (levels) |
//   book_lb (k, n) | starburst_lb (k, n, delta) |
//   balanced_majority (part_a: exactly half of each B-vertex's edges red)
struct ColorSchemeSpec {
    std::string name = "uniform";
    std::map<std::string, double> params;
};
Coloring make_coloring(const Graph& g, const ColorSchemeSpec& scheme,
                       std::uint64_t seed);

struct McResult {
    EstimateWithCI estimate;
    long long resource_failures = 0;  // trials aborted by budget, not counted
};

// Frequency of "some monochromatic copy of target exists" over independent
// colorings with split per-trial seeds Rng::mix(seed, trial).
McResult mc_estimate_mono_probability(const Graph& g,
                                      const ColorSchemeSpec& scheme,
                                      const FamilyParams& target,
                                      long long trials, std::uint64_t seed,
                                      int jobs = 1);

// ---- suites -----------------------------------------------------------

struct SuiteConfig {
    std::string family;  // "kst" | "book" | "starburst"
    std::map<std::string, double> params;
    std::string scheme = "uniform";  // coloring strategy for upper suites
    long long trials = 1;
    std::uint64_t seed = 0;
    int jobs = 1;
    bool paper_constants = true;
};

struct SuiteSummary {
    long long trials = 0;
    long long successes = 0;
    long long resource_failures = 0;
    bool ok() const { return trials == successes && resource_failures == 0; }
};

// Builds the family's lower-bound coloring per trial, runs the detectors
// and structural audits, and appends one record per trial. A trial succeeds
// when the audits hold and no monochromatic target is found.
SuiteSummary run_lowerbound_suite(const SuiteConfig& cfg, std::ostream& records);

// Builds the family's host, samples colorings, runs the extractor and
// re-validates every witness. A trial succeeds when a valid witness comes
// back (fallback paths permitted and labeled in the record).
SuiteSummary run_upperbound_suite(const SuiteConfig& cfg, std::ostream& records);

// Rebuilds host and coloring from a record's params and seed and re-checks
// the embedded witness. True for records that carry nothing to validate.
bool revalidate_record(const ExperimentRecord& rec);

// ---- aggregation ------------------------------------------------------

struct ReportRow {
    std::string experiment;
    std::string constants_mode;
    long long trials = 0;
    long long successes = 0;
    EstimateWithCI ci;
    double mean_wall_ms = 0;
};

std::vector<ReportRow> aggregate_records(std::istream& in);
void print_report(const std::vector<ReportRow>& rows, std::ostream& out,
                  bool csv);

}  // namespace ramsey
