#pragma once

#include <optional>

#include "gdz/json_io.hpp"

namespace gdz {

/// One exploration campaign: generate instances for a hypothesis id
/// (optionally perturbed to violate one condition), drive the mapped route,
/// and compare against the oracle.
struct ExploreConfig {
    HypothesisId id = HypothesisId::H22;
    int trials = 10;
    std::size_t dim = 2;
    std::uint64_t seed = 0;
    std::optional<std::size_t> violate; // condition index to break, with --force semantics
    bool use_float = false;
    int jobs = 1;
    TolerancePolicy pol;
};

struct TrialRecord {
    int index = 0;
    std::uint64_t seed = 0;
    std::string recipe;
    std::optional<HypothesisReport> hypothesis;
    bool ran = false;
    bool match = false;
    double discrepancy = 0.0;
    std::string error; // empty when the trial ran to completion
};

struct RunReport {
    ExploreConfig config;
    std::vector<TrialRecord> trials;
    int pass = 0;
    int fail = 0;
    int errors = 0;
    double max_discrepancy = 0.0;
    long elapsed_ms = 0;
    std::string timestamp;

    bool all_unviolated_match() const;
};

/// Run the campaign. Trials execute concurrently when cfg.jobs > 1; the
/// report is ordered by trial index and identical for any job count.
RunReport run_explore(const ExploreConfig& cfg);

/// Full report document. The body is deterministic for a fixed config;
/// wall-clock data lives only under "meta".
json report_to_json(const RunReport& rep);

/// The deterministic part: the document without its "meta" field.
json report_body(const json& full_report);

} // namespace gdz
