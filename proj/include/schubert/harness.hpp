#pragma once

// Seeded experiments: random instances, batch solving, and frequency tables
// of (real solutions, overlap number).

#include "schubert/solver.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schubert {

enum class SamplingKind { DisjointIntervals, UniformShuffle, TargetOverlap };

struct SamplingMode {
    SamplingKind kind = SamplingKind::DisjointIntervals;
    unsigned target = 0;  // TargetOverlap only

    /// "disjoint", "shuffle", "overlap=K".
    static SamplingMode parse(std::string_view text);
    std::string to_string() const;
    friend bool operator==(const SamplingMode&, const SamplingMode&) = default;
};

struct ExperimentConfig {
    SchubertProblem problem;
    /// 1, 2 or 3: number of osculating flags (0, 1, 2) plus one.
    int computation_type = 1;
    SamplingMode mode;
    std::size_t instance_count = 1;
    /// Index of the first instance; lets a run be split into index ranges.
    std::size_t first_index = 0;
    std::uint64_t seed = 0;
    /// Points are i/denominator with lo <= i/denominator <= hi.
    Rational point_lo = -8, point_hi = 8;
    long denominator = 64;
    unsigned worker_count = 1;
    /// UniformShuffle draws allowed per TargetOverlap instance.
    unsigned rejection_budget = 10000;
    /// Gap-family problems: run the pair verification too.
    bool verify_gap = false;
};

/// Throws std::invalid_argument on inconsistent settings.
void validate_config(const ExperimentConfig& c);

/// Conditions receiving osculating flags: the largest (by |λ|, then first
/// occurrence); the first is at ∞, the second at 0.
std::vector<std::size_t> osculating_conditions(const ExperimentConfig& c);

/// Deterministic in (seed, index). Throws std::runtime_error when TargetOverlap
/// exhausts its rejection budget.
Instance generate_instance(const ExperimentConfig& c, std::size_t index);

/// The 64-bit state used for instance `index`: splitmix64(seed ^ index).
std::uint64_t instance_seed(std::uint64_t seed, std::size_t index);

struct RunRecord {
    std::string sampling;
    std::uint64_t seed = 0;
    std::size_t first_index = 0;
    std::size_t instance_count = 0;
    double wall_seconds = 0;
    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct FrequencyTable {
    std::string problem;  // SchubertProblem::to_string()
    unsigned degree = 0;
    int computation_type = 1;
    /// (real_count, overlap) -> instances.
    std::map<std::pair<unsigned, unsigned>, std::size_t> cells;
    std::size_t instance_count = 0;
    std::size_t failures = 0;
    /// Failure reason -> count.
    std::map<std::string, std::size_t> failure_reasons;
    std::vector<RunRecord> runs;

    std::size_t certified() const;
    friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;
};

/// Solves every instance with up to worker_count threads. Per-instance failures
/// (including instance-generation errors) are counted, never dropped.
FrequencyTable run_experiment(const ExperimentConfig& c);

/// Cellwise sum. Throws std::invalid_argument unless problem and computation
/// type agree (an empty table with no problem merges with anything).
FrequencyTable merge_tables(const FrequencyTable& a, const FrequencyTable& b);

enum class TableFormat { Csv, Json };

/// CSV: header "real_solutions,overlap,count", rows sorted by (real, overlap).
/// JSON: cells plus metadata, keys sorted.
std::string export_table(const FrequencyTable& t, TableFormat f);
/// Inverse of export_table (CSV carries cells only).
FrequencyTable parse_table(std::string_view text, TableFormat f);

}  // namespace schubert
