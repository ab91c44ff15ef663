#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "treegram/mutate.hpp"
#include "treegram/tree_match.hpp"

namespace treegram {

struct ScoreTriple {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;

    ScoreTriple& operator+=(const ScoreTriple& o);
    friend bool operator==(const ScoreTriple&, const ScoreTriple&) = default;
};

/// tp = |actual ∩ expected|, fp = |actual \ expected|, fn = |expected \ actual|.
ScoreTriple score(const std::set<std::uint64_t>& expected, const std::set<std::uint64_t>& actual);

/// Percentages in [0,100]; 0 when the denominator is 0.
double precision_pct(const ScoreTriple& t);
double recall_pct(const ScoreTriple& t);
double f_measure_pct(const ScoreTriple& t);

struct ScenarioResult {
    std::string scenario;
    MatchAlgorithm algorithm;
    double threshold = 0.0;
    std::size_t variants = 0;
    ScoreTriple counts;
};

struct EvalReport {
    std::vector<ScenarioResult> rows;
    ScoreTriple total_simple;
    ScoreTriple total_clustered;

    std::string to_json() const;
    /// Plain-text table: per-scenario tp/fp/fn for both algorithms plus
    /// total, recall, precision and F-measure rows.
    std::string to_text_table() const;
};

struct EvalOptions {
    std::filesystem::path corpus_dir;    // <scenario>.html
    std::filesystem::path wrappers_dir;  // <scenario>.json
    std::filesystem::path specs_dir;     // <scenario>.specs.json, {"variants": [MutationSpec...]}
    std::optional<double> threshold;     // overrides the wrappers' own thresholds
};

/// For every scenario, mutation variant and algorithm: mutate the page,
/// run extraction with adaptation, and score extracted node identities
/// against the ground-truth survivor map. Deterministic. Throws
/// CorpusError when inputs are missing.
EvalReport run_eval(const EvalOptions& options);

} // namespace treegram
