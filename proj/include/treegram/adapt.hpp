#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "treegram/wrapper.hpp"

namespace treegram {

enum class AdaptStatus { NotNeeded, Adapted, Failed };

std::string to_string(AdaptStatus status);

struct AdaptationOutcome {
    std::string pattern;
    AdaptStatus status = AdaptStatus::NotNeeded;
    std::optional<XPathExpr> new_selector;
    std::optional<double> best_score;
    std::optional<AdaptAlgorithm> algorithm_used;
    std::size_t candidates_considered = 0;
    bool snapshot_updated = false;
};

/// A cascade event: TopDown forced adaptation of a descendant, or
/// BottomUp escalated a failed pattern to its parent.
struct TriggerEvent {
    Trigger kind;
    std::string source_pattern;
    std::string target_pattern;
};

/// A constraint violation observed before an adaptation attempt.
struct ViolationEvent {
    Violation violation;
};

struct AdaptationLog {
    using Entry = std::variant<ViolationEvent, TriggerEvent, AdaptationOutcome>;
    std::vector<Entry> entries;

    const AdaptationOutcome* last_outcome_for(std::string_view pattern) const;
    bool any_adapted() const;
    bool any_failed() const;
};

/// One adaptation log record per line, JSON.
std::string log_to_jsonl(const AdaptationLog& log);

/// Re-locates a pattern's targets inside `scope` by trying each algorithm
/// of cfg.algorithm_order in turn: tree algorithms match the stored
/// tree-grams, string metrics compare stored leaf text against candidate
/// leaf texts. The first algorithm yielding candidates wins; the new
/// selector reproduces the accepted node set. Throws NoSnapshot when the
/// pattern has no stored tree-gram.
AdaptationOutcome adapt_pattern(const Pattern& pattern, const DomNode& scope,
                                const AdaptationConfig& cfg);

/// Multi-scope form used by the engine: one scope per parent instance.
/// `accepted` (when non-null) receives the accepted nodes per scope.
AdaptationOutcome adapt_pattern(const Pattern& pattern, std::span<const DomNode* const> scopes,
                                const AdaptationConfig& cfg,
                                std::vector<std::vector<const DomNode*>>* accepted = nullptr);

struct AdaptationRun {
    ExtractionResult result;
    AdaptationLog log;
    Wrapper wrapper;                 // working copy; selectors/snapshots as adapted
    std::vector<Violation> remaining_violations;
};

/// Execute, validate, and on violations adapt pattern by pattern,
/// honoring TopDown/BottomUp triggers, then re-execute. On an unchanged
/// page this reproduces plain execute() and logs NotNeeded for every
/// pattern. Each pattern is adapted at most twice per run.
AdaptationRun run_with_adaptation(const Wrapper& wrapper, const DomTree& tree);

} // namespace treegram
