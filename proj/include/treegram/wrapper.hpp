#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "treegram/dom.hpp"
#include "treegram/tree_gram.hpp"
#include "treegram/tree_match.hpp"
#include "treegram/xpath.hpp"

namespace treegram {

enum class DataType { Integer, Decimal, Date, NonemptyText, Regex };

/// Runtime checks whose violation triggers adaptation.
struct IntegrityConstraint {
    std::optional<int> min_occurrences;
    std::optional<int> max_occurrences;
    std::optional<int> min_children;        // child pattern instances per instance
    std::optional<int> max_children;
    std::optional<DataType> data_type;
    std::string regex_pattern;              // when data_type == Regex

    bool empty() const;
};

enum class StringMetricKind { Bigram, JaroWinkler };

/// One entry of the adaptation algorithm order.
struct AdaptAlgorithm {
    enum class Kind { ClusteredTM, SimpleTM, StringMetric };
    Kind kind = Kind::ClusteredTM;
    StringMetricKind metric = StringMetricKind::Bigram; // when kind == StringMetric

    friend bool operator==(const AdaptAlgorithm&, const AdaptAlgorithm&) = default;

    static AdaptAlgorithm clustered() { return {Kind::ClusteredTM, {}}; }
    static AdaptAlgorithm simple() { return {Kind::SimpleTM, {}}; }
    static AdaptAlgorithm string_metric(StringMetricKind m) { return {Kind::StringMetric, m}; }
};

enum class Trigger { TopDown, BottomUp };

struct AdaptationConfig {
    double threshold = 0.8;
    std::vector<AdaptAlgorithm> algorithm_order = {AdaptAlgorithm::clustered()};
    LabelMode label_mode;
    std::set<Trigger> triggers;
    bool update_snapshots = false;
    bool attribute_check = false;
    std::size_t max_candidates = 64;
};

/// One named extraction rule. Root patterns carry document selectors;
/// child patterns are evaluated relative to each parent instance.
struct Pattern {
    std::string name;
    std::optional<std::string> parent;
    XPathExpr selector;
    std::vector<TreeGram> tree_grams;
    IntegrityConstraint constraints;
    AdaptationConfig adapt;
};

class Wrapper {
public:
    Wrapper() = default;
    explicit Wrapper(std::vector<Pattern> patterns); // validates, throws InvalidWrapper

    const std::vector<Pattern>& patterns() const { return patterns_; }
    std::vector<Pattern>& patterns() { return patterns_; }

    const Pattern* find(std::string_view name) const;
    Pattern* find(std::string_view name);
    std::vector<const Pattern*> roots() const;
    std::vector<const Pattern*> children_of(std::string_view name) const;

    /// Pattern names in hierarchy preorder (parents before children).
    std::vector<std::string> preorder_names() const;
    std::vector<std::string> descendants_of(std::string_view name) const;

private:
    std::vector<Pattern> patterns_;
};

inline constexpr int kWrapperFormatVersion = 1;

Wrapper load_wrapper(std::string_view json_text);  // throws InvalidWrapper / UnsupportedTrigger
std::string save_wrapper(const Wrapper& wrapper);

/// One extracted pattern instance; children mirror the pattern hierarchy.
struct Instance {
    std::string pattern;
    const DomNode* node = nullptr;
    std::uint64_t node_id = 0;
    std::string text;                       // concatenated descendant text
    std::vector<Instance> children;
};

struct Provenance {
    std::string selector;
    bool adapted = false;
};

struct ExtractionResult {
    std::vector<Instance> roots;
    std::map<std::string, Provenance> provenance;

    /// All instances of one pattern, document order within each parent.
    std::vector<const Instance*> instances_of(std::string_view pattern) const;
    std::size_t count_of(std::string_view pattern) const;
};

/// Evaluates every pattern, root patterns against the document and child
/// patterns relative to each parent instance, depth-first. Pure.
ExtractionResult execute(const Wrapper& wrapper, const DomTree& tree);

enum class ViolationKind { Occurrence, ChildCount, DataType };

struct Violation {
    std::string pattern;
    ViolationKind kind;
    std::string detail;
};

std::string to_string(ViolationKind kind);

/// Checks occurrence counts, per-instance child counts and data types.
/// An empty list means no adaptation is triggered.
std::vector<Violation> validate(const ExtractionResult& result, const Wrapper& wrapper);

/// Whether trimmed text satisfies a data type.
bool matches_data_type(std::string_view text, DataType type, const std::string& regex_pattern);

std::string extraction_to_json(const ExtractionResult& result);

} // namespace treegram
