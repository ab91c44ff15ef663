#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treegram/dom.hpp"
#include "treegram/tree_gram.hpp"

namespace treegram {

enum class MatchAlgorithm { SimpleTM, ClusteredTM };

/// Flattened labeled ordered tree, the common input shape for both
/// matching algorithms. Index 0 is the root; children keep document order.
class LabeledTree {
public:
    struct Node {
        std::string label;
        std::vector<std::uint32_t> children;
        const DomNode* dom = nullptr;           // origin, when built from a DOM sub-tree
        const TreeGramNode* gram = nullptr;     // origin, when built from a snapshot
    };

    static LabeledTree from_dom(const DomNode& root, const LabelMode& mode);
    static LabeledTree from_gram(const TreeGramNode& root);

    std::uint32_t root() const { return 0; }
    std::size_t size() const { return nodes_.size(); }
    const Node& operator[](std::uint32_t i) const { return nodes_[i]; }

    /// First node index with the given label, preorder. For tests.
    std::optional<std::uint32_t> find(std::string_view label) const;

private:
    std::vector<Node> nodes_;
};

/// Records the weight every compared sub-tree pair contributed during a
/// clustered match, keyed by node indices in the two LabeledTrees.
struct MatchTrace {
    struct Entry {
        std::uint32_t a;
        std::uint32_t b;
        double weight;
    };
    std::vector<Entry> entries;

    std::optional<double> weight(std::uint32_t a, std::uint32_t b) const;
};

/// Selkow-style simple tree matching: size of the maximum ordered mapping
/// between the two trees. 0 when the root labels differ, otherwise the
/// dynamic program over child alignments plus 1 for the matched roots.
std::size_t simple_tree_matching(const LabeledTree& a, const LabeledTree& b);
std::size_t simple_tree_matching(const DomNode& a, const DomNode& b, const LabelMode& mode);

/// Weighted variant producing an absolute similarity in [0,1]: each match
/// is worth 1 divided by the larger sibling count of the compared nodes.
/// Internally exact (rational arithmetic), so identical trees score 1.0
/// exactly. Note the else branch when either node is childless adds the
/// weight instead of multiplying, so a single node "a" against a tree
/// rooted "a" scores 1.0 when both roots have no siblings; pair with a
/// size guard when that matters.
double clustered_tree_matching(const LabeledTree& a, const LabeledTree& b,
                               MatchTrace* trace = nullptr);
double clustered_tree_matching(const DomNode& a, const DomNode& b, const LabelMode& mode,
                               MatchTrace* trace = nullptr);

/// Simple tree matching scaled onto [0,1]: mapping size divided by the
/// larger node count, so a self-match is exactly 1.
double normalized_stm(const LabeledTree& a, const LabeledTree& b);
double normalized_stm(const DomNode& a, const DomNode& b, const LabelMode& mode);

/// Dice coefficient over character bigrams. Strings shorter than two
/// characters compare by equality.
double bigram_similarity(std::string_view s1, std::string_view s2);

/// Standard Jaro-Winkler with prefix scale 0.1 and max prefix 4.
double jaro_winkler(std::string_view s1, std::string_view s2);

struct MatchConfig {
    MatchAlgorithm algorithm = MatchAlgorithm::ClusteredTM;
    LabelMode label_mode;
    double threshold = 0.8;                  // in [0,1]
    bool attribute_check = false;
    std::size_t max_candidates = 64;
    ComparableAttributes comparable = ComparableAttributes::defaults();
};

struct MatchCandidate {
    const DomNode* node = nullptr;
    double score = 0.0;
    MatchAlgorithm algorithm = MatchAlgorithm::ClusteredTM;
};

/// Scores every node under `scope` whose label equals the tree-gram root
/// label (any other node provably scores 0) and returns those at or above
/// the threshold, best first, ties in document order, truncated to
/// max_candidates. With several grams a candidate scores the maximum over
/// them. attribute_check multiplies in the comparable-attribute agreement
/// of the two roots.
std::vector<MatchCandidate> best_matching_subtrees(std::span<const TreeGram> grams,
                                                   const DomNode& scope,
                                                   const MatchConfig& cfg);
std::vector<MatchCandidate> best_matching_subtrees(const TreeGram& gram, const DomTree& tree,
                                                   const MatchConfig& cfg);

/// Agreement factor used by attribute_check: the fraction of comparable
/// attribute names present on either root that carry equal values on
/// both; 1 when neither root has any.
double attribute_agreement(const TreeGramNode& gram_root, const DomNode& node,
                           const ComparableAttributes& comparable);

} // namespace treegram
