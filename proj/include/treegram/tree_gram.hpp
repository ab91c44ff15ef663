#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "treegram/dom.hpp"
#include "treegram/xpath.hpp"

namespace treegram {

/// One node of a stored snapshot. Mirrors the captured DOM sub-tree
/// structurally; attributes are restricted to the comparable set. Text
/// nodes keep their content so leaf-text patterns can fall back to
/// string-similarity matching.
struct TreeGramNode {
    std::string label;              // label under the capture-time mode
    std::string tag;
    std::vector<Attr> attrs;        // retained comparable attributes, sorted by name
    std::string text;               // text nodes only
    std::vector<TreeGramNode> children;

    friend bool operator==(const TreeGramNode&, const TreeGramNode&) = default;

    std::size_t subtree_size() const;
};

/// Snapshot of the DOM sub-tree a pattern targeted at design time.
struct TreeGram {
    TreeGramNode root;
    LabelMode label_mode;
    std::string captured_at;        // ISO-8601 UTC timestamp
    std::string source_selector;

    friend bool operator==(const TreeGram&, const TreeGram&) = default;
};

/// Builds a tree-gram from a DOM sub-tree.
TreeGram capture_tree_gram(const DomNode& node, const LabelMode& mode,
                           std::string source_selector,
                           const ComparableAttributes& comparable = ComparableAttributes::defaults(),
                           std::string captured_at = {});

/// Snapshot of the first node the selector matches. Throws SelectorMiss
/// when nothing matches.
TreeGram extract_tree_gram(const DomTree& tree, std::string_view selector, const LabelMode& mode,
                           const ComparableAttributes& comparable = ComparableAttributes::defaults(),
                           std::string captured_at = {});

/// Same, evaluated relative to `scope` (child-pattern capture).
TreeGram extract_tree_gram_from(const DomNode& scope, std::string_view selector, const LabelMode& mode,
                                const ComparableAttributes& comparable = ComparableAttributes::defaults(),
                                std::string captured_at = {});

/// JSON round-trip; deserialize(serialize(g)) == g. Malformed input
/// throws CorruptSnapshot.
std::string serialize_tree_gram(const TreeGram& gram);
TreeGram deserialize_tree_gram(std::string_view bytes);

/// Current time as ISO-8601 UTC, the default captured_at stamp.
std::string iso8601_now();

} // namespace treegram
