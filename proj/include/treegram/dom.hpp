#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "treegram/errors.hpp"

namespace treegram {

/// Sentinel tag used for free-text nodes.
inline constexpr std::string_view kTextTag = "#text";

struct Attr {
    std::string name;
    std::string value;

    friend bool operator==(const Attr&, const Attr&) = default;
};

/// One node of the parsed document: an element or a text node.
/// Children are kept in document order. Text nodes carry no attributes
/// and no children.
struct DomNode {
    std::string tag;                // lowercase element name, or "#text"
    std::vector<Attr> attributes;   // document order, names lowercase
    std::string text;               // text nodes only
    std::vector<std::unique_ptr<DomNode>> children;
    DomNode* parent = nullptr;
    std::uint64_t id = 0;           // stable identity, assigned at parse time

    bool is_text() const { return tag == kTextTag; }

    const std::string* attribute(std::string_view name) const;
    void set_attribute(std::string_view name, std::string_view value);

    /// Number of first-level children, d(n) in matching terms.
    std::size_t degree() const { return children.size(); }

    /// Number of siblings including this node, t(n). 1 for a root.
    std::size_t sibling_count() const { return parent ? parent->children.size() : 1; }

    /// Concatenated text content of all descendant text nodes, document
    /// order, no separators.
    std::string text_content() const;

    std::size_t subtree_size() const;
    bool is_ancestor_of(const DomNode& other) const; // strict or self
};

std::unique_ptr<DomNode> make_element(std::string tag, std::vector<Attr> attributes = {},
                                      std::vector<std::unique_ptr<DomNode>> children = {});
std::unique_ptr<DomNode> make_text(std::string text);

/// A parsed HTML document. Owns the node storage; nodes are immutable in
/// normal use — the mutation bench builds modified copies via clone().
class DomTree {
public:
    DomTree(std::unique_ptr<DomNode> root, std::uint64_t next_id);

    const DomNode& root() const { return *root_; }
    DomNode& root() { return *root_; }

    /// Deep copy preserving node ids.
    DomTree clone() const;

    /// Fresh id for nodes inserted by mutations.
    std::uint64_t allocate_id() { return next_id_++; }
    std::uint64_t next_id() const { return next_id_; }

    /// Re-establishes parent links below `from` (or the whole tree).
    void relink_parents(DomNode* from = nullptr);

    const DomNode* find_by_id(std::uint64_t id) const;

private:
    std::unique_ptr<DomNode> root_;
    std::uint64_t next_id_ = 1;
};

/// Permissive HTML parse. Recovers from malformed markup, drops comments,
/// processing instructions and whitespace-only text, decodes the declared
/// charset (UTF-8 assumed otherwise). Throws EmptyDocument on empty input.
DomTree parse_html(std::string_view document_bytes);

/// Deterministic serialization back to HTML. Void elements are emitted
/// without end tags; text and attribute values are escaped.
std::string serialize_html(const DomTree& tree);
std::string serialize_node(const DomNode& node);

/// Which parts of a node feed its matching label. use_tag is always on.
struct LabelMode {
    bool use_tag = true;
    bool use_id = false;
    bool use_class = false;

    friend bool operator==(const LabelMode&, const LabelMode&) = default;
};

/// Node label under a mode: tag, optionally "#"+id, optionally "."+token
/// for each sorted class token. Text nodes always label as "#text".
std::string label_of(const DomNode& node, const LabelMode& mode);

/// Attribute names worth comparing between matched nodes: generic ones
/// that any element may carry, plus per-tag specific ones.
struct ComparableAttributes {
    std::set<std::string> generic;
    std::map<std::string, std::set<std::string>> type_specific;

    static const ComparableAttributes& defaults();
    bool is_comparable(std::string_view tag, std::string_view attr_name) const;
};

/// All nodes of the subtree in document (pre-)order, root included.
std::vector<const DomNode*> preorder(const DomNode& root);

/// Position of each node in document order, for sorting node lists.
std::map<const DomNode*, std::size_t> document_order(const DomTree& tree);

} // namespace treegram
