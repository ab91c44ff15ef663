#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treegram/dom.hpp"

namespace treegram {

/// One location step of the XPath subset. Only the first step of a path
/// may use the descendant axis (a leading "//").
struct XPathStep {
    enum class Axis { Child, Descendant };

    Axis axis = Axis::Child;
    std::string name = "*";                    // element name or "*"
    std::optional<int> position;               // [n], 1-based among same-name siblings
    std::optional<Attr> attr_equals;           // [@attr='value']

    friend bool operator==(const XPathStep&, const XPathStep&) = default;
};

/// Parsed expression: a union of one or more paths.
///
/// Grammar (EBNF, see docs/xpath.md):
///   expr      = path , { "|" , path } ;
///   path      = first-step , { "/" , step } ;
///   first-step= ( "/" | "//" ) , step ;
///   step      = name , [ predicate ] ;
///   name      = tag | "*" ;
///   predicate = "[" integer "]" | "[@" attr "='" value "'" "]" ;
class XPathExpr {
public:
    XPathExpr() = default;
    explicit XPathExpr(std::vector<std::vector<XPathStep>> paths);

    static XPathExpr parse(std::string_view source); // throws UnsupportedXPath

    const std::vector<std::vector<XPathStep>>& paths() const { return paths_; }

    /// Canonical printed form; parse(to_string()) reproduces the expression.
    const std::string& to_string() const { return source_; }

    bool empty() const { return paths_.empty(); }

    friend bool operator==(const XPathExpr& a, const XPathExpr& b) { return a.paths_ == b.paths_; }

private:
    std::vector<std::vector<XPathStep>> paths_;
    std::string source_;
};

XPathExpr parse_xpath(std::string_view source);

/// Evaluates against the whole document; "/x" steps select children of a
/// virtual document node whose only child is the root element. Results
/// are in document order with no duplicates.
std::vector<const DomNode*> eval_xpath(const DomTree& tree, const XPathExpr& expr);

/// Evaluates with `context` as the starting node: "/x" selects element
/// children of context, a leading "//" its descendants. Used for child
/// patterns, whose selectors are relative to the parent instance.
std::vector<const DomNode*> eval_xpath_from(const DomNode& context, const XPathExpr& expr);

/// Fully positional path from the document root, e.g.
/// /html[1]/body[1]/div[2]/ul[1]/li[3]. Evaluating it returns exactly
/// {node}. Element nodes only.
XPathExpr absolute_xpath(const DomNode& node);

/// Positional steps from `root` (exclusive) down to `node`; evaluating it
/// from `root` returns exactly {node}. `root` must be an ancestor, or the
/// node itself (empty path is not expressible — node==root is an error).
XPathExpr relative_xpath(const DomNode& node, const DomNode& root);

/// Generates a selector matching exactly the given node set:
///   - all nodes share a parent and tag, and exhaust that parent's
///     children of the tag -> parent path + unpositioned step;
///   - single node with a uniquely-id'd ancestor-or-self -> id-anchored
///     relative path ("//div[@id='main']/p[2]");
///   - otherwise a union of absolute paths.
/// The generated expression is verified against the input set before
/// being returned. Throws MixedTrees for nodes from different trees.
XPathExpr xpath_for_nodes(std::span<const DomNode* const> nodes);

/// Same, but scoped: paths are relative to `scope` and verified by
/// evaluation from `scope`.
XPathExpr xpath_for_nodes(std::span<const DomNode* const> nodes, const DomNode& scope);

} // namespace treegram
