#include "treegram/dom.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>

namespace treegram {

namespace {

const std::set<std::string, std::less<>> kVoidElements = {
    "area", "base", "br", "col", "embed", "hr", "img", "input",
    "link", "meta", "param", "source", "track", "wbr"};

void escape_text(const std::string& in, std::string& out) {
    for (char c : in) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
}

void escape_attr(const std::string& in, std::string& out) {
    for (char c : in) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
}

void serialize_rec(const DomNode& node, std::string& out) {
    if (node.is_text()) {
        escape_text(node.text, out);
        return;
    }
    out += '<';
    out += node.tag;
    for (const auto& attr : node.attributes) {
        out += ' ';
        out += attr.name;
        out += "=\"";
        escape_attr(attr.value, out);
        out += '"';
    }
    out += '>';
    if (kVoidElements.count(node.tag)) return;
    for (const auto& child : node.children) serialize_rec(*child, out);
    out += "</";
    out += node.tag;
    out += '>';
}

std::unique_ptr<DomNode> clone_rec(const DomNode& node) {
    auto copy = std::make_unique<DomNode>();
    copy->tag = node.tag;
    copy->attributes = node.attributes;
    copy->text = node.text;
    copy->id = node.id;
    copy->children.reserve(node.children.size());
    for (const auto& child : node.children) {
        auto c = clone_rec(*child);
        c->parent = copy.get();
        copy->children.push_back(std::move(c));
    }
    return copy;
}

} // namespace

const std::string* DomNode::attribute(std::string_view name) const {
    for (const auto& attr : attributes)
        if (attr.name == name) return &attr.value;
    return nullptr;
}

void DomNode::set_attribute(std::string_view name, std::string_view value) {
    for (auto& attr : attributes) {
        if (attr.name == name) {
            attr.value = std::string(value);
            return;
        }
    }
    attributes.push_back({std::string(name), std::string(value)});
}

std::string DomNode::text_content() const {
    if (is_text()) return text;
    std::string out;
    for (const auto& child : children) out += child->text_content();
    return out;
}

std::size_t DomNode::subtree_size() const {
    std::size_t n = 1;
    for (const auto& child : children) n += child->subtree_size();
    return n;
}

bool DomNode::is_ancestor_of(const DomNode& other) const {
    for (const DomNode* cur = &other; cur; cur = cur->parent)
        if (cur == this) return true;
    return false;
}

std::unique_ptr<DomNode> make_element(std::string tag, std::vector<Attr> attributes,
                                      std::vector<std::unique_ptr<DomNode>> children) {
    auto node = std::make_unique<DomNode>();
    node->tag = std::move(tag);
    node->attributes = std::move(attributes);
    node->children = std::move(children);
    for (auto& child : node->children) child->parent = node.get();
    return node;
}

std::unique_ptr<DomNode> make_text(std::string text) {
    auto node = std::make_unique<DomNode>();
    node->tag = kTextTag;
    node->text = std::move(text);
    return node;
}

DomTree::DomTree(std::unique_ptr<DomNode> root, std::uint64_t next_id)
    : root_(std::move(root)), next_id_(next_id) {
    relink_parents();
}

DomTree DomTree::clone() const {
    return DomTree(clone_rec(*root_), next_id_);
}

void DomTree::relink_parents(DomNode* from) {
    DomNode* start = from ? from : root_.get();
    if (start == root_.get()) root_->parent = nullptr;
    std::vector<DomNode*> stack{start};
    while (!stack.empty()) {
        DomNode* cur = stack.back();
        stack.pop_back();
        for (auto& child : cur->children) {
            child->parent = cur;
            stack.push_back(child.get());
        }
    }
}

const DomNode* DomTree::find_by_id(std::uint64_t id) const {
    for (const DomNode* n : preorder(root()))
        if (n->id == id) return n;
    return nullptr;
}

std::string serialize_node(const DomNode& node) {
    std::string out;
    serialize_rec(node, out);
    return out;
}

std::string serialize_html(const DomTree& tree) {
    return serialize_node(tree.root()) + "\n";
}

std::string label_of(const DomNode& node, const LabelMode& mode) {
    if (node.is_text()) return std::string(kTextTag);
    std::string label = node.tag;
    if (mode.use_id) {
        if (const std::string* id = node.attribute("id"); id && !id->empty()) {
            label += '#';
            label += *id;
        }
    }
    if (mode.use_class) {
        if (const std::string* cls = node.attribute("class")) {
            std::vector<std::string> tokens;
            std::istringstream in(*cls);
            std::string tok;
            while (in >> tok) tokens.push_back(tok);
            std::sort(tokens.begin(), tokens.end());
            tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
            for (const auto& t : tokens) {
                label += '.';
                label += t;
            }
        }
    }
    return label;
}

const ComparableAttributes& ComparableAttributes::defaults() {
    static const ComparableAttributes instance = [] {
        ComparableAttributes c;
        c.generic = {"id", "class", "name"};
        c.type_specific = {
            {"a", {"href"}},        {"area", {"href"}},  {"link", {"href"}},
            {"img", {"src", "alt"}}, {"iframe", {"src"}}, {"source", {"src"}},
            {"form", {"action"}},   {"input", {"type", "value"}},
            {"option", {"value"}},  {"time", {"datetime"}},
        };
        return c;
    }();
    return instance;
}

bool ComparableAttributes::is_comparable(std::string_view tag, std::string_view attr_name) const {
    if (generic.count(std::string(attr_name))) return true;
    auto it = type_specific.find(std::string(tag));
    return it != type_specific.end() && it->second.count(std::string(attr_name)) > 0;
}

std::vector<const DomNode*> preorder(const DomNode& root) {
    std::vector<const DomNode*> out;
    out.reserve(64);
    std::vector<const DomNode*> stack{&root};
    while (!stack.empty()) {
        const DomNode* cur = stack.back();
        stack.pop_back();
        out.push_back(cur);
        for (auto it = cur->children.rbegin(); it != cur->children.rend(); ++it)
            stack.push_back(it->get());
    }
    return out;
}

std::map<const DomNode*, std::size_t> document_order(const DomTree& tree) {
    std::map<const DomNode*, std::size_t> order;
    std::size_t i = 0;
    for (const DomNode* n : preorder(tree.root())) order[n] = i++;
    return order;
}

} // namespace treegram
