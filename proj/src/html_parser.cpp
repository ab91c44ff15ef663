#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "treegram/dom.hpp"

namespace treegram {

namespace {

bool iequal(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

bool whitespace_only(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return is_space(c); });
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

// Windows-1252 codepoints for bytes 0x80..0x9F; 0 keeps the Latin-1 value.
constexpr std::uint16_t kCp1252High[32] = {
    0x20AC, 0,      0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
    0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0,      0x017D, 0,
    0,      0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
    0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0,      0x017E, 0};

std::string latin1_to_utf8(std::string_view bytes, bool cp1252) {
    std::string out;
    out.reserve(bytes.size());
    for (unsigned char b : bytes) {
        std::uint32_t cp = b;
        if (cp1252 && b >= 0x80 && b <= 0x9F && kCp1252High[b - 0x80])
            cp = kCp1252High[b - 0x80];
        if (cp < 0x80)
            out += static_cast<char>(cp);
        else
            append_utf8(out, cp);
    }
    return out;
}

std::string utf16_to_utf8(std::string_view bytes, bool big_endian) {
    std::string out;
    for (std::size_t i = 0; i + 1 < bytes.size(); i += 2) {
        auto lo = static_cast<unsigned char>(bytes[big_endian ? i + 1 : i]);
        auto hi = static_cast<unsigned char>(bytes[big_endian ? i : i + 1]);
        std::uint32_t unit = static_cast<std::uint32_t>(hi) << 8 | lo;
        if (unit >= 0xD800 && unit <= 0xDBFF && i + 3 < bytes.size()) {
            auto lo2 = static_cast<unsigned char>(bytes[big_endian ? i + 3 : i + 2]);
            auto hi2 = static_cast<unsigned char>(bytes[big_endian ? i + 2 : i + 3]);
            std::uint32_t unit2 = static_cast<std::uint32_t>(hi2) << 8 | lo2;
            if (unit2 >= 0xDC00 && unit2 <= 0xDFFF) {
                append_utf8(out, 0x10000 + ((unit - 0xD800) << 10) + (unit2 - 0xDC00));
                i += 2;
                continue;
            }
        }
        append_utf8(out, unit);
    }
    return out;
}

// Declared charset from a meta tag or XML declaration in the head of the
// byte stream; everything unknown falls back to UTF-8 passthrough.
std::string decode_charset(std::string_view bytes) {
    if (bytes.size() >= 3 && bytes.substr(0, 3) == "\xEF\xBB\xBF")
        return std::string(bytes.substr(3));
    if (bytes.size() >= 2 && static_cast<unsigned char>(bytes[0]) == 0xFF &&
        static_cast<unsigned char>(bytes[1]) == 0xFE)
        return utf16_to_utf8(bytes.substr(2), false);
    if (bytes.size() >= 2 && static_cast<unsigned char>(bytes[0]) == 0xFE &&
        static_cast<unsigned char>(bytes[1]) == 0xFF)
        return utf16_to_utf8(bytes.substr(2), true);

    std::string head = to_lower(bytes.substr(0, std::min<std::size_t>(bytes.size(), 1024)));
    std::string charset;
    for (std::string_view key : {"charset=", "encoding="}) {
        if (auto pos = head.find(key); pos != std::string::npos) {
            pos += key.size();
            while (pos < head.size() && (head[pos] == '"' || head[pos] == '\'' || is_space(head[pos])))
                ++pos;
            std::size_t end = pos;
            while (end < head.size() &&
                   (std::isalnum(static_cast<unsigned char>(head[end])) || head[end] == '-' ||
                    head[end] == '_' || head[end] == '.'))
                ++end;
            charset = head.substr(pos, end - pos);
            break;
        }
    }
    if (charset == "iso-8859-1" || charset == "latin1" || charset == "latin-1")
        return latin1_to_utf8(bytes, false);
    if (charset == "windows-1252" || charset == "cp1252")
        return latin1_to_utf8(bytes, true);
    return std::string(bytes); // utf-8, us-ascii, unknown
}

const std::map<std::string, std::uint32_t, std::less<>> kNamedEntities = {
    {"amp", '&'},   {"lt", '<'},     {"gt", '>'},    {"quot", '"'},
    {"apos", '\''}, {"nbsp", 0xA0},  {"copy", 0xA9}, {"reg", 0xAE},
    {"trade", 0x2122}, {"hellip", 0x2026}, {"mdash", 0x2014}, {"ndash", 0x2013},
    {"laquo", 0xAB}, {"raquo", 0xBB}, {"euro", 0x20AC}, {"pound", 0xA3},
    {"yen", 0xA5},  {"cent", 0xA2},  {"deg", 0xB0},  {"middot", 0xB7},
    {"bull", 0x2022}, {"times", 0xD7}, {"rsquo", 0x2019}, {"lsquo", 0x2018},
    {"rdquo", 0x201D}, {"ldquo", 0x201C},
};

std::string decode_entities(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out += s[i++];
            continue;
        }
        std::size_t semi = s.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 12) {
            out += s[i++];
            continue;
        }
        std::string_view body = s.substr(i + 1, semi - i - 1);
        if (!body.empty() && body[0] == '#') {
            std::uint32_t cp = 0;
            bool ok = body.size() > 1;
            if (body.size() > 2 && (body[1] == 'x' || body[1] == 'X')) {
                for (std::size_t k = 2; k < body.size() && ok; ++k) {
                    char c = body[k];
                    if (!std::isxdigit(static_cast<unsigned char>(c))) ok = false;
                    else cp = cp * 16 + static_cast<std::uint32_t>(
                                 std::isdigit(static_cast<unsigned char>(c)) ? c - '0'
                                 : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
                }
            } else {
                for (std::size_t k = 1; k < body.size() && ok; ++k) {
                    if (!std::isdigit(static_cast<unsigned char>(body[k]))) ok = false;
                    else cp = cp * 10 + static_cast<std::uint32_t>(body[k] - '0');
                }
            }
            if (ok && cp > 0 && cp <= 0x10FFFF) {
                append_utf8(out, cp);
                i = semi + 1;
                continue;
            }
        } else if (auto it = kNamedEntities.find(body); it != kNamedEntities.end()) {
            append_utf8(out, it->second);
            i = semi + 1;
            continue;
        }
        out += s[i++]; // unknown entity, keep verbatim
    }
    return out;
}

const std::set<std::string, std::less<>> kVoid = {
    "area", "base", "br", "col", "embed", "hr", "img", "input",
    "link", "meta", "param", "source", "track", "wbr"};

const std::set<std::string, std::less<>> kRawText = {"script", "style"};

// Start tags that implicitly close an open <p>.
const std::set<std::string, std::less<>> kClosesP = {
    "address", "article", "aside", "blockquote", "details", "div", "dl",
    "fieldset", "figcaption", "figure", "footer", "form", "h1", "h2", "h3",
    "h4", "h5", "h6", "header", "hgroup", "hr", "main", "menu", "nav",
    "ol", "p", "pre", "section", "table", "ul"};

// tag -> set of open tags it implicitly closes when they sit on top.
const std::map<std::string, std::set<std::string>, std::less<>> kAutoClose = {
    {"li", {"li"}},
    {"dt", {"dt", "dd"}},
    {"dd", {"dt", "dd"}},
    {"tr", {"tr", "td", "th"}},
    {"td", {"td", "th"}},
    {"th", {"td", "th"}},
    {"thead", {"thead", "tbody", "tfoot", "tr", "td", "th"}},
    {"tbody", {"thead", "tbody", "tfoot", "tr", "td", "th"}},
    {"tfoot", {"thead", "tbody", "tfoot", "tr", "td", "th"}},
    {"option", {"option"}},
    {"optgroup", {"option", "optgroup"}},
};

struct Token {
    enum class Kind { Text, StartTag, EndTag } kind;
    std::string data;                 // text content or tag name
    std::vector<Attr> attributes;
    bool self_closing = false;
};

class Tokenizer {
public:
    explicit Tokenizer(std::string text) : src_(std::move(text)) {}

    bool next(Token& token) {
        while (pos_ < src_.size()) {
            if (src_[pos_] != '<') {
                std::size_t lt = src_.find('<', pos_);
                if (lt == std::string::npos) lt = src_.size();
                token = {Token::Kind::Text, decode_entities(view(pos_, lt)), {}, false};
                pos_ = lt;
                return true;
            }
            if (starts_with("<!--")) {
                std::size_t end = src_.find("-->", pos_ + 4);
                pos_ = end == std::string::npos ? src_.size() : end + 3;
                continue;
            }
            if (starts_with("<!") || starts_with("<?")) { // doctype, CDATA, PI
                std::size_t end = src_.find('>', pos_);
                pos_ = end == std::string::npos ? src_.size() : end + 1;
                continue;
            }
            if (starts_with("</")) {
                if (parse_end_tag(token)) return true;
                continue;
            }
            if (pos_ + 1 < src_.size() &&
                (std::isalpha(static_cast<unsigned char>(src_[pos_ + 1])))) {
                if (parse_start_tag(token)) return true;
                continue;
            }
            // Stray '<' that opens nothing: literal text.
            token = {Token::Kind::Text, "<", {}, false};
            ++pos_;
            return true;
        }
        return false;
    }

    /// Consumes raw content up to the matching end tag (script/style).
    void skip_raw_text(const std::string& tag) {
        std::string needle = "</" + tag;
        std::size_t i = pos_;
        while (i < src_.size()) {
            std::size_t hit = src_.find('<', i);
            if (hit == std::string::npos || hit + needle.size() > src_.size()) {
                pos_ = src_.size();
                return;
            }
            if (iequal(view(hit, hit + needle.size()), needle)) {
                std::size_t close = src_.find('>', hit);
                pos_ = close == std::string::npos ? src_.size() : close + 1;
                return;
            }
            i = hit + 1;
        }
        pos_ = src_.size();
    }

private:
    std::string_view view(std::size_t from, std::size_t to) const {
        return std::string_view(src_).substr(from, to - from);
    }

    bool starts_with(std::string_view prefix) const {
        return view(pos_, std::min(src_.size(), pos_ + prefix.size())) == prefix;
    }

    bool parse_end_tag(Token& token) {
        std::size_t i = pos_ + 2;
        std::size_t start = i;
        while (i < src_.size() && src_[i] != '>' && !is_space(src_[i])) ++i;
        std::string name = to_lower(view(start, i));
        std::size_t close = src_.find('>', i);
        pos_ = close == std::string::npos ? src_.size() : close + 1;
        if (name.empty()) return false;
        token = {Token::Kind::EndTag, std::move(name), {}, false};
        return true;
    }

    bool parse_start_tag(Token& token) {
        std::size_t i = pos_ + 1;
        std::size_t start = i;
        while (i < src_.size() && !is_space(src_[i]) && src_[i] != '>' && src_[i] != '/') ++i;
        token = {Token::Kind::StartTag, to_lower(view(start, i)), {}, false};

        while (i < src_.size() && src_[i] != '>') {
            while (i < src_.size() && is_space(src_[i])) ++i;
            if (i >= src_.size() || src_[i] == '>') break;
            if (src_[i] == '/') {
                token.self_closing = true;
                ++i;
                continue;
            }
            std::size_t name_start = i;
            while (i < src_.size() && !is_space(src_[i]) && src_[i] != '=' && src_[i] != '>' &&
                   src_[i] != '/')
                ++i;
            std::string name = to_lower(view(name_start, i));
            std::string value;
            while (i < src_.size() && is_space(src_[i])) ++i;
            if (i < src_.size() && src_[i] == '=') {
                ++i;
                while (i < src_.size() && is_space(src_[i])) ++i;
                if (i < src_.size() && (src_[i] == '"' || src_[i] == '\'')) {
                    char quote = src_[i++];
                    std::size_t val_start = i;
                    while (i < src_.size() && src_[i] != quote) ++i;
                    value = decode_entities(view(val_start, i));
                    if (i < src_.size()) ++i;
                } else {
                    std::size_t val_start = i;
                    while (i < src_.size() && !is_space(src_[i]) && src_[i] != '>') ++i;
                    value = decode_entities(view(val_start, i));
                }
            }
            if (!name.empty() && !token.attributes.empty()
                    ? std::none_of(token.attributes.begin(), token.attributes.end(),
                                   [&](const Attr& a) { return a.name == name; })
                    : !name.empty())
                token.attributes.push_back({std::move(name), std::move(value)});
        }
        pos_ = i < src_.size() ? i + 1 : src_.size();
        return !token.data.empty();
    }

    std::string src_;
    std::size_t pos_ = 0;
};

class TreeBuilder {
public:
    DomTree build(std::string text) {
        Tokenizer tokenizer(std::move(text));
        Token token;
        while (tokenizer.next(token)) {
            switch (token.kind) {
            case Token::Kind::Text: handle_text(token.data); break;
            case Token::Kind::StartTag: handle_start(token, tokenizer); break;
            case Token::Kind::EndTag: handle_end(token.data); break;
            }
        }
        if (!root_) make_root();
        return DomTree(std::move(root_), next_id_);
    }

private:
    std::unique_ptr<DomNode> new_node(std::string tag) {
        auto node = std::make_unique<DomNode>();
        node->tag = std::move(tag);
        node->id = next_id_++;
        return node;
    }

    void make_root(std::vector<Attr> attrs = {}) {
        root_ = new_node("html");
        root_->attributes = std::move(attrs);
        stack_ = {root_.get()};
    }

    DomNode* top() { return stack_.back(); }

    void pop() {
        if (stack_.size() > 1) stack_.pop_back();
    }

    DomNode* append(std::unique_ptr<DomNode> node) {
        node->parent = top();
        top()->children.push_back(std::move(node));
        return top()->children.back().get();
    }

    // Elements and text that appear directly under <html> (or before any
    // markup) live in a synthesized <body>.
    void ensure_content_context() {
        if (!root_) make_root();
        if (stack_.size() > 1) return;
        if (!body_) {
            auto body = new_node("body");
            body_ = append(std::move(body));
        }
        stack_.push_back(body_);
    }

    void handle_text(const std::string& text) {
        if (whitespace_only(text)) return;
        if (!root_ || stack_.size() <= 1) ensure_content_context();
        auto node = new_node(std::string(kTextTag));
        node->text = text;
        append(std::move(node));
    }

    void handle_start(const Token& token, Tokenizer& tokenizer) {
        const std::string& tag = token.data;
        if (tag == "html") {
            if (!root_) make_root(token.attributes);
            return;
        }
        if (tag == "head" || tag == "body") {
            if (!root_) make_root();
            stack_ = {root_.get()}; // head/body always hang off the root
            auto node = new_node(tag);
            node->attributes = token.attributes;
            DomNode* placed = append(std::move(node));
            if (tag == "body") body_ = placed;
            stack_.push_back(placed);
            return;
        }
        ensure_content_context();
        apply_auto_close(tag);

        auto node = new_node(tag);
        node->attributes = token.attributes;
        DomNode* placed = append(std::move(node));
        bool is_void = kVoid.count(tag) > 0;
        if (kRawText.count(tag)) {
            tokenizer.skip_raw_text(tag); // script/style bodies are dropped
            return;
        }
        if (!is_void && !token.self_closing) stack_.push_back(placed);
    }

    void apply_auto_close(const std::string& tag) {
        if (kClosesP.count(tag)) {
            if (top()->tag == "p") pop();
        }
        if (auto it = kAutoClose.find(tag); it != kAutoClose.end()) {
            while (stack_.size() > 1 && it->second.count(top()->tag)) pop();
        }
    }

    void handle_end(const std::string& tag) {
        if (tag == "html") return;
        if (tag == "body" || tag == "head") {
            while (stack_.size() > 1) pop();
            return;
        }
        // Close up to the matching open element; unmatched end tags are
        // ignored, unclosed children get closed at the parent boundary.
        for (std::size_t i = stack_.size(); i-- > 1;) {
            if (stack_[i]->tag == tag) {
                stack_.resize(i);
                return;
            }
        }
    }

    std::unique_ptr<DomNode> root_;
    DomNode* body_ = nullptr;
    std::vector<DomNode*> stack_;
    std::uint64_t next_id_ = 1;
};

} // namespace

DomTree parse_html(std::string_view document_bytes) {
    if (document_bytes.empty()) throw EmptyDocument();
    return TreeBuilder().build(decode_charset(document_bytes));
}

} // namespace treegram
