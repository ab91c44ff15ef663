#pragma once

#include <stdexcept>
#include <string>

namespace treegram {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// parse_html was given an empty byte sequence.
class EmptyDocument : public Error {
public:
    EmptyDocument() : Error("empty document") {}
};

/// A snapshot selector matched no nodes.
class SelectorMiss : public Error {
public:
    explicit SelectorMiss(const std::string& selector)
        : Error("selector matched no nodes: " + selector) {}
};

/// Tree-gram bytes could not be decoded.
class CorruptSnapshot : public Error {
public:
    explicit CorruptSnapshot(const std::string& why)
        : Error("corrupt tree-gram snapshot: " + why) {}
};

/// An XPath string falls outside the documented subset grammar.
class UnsupportedXPath : public Error {
public:
    explicit UnsupportedXPath(const std::string& why)
        : Error("unsupported xpath: " + why) {}
};

/// xpath_for_nodes was handed nodes from different trees.
class MixedTrees : public Error {
public:
    MixedTrees() : Error("nodes belong to different trees") {}
};

/// Wrapper document violates the schema. Carries the offending field path.
class InvalidWrapper : public Error {
public:
    InvalidWrapper(const std::string& field_path, const std::string& why)
        : Error("invalid wrapper at " + field_path + ": " + why), field_path_(field_path) {}
    const std::string& field_path() const { return field_path_; }

private:
    std::string field_path_;
};

/// The process-flow trigger is representable in the schema but not implemented.
class UnsupportedTrigger : public Error {
public:
    explicit UnsupportedTrigger(const std::string& name)
        : Error("unsupported trigger: " + name) {}
};

/// adapt_pattern called on a pattern with no stored tree-gram.
class NoSnapshot : public Error {
public:
    explicit NoSnapshot(const std::string& pattern)
        : Error("pattern has no stored tree-gram: " + pattern) {}
};

/// Evaluation corpus files are missing or unreadable.
class CorpusError : public Error {
public:
    explicit CorpusError(const std::string& why) : Error("corpus error: " + why) {}
};

} // namespace treegram
