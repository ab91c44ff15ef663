#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "treegram/dom.hpp"

namespace treegram {

/// Structural change classes modeled after what actually drifts on web
/// pages: renamed attributes, wrapper divs, added/removed levels, list
/// growth, reordering, text edits.
enum class MutationKind {
    RenameClass,
    RenameId,
    InsertWrapperElement,
    DeleteNode,
    DuplicateListItem,
    ReorderSiblings,
    AddLevel,
    RemoveLevel,
    EditText,
};

std::string to_string(MutationKind kind);
MutationKind mutation_kind_from_string(std::string_view name);

struct MutationOp {
    MutationKind kind;
    std::size_t count = 1;
    std::string target;      // optional filter: "tag", "tag.cls", "#id", ".cls", "*"
};

struct MutationSpec {
    std::uint64_t seed = 0;
    std::vector<MutationOp> ops;

    static MutationSpec from_json(std::string_view text); // throws CorpusError
    std::string to_json() const;
};

struct MutationResult {
    DomTree tree;
    /// original node id -> surviving node id; deleted nodes absent,
    /// inserted nodes never appear as values of original keys.
    std::map<std::uint64_t, std::uint64_t> node_map;
    std::vector<std::string> op_log;  // one line per op, records no-ops
};

/// Applies ops in order with a generator seeded from spec.seed. Same
/// (page, spec, seed) produces a byte-identical serialized page.
MutationResult mutate(const DomTree& tree, const MutationSpec& spec);

} // namespace treegram
