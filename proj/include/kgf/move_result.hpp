#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgf/kgraph.hpp"

namespace kgf {

enum class MoveErrorKind {
    InvalidPartition,  // insplit: partition breaks the pairing condition
    NotSourceFree,     // insplit/delay require a source-free input
    NotASink,          // delete_sink at a vertex emitting every color
    EmptyResult,       // delete_sink would remove every vertex
    IncompleteOut,     // reduce: out-edges of v are not a complete edge
    IncompleteIn,      // reduce: in-edges of v are not a complete edge
    LoopAtV,           // reduce: the complete out-edge loops back to v
};

inline const char* to_string(MoveErrorKind kind) {
    switch (kind) {
        case MoveErrorKind::InvalidPartition: return "InvalidPartition";
        case MoveErrorKind::NotSourceFree: return "NotSourceFree";
        case MoveErrorKind::NotASink: return "NotASink";
        case MoveErrorKind::EmptyResult: return "EmptyResult";
        case MoveErrorKind::IncompleteOut: return "IncompleteOut";
        case MoveErrorKind::IncompleteIn: return "IncompleteIn";
        case MoveErrorKind::LoopAtV: return "LoopAtV";
    }
    return "?";
}

struct MoveError {
    MoveErrorKind kind;
    std::string detail;
};

/// Correspondence from output ids back to the input. New vertices and edges
/// without a parent (delay's subdivision vertices and connector edges) are
/// absent. Reduction maps some edges to a two-edge parent path, everything
/// else maps edge to edge.
struct ForwardMap {
    std::map<std::string, std::string> vertices;
    std::map<std::string, std::vector<std::string>> edges;
};

struct MoveResult {
    KGraph output;
    ForwardMap forward_map;
    std::string move_kind;
    std::vector<std::string> parameters;
};

struct MoveOutcome {
    std::optional<MoveResult> result;
    std::optional<MoveError> error;

    bool ok() const { return result.has_value(); }
};

inline MoveOutcome move_failure(MoveErrorKind kind, std::string detail) {
    MoveOutcome out;
    out.error = MoveError{kind, std::move(detail)};
    return out;
}

namespace detail {

// Mirrors the superscript notation: base ids get ^1/^2 or v_/e_ prefixes, and
// apostrophes are appended until the id is fresh.
inline std::string fresh_id(std::set<std::string>& taken, std::string candidate) {
    while (taken.count(candidate)) {
        candidate += '\'';
    }
    taken.insert(candidate);
    return candidate;
}

inline KGraph build_move_output(const char* move, Skeleton skeleton, SquareTable squares) {
    BuildOutcome built = build_kgraph(std::move(skeleton), std::move(squares));
    if (!built.ok()) {
        throw std::logic_error(std::string(move) +
                               ": constructed presentation failed validation:\n" +
                               to_text(built.report));
    }
    return std::move(*built.kgraph);
}

}  // namespace detail

}  // namespace kgf
