#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgf/analysis.hpp"
#include "kgf/kgraph.hpp"
#include "kgf/move_result.hpp"

namespace kgf {

/// Vertices reachable from v following edges source -> range, v included.
/// These are the vertices w with w <= v.
inline std::set<std::string> downset(const KGraph& kg, const std::string& vertex) {
    const Skeleton& sk = kg.skeleton();
    if (!sk.has_vertex(vertex)) {
        throw std::invalid_argument("downset: unknown vertex '" + vertex + "'");
    }
    std::set<std::string> reached{vertex};
    std::vector<std::string> todo{vertex};
    while (!todo.empty()) {
        std::string cur = std::move(todo.back());
        todo.pop_back();
        for (const auto& id : sk.out_of(cur)) {
            if (reached.insert(sk.range(id)).second) {
                todo.push_back(sk.range(id));
            }
        }
    }
    return reached;
}

/// Sink deletion: removes the down-set of a sink together with every edge
/// ranging into it; the square table restricts, since classes of surviving
/// paths never pass through deleted vertices.
inline MoveOutcome delete_sink(const KGraph& kg, const std::string& vertex) {
    const Skeleton& sk = kg.skeleton();
    if (!sk.has_vertex(vertex)) {
        throw std::invalid_argument("delete_sink: unknown vertex '" + vertex + "'");
    }
    std::vector<int> sink_colors;
    for (int c = 1; c <= sk.k(); ++c) {
        bool emits = false;
        for (const auto& id : sk.out_of(vertex)) {
            if (sk.color(id) == c) {
                emits = true;
                break;
            }
        }
        if (!emits) {
            sink_colors.push_back(c);
        }
    }
    if (sink_colors.empty()) {
        return move_failure(MoveErrorKind::NotASink,
                            "vertex '" + vertex + "' emits an edge of every color");
    }
    std::set<std::string> removed = downset(kg, vertex);
    if (removed.size() == sk.vertices().size()) {
        return move_failure(MoveErrorKind::EmptyResult,
                            "deleting '" + vertex + "' would remove every vertex");
    }
    // Everything below the sink is a sink of the same color.
    for (const auto& w : removed) {
        for (int c : sink_colors) {
            for (const auto& id : sk.out_of(w)) {
                if (sk.color(id) == c) {
                    throw std::logic_error("delete_sink: vertex '" + w +
                                           "' below the sink emits color " + std::to_string(c));
                }
            }
        }
    }

    bool input_source_free = is_source_free(kg);
    Skeleton out(sk.k());
    ForwardMap forward;
    for (const auto& w : sk.vertices()) {
        if (!removed.count(w)) {
            out.add_vertex(w);
            forward.vertices[w] = w;
        }
    }
    for (const auto& [id, e] : sk.edges()) {
        if (!removed.count(e.range)) {
            out.add_edge(id, e.color, e.source, e.range);
            forward.edges[id] = {id};
        }
    }
    SquareTable squares;
    for (const auto& [key, image] : kg.squares().entries()) {
        if (out.has_edge(key.first) && out.has_edge(key.second)) {
            if (!out.has_edge(image.first) || !out.has_edge(image.second)) {
                throw std::logic_error("delete_sink: image of a surviving square was deleted");
            }
            squares.set(key, image);
        }
    }

    MoveResult result{
        detail::build_move_output("delete_sink", std::move(out), std::move(squares)),
        std::move(forward),
        "delete-sink",
        {vertex}};
    if (input_source_free && !is_source_free(result.output)) {
        throw std::logic_error("delete_sink: output acquired a source");
    }
    MoveOutcome outcome;
    outcome.result = std::move(result);
    return outcome;
}

}  // namespace kgf
