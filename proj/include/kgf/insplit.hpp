#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgf/analysis.hpp"
#include "kgf/kgraph.hpp"
#include "kgf/move_result.hpp"
#include "kgf/paths.hpp"

namespace kgf {

/// Partition of the in-edges of a vertex into the minimal sets closed under
/// the pairing relation: whenever a square pairs two edges into the vertex,
/// they land in the same block.
struct PairingBlocks {
    std::string vertex;
    std::vector<std::vector<std::string>> blocks;  // members sorted, blocks sorted by front
};

inline PairingBlocks pairing_blocks(const KGraph& kg, const std::string& vertex) {
    const Skeleton& sk = kg.skeleton();
    if (!sk.has_vertex(vertex)) {
        throw std::invalid_argument("pairing_blocks: unknown vertex '" + vertex + "'");
    }
    const auto& members = sk.into(vertex);
    std::map<std::string, std::vector<std::string>> adjacent;
    for (const auto& [key, image] : kg.squares().entries()) {
        // The range-side edges of the two representatives are the paired ones.
        if (sk.range(key.second) == vertex) {
            adjacent[key.second].push_back(image.second);
            adjacent[image.second].push_back(key.second);
        }
    }
    PairingBlocks result;
    result.vertex = vertex;
    std::set<std::string> seen;
    for (const auto& start : members) {
        if (seen.count(start)) {
            continue;
        }
        std::vector<std::string> block;
        std::vector<std::string> todo{start};
        seen.insert(start);
        while (!todo.empty()) {
            std::string cur = std::move(todo.back());
            todo.pop_back();
            block.push_back(cur);
            for (const auto& next : adjacent[cur]) {
                if (seen.insert(next).second) {
                    todo.push_back(next);
                }
            }
        }
        std::sort(block.begin(), block.end());
        result.blocks.push_back(std::move(block));
    }
    std::sort(result.blocks.begin(), result.blocks.end());
    return result;
}

/// Two-way split of r^{-1}(v); valid when each side is a nonempty union of
/// pairing blocks (each side then automatically has every color).
struct InsplitPartition {
    std::vector<std::string> e1;
    std::vector<std::string> e2;
};

namespace detail {

inline std::string join_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (const auto& id : ids) {
        out += (out.empty() ? "" : ",") + id;
    }
    return out;
}

}  // namespace detail

/// In-splitting at a vertex: v becomes v^1, v^2, its out-edges are duplicated,
/// and its in-edges are distributed by the partition. Squares of the output
/// are the unique lifts of the normalized parent squares.
inline MoveOutcome insplit(const KGraph& kg, const std::string& vertex,
                           const InsplitPartition& partition) {
    const Skeleton& sk = kg.skeleton();
    if (!sk.has_vertex(vertex)) {
        throw std::invalid_argument("insplit: unknown vertex '" + vertex + "'");
    }
    if (!is_source_free(kg)) {
        return move_failure(MoveErrorKind::NotSourceFree,
                            "insplit requires a source-free k-graph");
    }

    const auto& incoming = sk.into(vertex);
    std::set<std::string> side1(partition.e1.begin(), partition.e1.end());
    std::set<std::string> side2(partition.e2.begin(), partition.e2.end());
    if (side1.empty() || side2.empty()) {
        return move_failure(MoveErrorKind::InvalidPartition, "both sides must be nonempty");
    }
    for (const auto& id : side1) {
        if (side2.count(id)) {
            return move_failure(MoveErrorKind::InvalidPartition,
                                "edge '" + id + "' appears on both sides");
        }
    }
    std::set<std::string> all(incoming.begin(), incoming.end());
    std::set<std::string> given = side1;
    given.insert(side2.begin(), side2.end());
    if (given != all) {
        return move_failure(MoveErrorKind::InvalidPartition,
                            "sides must partition the edges into '" + vertex + "'");
    }
    for (const auto& block : pairing_blocks(kg, vertex).blocks) {
        bool in1 = side1.count(block.front()) != 0;
        for (const auto& id : block) {
            if ((side1.count(id) != 0) != in1) {
                return move_failure(MoveErrorKind::InvalidPartition,
                                    "pairing condition forces {" + detail::join_ids(block) +
                                        "} onto one side");
            }
        }
    }
    for (const auto* side : {&side1, &side2}) {
        std::set<int> colors;
        for (const auto& id : *side) {
            colors.insert(sk.color(id));
        }
        if (static_cast<int>(colors.size()) != sk.k()) {
            return move_failure(MoveErrorKind::InvalidPartition,
                                "each side needs an edge of every color");
        }
    }

    // Output skeleton.
    std::set<std::string> vertex_ids;
    for (const auto& w : sk.vertices()) {
        if (w != vertex) {
            vertex_ids.insert(w);
        }
    }
    std::string v1 = detail::fresh_id(vertex_ids, vertex + "^1");
    std::string v2 = detail::fresh_id(vertex_ids, vertex + "^2");
    auto child_vertex = [&](const std::string& in_edge) {
        return side1.count(in_edge) ? v1 : v2;
    };

    const auto& duplicated = sk.out_of(vertex);
    std::set<std::string> dup_set(duplicated.begin(), duplicated.end());
    std::set<std::string> edge_ids;
    for (const auto& [id, e] : sk.edges()) {
        if (!dup_set.count(id)) {
            edge_ids.insert(id);
        }
    }

    Skeleton out(sk.k());
    for (const auto& w : vertex_ids) {
        out.add_vertex(w);
    }
    ForwardMap forward;
    for (const auto& w : sk.vertices()) {
        if (w != vertex) {
            forward.vertices[w] = w;
        }
    }
    forward.vertices[v1] = vertex;
    forward.vertices[v2] = vertex;

    // Preimages of each input edge, keyed by output source vertex.
    std::map<std::string, std::map<std::string, std::string>> lift_of;
    std::map<std::string, std::string> parent_of;

    auto ranged = [&](const Edge& e) {
        return e.range == vertex ? child_vertex(e.id) : e.range;
    };
    for (const auto& [id, e] : sk.edges()) {
        if (dup_set.count(id)) {
            continue;
        }
        out.add_edge(id, e.color, e.source, ranged(e));
        forward.edges[id] = {id};
        parent_of[id] = id;
        lift_of[id][e.source] = id;
    }
    for (const auto& id : duplicated) {
        const Edge& e = sk.edge(id);
        std::string c1 = detail::fresh_id(edge_ids, id + "^1");
        std::string c2 = detail::fresh_id(edge_ids, id + "^2");
        out.add_edge(c1, e.color, v1, ranged(e));
        out.add_edge(c2, e.color, v2, ranged(e));
        forward.edges[c1] = {id};
        forward.edges[c2] = {id};
        parent_of[c1] = id;
        parent_of[c2] = id;
        lift_of[id][v1] = c1;
        lift_of[id][v2] = c2;
    }

    // Output squares: lift the normalized parent of each mixed 2-path,
    // starting from the path's own source (the lift is unique).
    SquareTable squares;
    detail::for_each_mixed_two_path(out, [&](const std::string& x, const std::string& y) {
        std::vector<std::string> parent{parent_of.at(x), parent_of.at(y)};
        std::vector<int> target{sk.color(parent[1]), sk.color(parent[0])};
        auto normalized = detail::try_normalize(sk, kg.squares(), parent, target);
        if (!normalized) {
            throw std::logic_error("insplit: input square lookup failed");
        }
        std::string at = out.source(x);
        std::vector<std::string> lifted;
        for (const auto& parent_edge : *normalized) {
            auto by_source = lift_of.find(parent_edge);
            if (by_source == lift_of.end()) {
                throw std::logic_error("insplit: no lift for edge '" + parent_edge + "'");
            }
            auto pick = by_source->second.find(at);
            if (pick == by_source->second.end()) {
                throw std::logic_error("insplit: no lift of '" + parent_edge +
                                       "' starting at '" + at + "'");
            }
            lifted.push_back(pick->second);
            at = out.range(pick->second);
        }
        if (at != out.range(y)) {
            throw std::logic_error("insplit: lifted square does not close up");
        }
        if (!squares.insert({x, y}, {lifted[0], lifted[1]})) {
            throw std::logic_error("insplit: inconsistent lifted squares");
        }
    });

    std::vector<std::string> sorted1(side1.begin(), side1.end());
    std::vector<std::string> sorted2(side2.begin(), side2.end());
    MoveResult result{detail::build_move_output("insplit", std::move(out), std::move(squares)),
                      std::move(forward),
                      "insplit",
                      {vertex, detail::join_ids(sorted1), detail::join_ids(sorted2)}};
    if (!is_source_free(result.output)) {
        throw std::logic_error("insplit: output acquired a source");
    }
    MoveOutcome outcome;
    outcome.result = std::move(result);
    return outcome;
}

}  // namespace kgf
