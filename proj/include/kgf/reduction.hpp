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

/// Parallel edges, one per color, closed under the square relation: whenever a
/// square puts a member opposite another edge in the same slot, that edge
/// belongs too.
struct CompleteEdge {
    std::vector<std::string> edges;  // sorted
    std::string source;
    std::string range;
};

inline std::vector<CompleteEdge> complete_edges(const KGraph& kg) {
    const Skeleton& sk = kg.skeleton();
    if (sk.k() >= 32) {
        throw std::invalid_argument("complete_edges: supports at most 31 colors");
    }
    // Slot-mate adjacency: first edges of a square's two representatives are
    // mates, and so are the second edges.
    std::map<std::string, std::vector<std::string>> mate;
    for (const auto& [key, image] : kg.squares().entries()) {
        mate[key.first].push_back(image.first);
        mate[key.second].push_back(image.second);
    }
    std::set<std::string> seen;
    struct Atom {
        std::vector<std::string> edges;
        std::string source, range;
        unsigned color_mask = 0;
        bool usable = true;
    };
    std::map<std::pair<std::string, std::string>, std::vector<Atom>> atoms_by_span;
    for (const auto& [id, e] : sk.edges()) {
        if (seen.count(id)) {
            continue;
        }
        std::vector<std::string> component;
        std::vector<std::string> todo{id};
        seen.insert(id);
        while (!todo.empty()) {
            std::string cur = std::move(todo.back());
            todo.pop_back();
            component.push_back(cur);
            for (const auto& next : mate[cur]) {
                if (seen.insert(next).second) {
                    todo.push_back(next);
                }
            }
        }
        std::sort(component.begin(), component.end());
        Atom atom;
        atom.edges = component;
        atom.source = sk.source(component.front());
        atom.range = sk.range(component.front());
        for (const auto& member : component) {
            if (sk.source(member) != atom.source || sk.range(member) != atom.range) {
                atom.usable = false;
            }
            unsigned bit = 1u << (sk.color(member) - 1);
            if (atom.color_mask & bit) {
                atom.usable = false;  // two edges of one color can never both be kept
            }
            atom.color_mask |= bit;
        }
        if (atom.usable) {
            atoms_by_span[{atom.source, atom.range}].push_back(std::move(atom));
        }
    }

    const unsigned full = (1u << sk.k()) - 1u;
    std::vector<CompleteEdge> result;
    for (auto& [span, atoms] : atoms_by_span) {
        std::sort(atoms.begin(), atoms.end(),
                  [](const Atom& a, const Atom& b) { return a.edges < b.edges; });
        std::vector<std::size_t> chosen;
        auto emit = [&]() {
            CompleteEdge ce;
            ce.source = span.first;
            ce.range = span.second;
            for (std::size_t idx : chosen) {
                ce.edges.insert(ce.edges.end(), atoms[idx].edges.begin(), atoms[idx].edges.end());
            }
            std::sort(ce.edges.begin(), ce.edges.end());
            result.push_back(std::move(ce));
        };
        auto rec = [&](auto&& self, std::size_t from, unsigned mask) -> void {
            if (mask == full) {
                emit();
                return;
            }
            for (std::size_t i = from; i < atoms.size(); ++i) {
                if (mask & atoms[i].color_mask) {
                    continue;
                }
                chosen.push_back(i);
                self(self, i + 1, mask | atoms[i].color_mask);
                chosen.pop_back();
            }
        };
        rec(rec, 0, 0u);
    }
    std::sort(result.begin(), result.end(),
              [](const CompleteEdge& a, const CompleteEdge& b) { return a.edges < b.edges; });
    return result;
}

namespace detail {

// Complete-edge test for one specific edge set (the out- or in-edges of a
// vertex): one edge per color, common endpoints, closed under slot-mates.
inline bool edge_set_complete(const KGraph& kg, const std::vector<std::string>& ids,
                              std::string* why) {
    const Skeleton& sk = kg.skeleton();
    std::set<std::string> members(ids.begin(), ids.end());
    std::vector<int> per_color(static_cast<std::size_t>(sk.k()), 0);
    for (const auto& id : ids) {
        ++per_color[static_cast<std::size_t>(sk.color(id) - 1)];
    }
    for (int c = 1; c <= sk.k(); ++c) {
        if (per_color[static_cast<std::size_t>(c - 1)] != 1) {
            *why = "needs exactly one edge of color " + std::to_string(c) + ", found " +
                   std::to_string(per_color[static_cast<std::size_t>(c - 1)]);
            return false;
        }
    }
    for (const auto& id : ids) {
        if (sk.source(id) != sk.source(ids.front()) || sk.range(id) != sk.range(ids.front())) {
            *why = "edges '" + ids.front() + "' and '" + id + "' are not parallel";
            return false;
        }
    }
    for (const auto& [key, image] : kg.squares().entries()) {
        if (members.count(key.first) && !members.count(image.first)) {
            *why = "square pairs '" + key.first + "' with outside edge '" + image.first + "'";
            return false;
        }
        if (members.count(key.second) && !members.count(image.second)) {
            *why = "square pairs '" + key.second + "' with outside edge '" + image.second + "'";
            return false;
        }
    }
    return true;
}

}  // namespace detail

/// Reduction: contracts the complete edge out of v onto its range w, deleting
/// v. Edges formerly ranging at v are re-ranged to w and their parent becomes
/// the two-edge path through the chosen representative f (the color-1 member).
/// Output squares are parent squares normalized so the f edges stay in their
/// slots, then pulled back.
inline MoveOutcome reduce(const KGraph& kg, const std::string& vertex) {
    const Skeleton& sk = kg.skeleton();
    if (!sk.has_vertex(vertex)) {
        throw std::invalid_argument("reduce: unknown vertex '" + vertex + "'");
    }
    std::string why;
    const auto& out_edges = sk.out_of(vertex);
    if (!detail::edge_set_complete(kg, out_edges, &why)) {
        return move_failure(MoveErrorKind::IncompleteOut,
                            "edges out of '" + vertex + "': " + why);
    }
    const auto& in_edges = sk.into(vertex);
    if (!detail::edge_set_complete(kg, in_edges, &why)) {
        return move_failure(MoveErrorKind::IncompleteIn,
                            "edges into '" + vertex + "': " + why);
    }
    const std::string w = sk.range(out_edges.front());
    if (w == vertex) {
        return move_failure(MoveErrorKind::LoopAtV,
                            "the complete edge out of '" + vertex + "' is a loop");
    }
    std::string f;
    for (const auto& id : out_edges) {
        if (sk.color(id) == 1) {
            f = id;
        }
    }
    const int f_color = 1;

    bool input_source_free = is_source_free(kg);
    std::set<std::string> deleted(out_edges.begin(), out_edges.end());
    Skeleton out(sk.k());
    ForwardMap forward;
    for (const auto& u : sk.vertices()) {
        if (u != vertex) {
            out.add_vertex(u);
            forward.vertices[u] = u;
        }
    }
    std::set<std::string> reranged;
    for (const auto& [id, e] : sk.edges()) {
        if (deleted.count(id)) {
            continue;
        }
        if (e.range == vertex) {
            out.add_edge(id, e.color, e.source, w);
            forward.edges[id] = {id, f};
            reranged.insert(id);
        } else {
            out.add_edge(id, e.color, e.source, e.range);
            forward.edges[id] = {id};
        }
    }

    SquareTable squares;
    detail::for_each_mixed_two_path(out, [&](const std::string& x, const std::string& y) {
        bool x_through = reranged.count(x) != 0;
        bool y_through = reranged.count(y) != 0;
        std::vector<std::string> parent{x};
        if (x_through) {
            parent.push_back(f);
        }
        parent.push_back(y);
        if (y_through) {
            parent.push_back(f);
        }
        // Transpose the two real colors; the f slots stay where the path
        // passes through v.
        std::vector<int> target{sk.color(y)};
        if (x_through) {
            target.push_back(f_color);
        }
        target.push_back(sk.color(x));
        if (y_through) {
            target.push_back(f_color);
        }
        auto normalized = detail::try_normalize(sk, kg.squares(), parent, target);
        if (!normalized) {
            throw std::logic_error("reduce: input square lookup failed");
        }
        const auto& rho = *normalized;
        std::size_t second = x_through ? 2 : 1;
        if ((x_through && rho[1] != f) || (y_through && rho.back() != f)) {
            throw std::logic_error("reduce: normalized parent lost the chosen edge");
        }
        if (!squares.insert({x, y}, {rho[0], rho[second]})) {
            throw std::logic_error("reduce: inconsistent output squares");
        }
    });

    MoveResult result{detail::build_move_output("reduce", std::move(out), std::move(squares)),
                      std::move(forward),
                      "reduce",
                      {vertex}};
    if (input_source_free && !is_source_free(result.output)) {
        throw std::logic_error("reduce: output acquired a source");
    }
    MoveOutcome outcome;
    outcome.result = std::move(result);
    return outcome;
}

}  // namespace kgf
