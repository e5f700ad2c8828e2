#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kgf/analysis.hpp"
#include "kgf/kgraph.hpp"
#include "kgf/move_result.hpp"
#include "kgf/paths.hpp"

namespace kgf {

/// Edges forced to be delayed along with one chosen edge, plus the square
/// classes that get stretched into rectangles. An affected square class of
/// degree e_c + e_i is keyed by its unique representative whose first
/// traversal edge has the delayed color c.
struct DelayClosure {
    int base_color = 0;
    std::set<std::string> delayed_edges;
    std::vector<SquareTable::Pair> affected_squares;  // canonical representatives, sorted
};

inline DelayClosure delay_closure(const KGraph& kg, const std::string& edge_id) {
    const Skeleton& sk = kg.skeleton();
    if (!sk.has_edge(edge_id)) {
        throw std::invalid_argument("delay_closure: unknown edge '" + edge_id + "'");
    }
    const int c = sk.color(edge_id);

    // Two color-c edges are linked when they sit on opposite sides of one
    // commuting square; the closure is the connected component of the chosen
    // edge.
    std::map<std::string, std::vector<std::string>> opposite;
    for (const auto& [key, image] : kg.squares().entries()) {
        std::string from, to;
        if (sk.color(key.first) == c) {
            from = key.first;
            to = image.second;
        } else if (sk.color(key.second) == c) {
            from = key.second;
            to = image.first;
        } else {
            continue;
        }
        opposite[from].push_back(to);
        opposite[to].push_back(from);
    }
    DelayClosure closure;
    closure.base_color = c;
    closure.delayed_edges.insert(edge_id);
    std::vector<std::string> todo{edge_id};
    while (!todo.empty()) {
        std::string cur = std::move(todo.back());
        todo.pop_back();
        for (const auto& next : opposite[cur]) {
            if (closure.delayed_edges.insert(next).second) {
                todo.push_back(next);
            }
        }
    }
    for (const auto& [key, image] : kg.squares().entries()) {
        if (sk.color(key.first) == c && closure.delayed_edges.count(key.first)) {
            closure.affected_squares.push_back(key);
        }
    }
    return closure;
}

/// Delaying an edge: every edge in the closure is subdivided through a fresh
/// vertex, and each affected square is stretched into a rectangle by a
/// connector edge between the subdivision vertices. Output squares follow the
/// three construction cases (pulled back, children of an affected square, and
/// squares among connector edges read off 3-cubes of the input).
inline MoveOutcome delay(const KGraph& kg, const std::string& edge_id) {
    const Skeleton& sk = kg.skeleton();
    if (!sk.has_edge(edge_id)) {
        throw std::invalid_argument("delay: unknown edge '" + edge_id + "'");
    }
    if (!is_source_free(kg)) {
        return move_failure(MoveErrorKind::NotSourceFree,
                            "delay requires a source-free k-graph");
    }
    const DelayClosure closure = delay_closure(kg, edge_id);
    const int c = closure.base_color;
    const SquareTable& input = kg.squares();

    std::set<std::string> vertex_ids(sk.vertices().begin(), sk.vertices().end());
    std::set<std::string> edge_ids;
    for (const auto& [id, e] : sk.edges()) {
        if (!closure.delayed_edges.count(id)) {
            edge_ids.insert(id);
        }
    }

    std::map<std::string, std::string> midpoint;                    // g -> v_g
    std::map<std::string, std::pair<std::string, std::string>> halves;  // g -> (g^1, g^2)
    for (const auto& g : closure.delayed_edges) {
        midpoint[g] = detail::fresh_id(vertex_ids, "v_" + g);
        std::string first = detail::fresh_id(edge_ids, g + "^1");
        std::string second = detail::fresh_id(edge_ids, g + "^2");
        halves[g] = {first, second};
    }
    std::map<SquareTable::Pair, std::string> connector;  // canonical class -> e_alpha
    for (const auto& rep : closure.affected_squares) {
        connector[rep] = detail::fresh_id(edge_ids, "e_" + rep.first + "_" + rep.second);
    }

    Skeleton out(sk.k());
    for (const auto& w : vertex_ids) {
        out.add_vertex(w);
    }
    ForwardMap forward;
    for (const auto& w : sk.vertices()) {
        forward.vertices[w] = w;
    }

    std::map<std::string, std::string> half1_of, half2_of;       // output id -> g
    std::map<std::string, SquareTable::Pair> connector_class;    // output id -> canonical rep
    for (const auto& [id, e] : sk.edges()) {
        if (closure.delayed_edges.count(id)) {
            continue;
        }
        out.add_edge(id, e.color, e.source, e.range);
        forward.edges[id] = {id};
    }
    for (const auto& g : closure.delayed_edges) {
        const Edge& e = sk.edge(g);
        const auto& [first, second] = halves[g];
        out.add_edge(first, c, e.source, midpoint[g]);
        out.add_edge(second, c, midpoint[g], e.range);
        forward.edges[first] = {g};
        forward.edges[second] = {g};
        half1_of[first] = g;
        half2_of[second] = g;
    }
    for (const auto& rep : closure.affected_squares) {
        // Canonical representative (g then b); the other representative
        // (a then h) fixes the connector's range.
        auto other = input.image(rep);
        if (!other) {
            throw std::logic_error("delay: affected square lost its image");
        }
        const std::string& g = rep.first;
        const std::string& h = other->second;
        if (!closure.delayed_edges.count(h)) {
            throw std::logic_error("delay: opposite edge escaped the closure");
        }
        const std::string& id = connector[rep];
        out.add_edge(id, sk.color(rep.second), midpoint[g], midpoint[h]);
        connector_class[id] = rep;
    }

    auto connector_for = [&](const SquareTable::Pair& canonical) -> const std::string& {
        auto it = connector.find(canonical);
        if (it == connector.end()) {
            throw std::logic_error("delay: square (" + canonical.first + "," +
                                   canonical.second + ") has no connector edge");
        }
        return it->second;
    };

    SquareTable squares;
    auto put = [&](const SquareTable::Pair& key, const SquareTable::Pair& image) {
        if (!squares.insert(key, image)) {
            throw std::logic_error("delay: inconsistent output squares");
        }
    };

    detail::for_each_mixed_two_path(out, [&](const std::string& x, const std::string& y) {
        bool x_old = forward.edges.count(x) && !half1_of.count(x) && !half2_of.count(x);
        bool y_old = forward.edges.count(y) && !half1_of.count(y) && !half2_of.count(y);

        // Case 1: untouched squares pull back through the inclusion.
        if (x_old && y_old) {
            auto image = input.image({x, y});
            if (!image) {
                throw std::logic_error("delay: input square lookup failed");
            }
            put({x, y}, *image);
            return;
        }
        // Case 2: one edge is half of a delayed edge.
        if (auto it = half1_of.find(x); it != half1_of.end()) {
            // x = g^1, y = connector out of v_g for the class (g then b).
            auto cls = connector_class.find(y);
            if (cls == connector_class.end() || cls->second.first != it->second) {
                throw std::logic_error("delay: unexpected edge after '" + x + "'");
            }
            auto other = input.image(cls->second);
            put({x, y}, {other->first, halves[other->second].first});
            return;
        }
        if (auto it = half2_of.find(x); it != half2_of.end()) {
            // x = g^2, y an untouched edge; the parent square is (g then y).
            const std::string& g = it->second;
            auto other = input.image({g, y});
            if (!other) {
                throw std::logic_error("delay: input square lookup failed");
            }
            put({x, y}, {connector_for({g, y}), halves[other->second].second});
            return;
        }
        if (auto it = half1_of.find(y); it != half1_of.end()) {
            // y = g^1, x an untouched edge; the canonical parent is the
            // transposed representative of (x then g).
            auto canonical = input.image({x, it->second});
            if (!canonical) {
                throw std::logic_error("delay: input square lookup failed");
            }
            put({x, y}, {halves[canonical->first].first, connector_for(*canonical)});
            return;
        }
        if (auto it = half2_of.find(y); it != half2_of.end()) {
            // x is a connector into v_g, y = g^2.
            auto cls = connector_class.find(x);
            if (cls == connector_class.end()) {
                throw std::logic_error("delay: unexpected edge before '" + y + "'");
            }
            const auto& canonical = cls->second;
            put({x, y}, {halves[canonical.first].second, canonical.second});
            return;
        }
        // Case 3: both edges are connectors; read the answer off the 3-cube
        // spanned by the outlining 3-path of the input.
        auto ax = connector_class.find(x);
        auto ay = connector_class.find(y);
        if (ax == connector_class.end() || ay == connector_class.end()) {
            throw std::logic_error("delay: unclassified mixed 2-path");
        }
        auto other_x = input.image(ax->second);
        const std::string& shared = other_x->second;  // r(x) = v_shared = s(y)
        if (shared != ay->second.first) {
            throw std::logic_error("delay: connector edges disagree on the shared vertex");
        }
        std::vector<std::string> outline{other_x->first, shared, ay->second.second};
        int i = sk.color(outline[0]);
        int j = sk.color(outline[2]);
        auto delta = detail::try_normalize(sk, input, outline, {c, j, i});
        auto gamma = detail::try_normalize(sk, input, outline, {j, c, i});
        if (!delta || !gamma) {
            throw std::logic_error("delay: cube normalization failed");
        }
        put({x, y}, {connector_for({(*delta)[0], (*delta)[1]}),
                     connector_for({(*gamma)[1], (*gamma)[2]})});
    });

    MoveResult result{detail::build_move_output("delay", std::move(out), std::move(squares)),
                      std::move(forward),
                      "delay",
                      {edge_id}};
    if (!is_source_free(result.output)) {
        throw std::logic_error("delay: output acquired a source");
    }
    MoveOutcome outcome;
    outcome.result = std::move(result);
    return outcome;
}

}  // namespace kgf
