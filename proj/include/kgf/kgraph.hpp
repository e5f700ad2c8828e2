#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kgf/skeleton.hpp"
#include "kgf/square_table.hpp"
#include "kgf/validation.hpp"

namespace kgf {

namespace detail {

inline std::vector<int> color_order(const Skeleton& sk, const std::vector<std::string>& edges) {
    std::vector<int> order;
    order.reserve(edges.size());
    for (const auto& id : edges) {
        order.push_back(sk.color(id));
    }
    return order;
}

inline bool composable(const Skeleton& sk, const std::vector<std::string>& edges) {
    for (const auto& id : edges) {
        if (!sk.has_edge(id)) {
            return false;
        }
    }
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (sk.range(edges[i]) != sk.source(edges[i + 1])) {
            return false;
        }
    }
    return !edges.empty();
}

// Replaces edges i, i+1 by their table image. Returns nullopt when the swap is
// undefined or would break the path; never trips on a validated table.
inline std::optional<std::vector<std::string>> try_swap(const Skeleton& sk,
                                                        const SquareTable& table,
                                                        const std::vector<std::string>& edges,
                                                        std::size_t i) {
    if (i + 1 >= edges.size()) {
        return std::nullopt;
    }
    const std::string& a = edges[i];
    const std::string& b = edges[i + 1];
    if (sk.color(a) == sk.color(b)) {
        return std::nullopt;
    }
    auto img = table.image({a, b});
    if (!img) {
        return std::nullopt;
    }
    const auto& [c, d] = *img;
    if (!sk.has_edge(c) || !sk.has_edge(d)) {
        return std::nullopt;
    }
    if (sk.color(c) != sk.color(b) || sk.color(d) != sk.color(a)) {
        return std::nullopt;
    }
    if (sk.source(c) != sk.source(a) || sk.range(d) != sk.range(b) ||
        sk.range(c) != sk.source(d)) {
        return std::nullopt;
    }
    std::vector<std::string> out = edges;
    out[i] = c;
    out[i + 1] = d;
    return out;
}

// Sorts the path's color order into `target` by adjacent transpositions.
// Assumes `target` is a permutation of the current color order.
inline std::optional<std::vector<std::string>> try_normalize(const Skeleton& sk,
                                                             const SquareTable& table,
                                                             std::vector<std::string> cur,
                                                             const std::vector<int>& target) {
    for (std::size_t pos = 0; pos < cur.size(); ++pos) {
        if (sk.color(cur[pos]) == target[pos]) {
            continue;
        }
        std::size_t j = pos + 1;
        while (j < cur.size() && sk.color(cur[j]) != target[pos]) {
            ++j;
        }
        if (j == cur.size()) {
            return std::nullopt;
        }
        for (std::size_t t = j; t > pos; --t) {
            auto next = try_swap(sk, table, cur, t - 1);
            if (!next) {
                return std::nullopt;
            }
            cur = std::move(*next);
        }
    }
    return cur;
}

// Closure of one path under every defined adjacent swap.
inline std::set<std::vector<std::string>> closure(const Skeleton& sk, const SquareTable& table,
                                                  const std::vector<std::string>& start) {
    std::set<std::vector<std::string>> seen{start};
    std::vector<std::vector<std::string>> todo{start};
    while (!todo.empty()) {
        auto cur = std::move(todo.back());
        todo.pop_back();
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            auto next = try_swap(sk, table, cur, i);
            if (next && seen.insert(*next).second) {
                todo.push_back(std::move(*next));
            }
        }
    }
    return seen;
}

template <typename Fn>
void for_each_mixed_two_path(const Skeleton& sk, Fn&& fn) {
    for (const auto& [id, e] : sk.edges()) {
        for (const auto& next_id : sk.out_of(e.range)) {
            if (sk.color(next_id) != e.color) {
                fn(id, next_id);
            }
        }
    }
}

}  // namespace detail

class KGraph;
struct BuildOutcome;
BuildOutcome build_kgraph(Skeleton skeleton, SquareTable squares);

/// Validated k-graph presentation: a skeleton together with a factorization
/// table that passed (KG1)-(KG3). Immutable after construction; all operations
/// on it are pure, so concurrent reads are safe.
class KGraph {
public:
    const Skeleton& skeleton() const { return skeleton_; }
    const SquareTable& squares() const { return squares_; }

    int k() const { return skeleton_.k(); }
    const std::set<std::string>& vertices() const { return skeleton_.vertices(); }
    const std::map<std::string, Edge>& edges() const { return skeleton_.edges(); }
    const Edge& edge(const std::string& id) const { return skeleton_.edge(id); }

private:
    KGraph(Skeleton sk, SquareTable sq) : skeleton_(std::move(sk)), squares_(std::move(sq)) {}

    friend BuildOutcome build_kgraph(Skeleton skeleton, SquareTable squares);

    Skeleton skeleton_;
    SquareTable squares_;
};

struct BuildOutcome {
    std::optional<KGraph> kgraph;  // engaged iff report.ok
    ValidationReport report;

    bool ok() const { return kgraph.has_value(); }
};

/// Checks (KG2) totality, involution, (r,s,d)-preservation, and the (KG3)
/// route agreement for three pairwise-distinct colors. (KG1) holds
/// structurally because edges are identified by id, and the relation is the
/// one generated by the table, so (KG0) holds by construction.
inline ValidationReport validate_kgraph(const Skeleton& sk, const SquareTable& table) {
    ValidationReport report;

    // Per-entry shape, preservation, involution.
    for (const auto& [key, image] : table.entries()) {
        std::vector<std::string> key_path{key.first, key.second};
        std::vector<std::string> image_path{image.first, image.second};
        if (!detail::composable(sk, key_path) || sk.color(key.first) == sk.color(key.second)) {
            report.add(ViolationKind::DanglingEdge, {key_path},
                       "table key is not a composable mixed-color 2-path");
            continue;
        }
        if (!detail::composable(sk, image_path)) {
            report.add(ViolationKind::DanglingEdge, {key_path, image_path},
                       "table image is not a composable 2-path");
            continue;
        }
        if (sk.color(image.first) != sk.color(key.second) ||
            sk.color(image.second) != sk.color(key.first) ||
            sk.source(image.first) != sk.source(key.first) ||
            sk.range(image.second) != sk.range(key.second)) {
            report.add(ViolationKind::SourceRangeMismatch, {key_path, image_path},
                       "image must keep source and range and transpose the colors");
            continue;
        }
        auto back = table.image(image);
        if (!back || *back != key) {
            report.add(ViolationKind::NonInvolutiveSquare, {key_path, image_path},
                       "applying the table twice must return the original 2-path");
        }
    }

    // (KG2) totality over the skeleton.
    detail::for_each_mixed_two_path(sk, [&](const std::string& a, const std::string& b) {
        if (!table.contains({a, b})) {
            report.add(ViolationKind::MissingSquare, {{a, b}},
                       "composable mixed-color 2-path has no square entry");
        }
    });

    // (KG3) over composable 3-paths with pairwise-distinct colors; vacuous
    // for k <= 2.
    if (sk.k() >= 3) {
        for (const auto& [id1, e1] : sk.edges()) {
            for (const auto& id2 : sk.out_of(e1.range)) {
                if (sk.color(id2) == e1.color) {
                    continue;
                }
                for (const auto& id3 : sk.out_of(sk.range(id2))) {
                    int c3 = sk.color(id3);
                    if (c3 == e1.color || c3 == sk.color(id2)) {
                        continue;
                    }
                    std::vector<std::string> path{id1, id2, id3};
                    auto route = [&](std::initializer_list<std::size_t> swaps)
                        -> std::optional<std::vector<std::string>> {
                        std::vector<std::string> cur = path;
                        for (std::size_t i : swaps) {
                            auto next = detail::try_swap(sk, table, cur, i);
                            if (!next) {
                                return std::nullopt;
                            }
                            cur = std::move(*next);
                        }
                        return cur;
                    };
                    auto r1 = route({1, 0, 1});
                    auto r2 = route({0, 1, 0});
                    if (!r1 || !r2) {
                        continue;  // missing entries already reported above
                    }
                    if (*r1 != *r2) {
                        report.add(ViolationKind::CubeMismatch, {path, *r1, *r2},
                                   "the two transposition routes disagree");
                    }
                }
            }
        }
    }

    return report;
}

inline BuildOutcome build_kgraph(Skeleton skeleton, SquareTable squares) {
    BuildOutcome out;
    out.report = validate_kgraph(skeleton, squares);
    if (out.report.ok) {
        out.kgraph = KGraph(std::move(skeleton), std::move(squares));
    }
    return out;
}

}  // namespace kgf
