#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgf/kgraph.hpp"

namespace kgf {

/// Composable edge sequence in traversal order: the first edge leaves the
/// path's source, the last one lands on its range. (The mathematical
/// convention of composing right-to-left is a notation choice; everything
/// here, including the text format, stores paths source-first.)
struct Path {
    std::vector<std::string> edges;
    std::vector<int> color_order;  // colors counted from the source
    DegreeVector degree;
    std::string source;
    std::string range;

    std::size_t length() const { return edges.size(); }

    bool operator==(const Path& other) const { return edges == other.edges; }
    bool operator<(const Path& other) const { return edges < other.edges; }
};

namespace detail {

inline Path finish_path(const Skeleton& sk, std::vector<std::string> edge_ids) {
    Path p;
    p.edges = std::move(edge_ids);
    p.color_order = color_order(sk, p.edges);
    p.degree = sk.zero_degree();
    for (int c : p.color_order) {
        ++p.degree[static_cast<std::size_t>(c - 1)];
    }
    p.source = sk.source(p.edges.front());
    p.range = sk.range(p.edges.back());
    return p;
}

}  // namespace detail

inline Path make_path(const KGraph& kg, std::vector<std::string> edge_ids) {
    const Skeleton& sk = kg.skeleton();
    if (edge_ids.empty()) {
        throw std::invalid_argument("path: must contain at least one edge");
    }
    if (!detail::composable(sk, edge_ids)) {
        throw std::invalid_argument("path: edges are not a composable sequence");
    }
    return detail::finish_path(sk, std::move(edge_ids));
}

/// Swaps the edges at positions i, i+1 (0-based) through the square table.
/// Source, range and degree are unchanged; the color order has the two
/// entries transposed.
inline Path swap_adjacent(const KGraph& kg, const Path& p, std::size_t i) {
    if (i + 1 >= p.edges.size()) {
        throw std::invalid_argument("swap_adjacent: position out of range");
    }
    if (p.color_order[i] == p.color_order[i + 1]) {
        throw std::invalid_argument("swap_adjacent: edges have equal colors");
    }
    auto swapped = detail::try_swap(kg.skeleton(), kg.squares(), p.edges, i);
    if (!swapped) {
        throw std::logic_error("swap_adjacent: square entry missing on a validated k-graph");
    }
    return detail::finish_path(kg.skeleton(), std::move(*swapped));
}

/// Returns the unique path equivalent to p with the requested color order,
/// realized by adjacent transpositions. On a validated k-graph the result does
/// not depend on the transposition schedule.
inline Path normalize(const KGraph& kg, const Path& p, const std::vector<int>& target_order) {
    std::vector<int> have = p.color_order;
    std::vector<int> want = target_order;
    std::sort(have.begin(), have.end());
    std::sort(want.begin(), want.end());
    if (have != want) {
        throw std::invalid_argument("normalize: target is not a permutation of the color order");
    }
    auto result = detail::try_normalize(kg.skeleton(), kg.squares(), p.edges, target_order);
    if (!result) {
        throw std::logic_error("normalize: square entry missing on a validated k-graph");
    }
    return detail::finish_path(kg.skeleton(), std::move(*result));
}

/// Canonical representative of [p]: the normalization to nondecreasing color
/// order. Used to key equivalence classes.
inline Path canonical_form(const KGraph& kg, const Path& p) {
    std::vector<int> target = p.color_order;
    std::sort(target.begin(), target.end());
    return normalize(kg, p, target);
}

/// The closure of {p} under applying adjacent swaps at every legal position of
/// every member. Independent of the table semantics, so it doubles as an
/// oracle for normalize.
inline std::vector<Path> equiv_class_bruteforce(const KGraph& kg, const Path& p) {
    auto cls = detail::closure(kg.skeleton(), kg.squares(), p.edges);
    std::vector<Path> out;
    out.reserve(cls.size());
    for (const auto& edges : cls) {
        out.push_back(detail::finish_path(kg.skeleton(), edges));
    }
    return out;
}

namespace detail {

template <typename Fn>
void for_each_path_of_length(const Skeleton& sk, std::size_t len, Fn&& fn) {
    std::vector<std::string> cur;
    auto rec = [&](auto&& self, const std::string& at) -> void {
        if (cur.size() == len) {
            fn(cur);
            return;
        }
        for (const auto& id : sk.out_of(at)) {
            cur.push_back(id);
            self(self, sk.range(id));
            cur.pop_back();
        }
    };
    for (const auto& [id, e] : sk.edges()) {
        cur.assign(1, id);
        if (len == 1) {
            fn(cur);
        } else {
            rec(rec, e.range);
        }
    }
}

}  // namespace detail

/// Brute-force (KG4) check: every path of length <= max_len must have exactly
/// one equivalent path per permutation of its color order. Works on
/// unvalidated presentations, so broken tables can be probed directly.
/// Missing color orders are reported as MissingSquare; duplicated ones as
/// NonInvolutiveSquare at length 2 and CubeMismatch beyond.
inline ValidationReport check_kg4(const Skeleton& sk, const SquareTable& table,
                                  std::size_t max_len) {
    if (max_len < 2) {
        throw std::invalid_argument("check_kg4: max_len must be >= 2");
    }
    ValidationReport report;
    std::set<std::vector<std::string>> covered;
    for (std::size_t len = 2; len <= max_len; ++len) {
        detail::for_each_path_of_length(sk, len, [&](const std::vector<std::string>& path) {
            if (covered.count(path)) {
                return;
            }
            auto cls = detail::closure(sk, table, path);
            std::map<std::vector<int>, std::vector<std::vector<std::string>>> by_order;
            for (const auto& member : cls) {
                covered.insert(member);
                by_order[detail::color_order(sk, member)].push_back(member);
            }
            std::vector<int> perm = detail::color_order(sk, path);
            std::sort(perm.begin(), perm.end());
            do {
                auto it = by_order.find(perm);
                std::size_t count = it == by_order.end() ? 0 : it->second.size();
                if (count == 1) {
                    continue;
                }
                std::string order_text;
                for (int c : perm) {
                    order_text += (order_text.empty() ? "" : ",") + std::to_string(c);
                }
                if (count == 0) {
                    report.add(ViolationKind::MissingSquare, {path},
                               "class has no member of color order (" + order_text + ")");
                } else {
                    std::vector<std::vector<std::string>> witness{path};
                    witness.insert(witness.end(), it->second.begin(), it->second.end());
                    report.add(len == 2 ? ViolationKind::NonInvolutiveSquare
                                        : ViolationKind::CubeMismatch,
                               witness,
                               "class has " + std::to_string(count) +
                                   " members of color order (" + order_text + ")");
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        });
    }
    return report;
}

inline ValidationReport check_kg4(const KGraph& kg, std::size_t max_len = 3) {
    return check_kg4(kg.skeleton(), kg.squares(), max_len);
}

}  // namespace kgf
