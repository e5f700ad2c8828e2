#pragma once

// Hand-built presentations used across the test suites. Square tables are
// written in traversal order: insert({"e","a"},{"a","e"}) pairs the path
// (e then a) with (a then e).

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgf/kgf.hpp"

namespace fixtures {

inline kgf::KGraph must_build(kgf::Skeleton sk, kgf::SquareTable tb) {
    auto out = kgf::build_kgraph(std::move(sk), std::move(tb));
    if (!out.ok()) {
        throw std::runtime_error("fixture failed validation:\n" + kgf::to_text(out.report));
    }
    return std::move(*out.kgraph);
}

// One vertex, a/b of color 1, e/f of color 2; every pair commutes elementwise.
// No two-way in-split partition exists.
inline kgf::KGraph example_a() {
    kgf::Skeleton sk(2);
    sk.add_vertex("v");
    sk.add_edge("a", 1, "v", "v");
    sk.add_edge("b", 1, "v", "v");
    sk.add_edge("e", 2, "v", "v");
    sk.add_edge("f", 2, "v", "v");
    kgf::SquareTable tb;
    tb.insert({"e", "a"}, {"a", "e"});
    tb.insert({"f", "a"}, {"a", "f"});
    tb.insert({"e", "b"}, {"b", "e"});
    tb.insert({"f", "b"}, {"b", "f"});
    return must_build(std::move(sk), std::move(tb));
}

// Same skeleton with the crossed factorization; splits as {a,e} | {b,f}.
inline kgf::Skeleton example_b_skeleton() {
    kgf::Skeleton sk(2);
    sk.add_vertex("v");
    sk.add_edge("a", 1, "v", "v");
    sk.add_edge("b", 1, "v", "v");
    sk.add_edge("e", 2, "v", "v");
    sk.add_edge("f", 2, "v", "v");
    return sk;
}

inline kgf::SquareTable example_b_squares() {
    kgf::SquareTable tb;
    tb.insert({"e", "a"}, {"a", "e"});
    tb.insert({"f", "a"}, {"b", "e"});
    tb.insert({"e", "b"}, {"a", "f"});
    tb.insert({"f", "b"}, {"b", "f"});
    return tb;
}

inline kgf::KGraph example_b() {
    return must_build(example_b_skeleton(), example_b_squares());
}

// One vertex, four edges per color, two nested valid partitions.
inline kgf::KGraph example_c() {
    kgf::Skeleton sk(2);
    sk.add_vertex("v");
    for (const char* id : {"a", "b", "c", "d"}) {
        sk.add_edge(id, 1, "v", "v");
    }
    for (const char* id : {"e", "f", "g", "h"}) {
        sk.add_edge(id, 2, "v", "v");
    }
    kgf::SquareTable tb;
    tb.insert({"e", "a"}, {"a", "e"});
    tb.insert({"f", "a"}, {"b", "e"});
    tb.insert({"g", "a"}, {"c", "e"});
    tb.insert({"h", "a"}, {"d", "e"});
    tb.insert({"e", "b"}, {"a", "f"});
    tb.insert({"f", "b"}, {"b", "f"});
    tb.insert({"g", "b"}, {"c", "f"});
    tb.insert({"h", "b"}, {"d", "f"});
    tb.insert({"e", "c"}, {"a", "g"});
    tb.insert({"f", "c"}, {"b", "g"});
    tb.insert({"g", "c"}, {"c", "g"});
    tb.insert({"h", "c"}, {"d", "g"});
    tb.insert({"e", "d"}, {"d", "h"});
    tb.insert({"f", "d"}, {"c", "h"});
    tb.insert({"g", "d"}, {"b", "h"});
    tb.insert({"h", "d"}, {"a", "h"});
    return must_build(std::move(sk), std::move(tb));
}

// In-splitting at a vertex with loops: u carries loops e (color 1) and
// a (color 2), edges f/c run u -> v, and v carries loops g/b.
inline kgf::KGraph loops_at_split_vertex() {
    kgf::Skeleton sk(2);
    sk.add_vertex("u");
    sk.add_vertex("v");
    sk.add_edge("e", 1, "u", "u");
    sk.add_edge("a", 2, "u", "u");
    sk.add_edge("f", 1, "u", "v");
    sk.add_edge("c", 2, "u", "v");
    sk.add_edge("g", 1, "v", "v");
    sk.add_edge("b", 2, "v", "v");
    kgf::SquareTable tb;
    tb.insert({"e", "a"}, {"a", "e"});
    tb.insert({"e", "c"}, {"a", "f"});
    tb.insert({"c", "g"}, {"f", "b"});
    tb.insert({"g", "b"}, {"b", "g"});
    return must_build(std::move(sk), std::move(tb));
}

// Three-vertex chain with loops only at the head; the tail vertex v is a sink
// in both colors, and deleting it leaves a new sink at w.
inline kgf::KGraph chain3() {
    kgf::Skeleton sk(2);
    sk.add_vertex("u");
    sk.add_vertex("w");
    sk.add_vertex("v");
    sk.add_edge("r1", 1, "u", "u");
    sk.add_edge("b1", 2, "u", "u");
    sk.add_edge("r2", 1, "u", "w");
    sk.add_edge("b2", 2, "u", "w");
    sk.add_edge("r3", 1, "w", "v");
    sk.add_edge("b3", 2, "w", "v");
    kgf::SquareTable tb;
    tb.insert({"r1", "b1"}, {"b1", "r1"});
    tb.insert({"r1", "b2"}, {"b1", "r2"});
    tb.insert({"r2", "b3"}, {"b2", "r3"});
    return must_build(std::move(sk), std::move(tb));
}

// Two vertices joined by one edge of each color in each direction; reducing
// at v leaves a single vertex with one loop per color.
inline kgf::KGraph cycle_pair() {
    kgf::Skeleton sk(2);
    sk.add_vertex("v");
    sk.add_vertex("w");
    sk.add_edge("r1", 1, "w", "v");
    sk.add_edge("b1", 2, "w", "v");
    sk.add_edge("r2", 1, "v", "w");
    sk.add_edge("b2", 2, "v", "w");
    kgf::SquareTable tb;
    tb.insert({"r1", "b2"}, {"b1", "r2"});
    tb.insert({"r2", "b1"}, {"b2", "r1"});
    return must_build(std::move(sk), std::move(tb));
}

// Loops, a two-step chain, loops again; reducing at the middle vertex glues
// the chain into a single step.
inline kgf::KGraph loop_chain() {
    kgf::Skeleton sk(2);
    sk.add_vertex("u");
    sk.add_vertex("v");
    sk.add_vertex("w");
    sk.add_edge("r1", 1, "u", "u");
    sk.add_edge("b1", 2, "u", "u");
    sk.add_edge("r2", 1, "u", "v");
    sk.add_edge("b2", 2, "u", "v");
    sk.add_edge("r3", 1, "v", "w");
    sk.add_edge("b3", 2, "v", "w");
    sk.add_edge("r4", 1, "w", "w");
    sk.add_edge("b4", 2, "w", "w");
    kgf::SquareTable tb;
    tb.insert({"r1", "b1"}, {"b1", "r1"});
    tb.insert({"r1", "b2"}, {"b1", "r2"});
    tb.insert({"r2", "b3"}, {"b2", "r3"});
    tb.insert({"r3", "b4"}, {"b3", "r4"});
    tb.insert({"r4", "b4"}, {"b4", "r4"});
    return must_build(std::move(sk), std::move(tb));
}

inline kgf::Skeleton ladder_skeleton() {
    kgf::Skeleton sk(2);
    sk.add_vertex("v");
    sk.add_vertex("w");
    sk.add_edge("e1", 1, "v", "v");
    sk.add_edge("f1", 2, "v", "v");
    sk.add_edge("e2", 1, "v", "w");
    sk.add_edge("f2", 2, "v", "w");
    sk.add_edge("e3", 1, "w", "w");
    sk.add_edge("f3", 2, "w", "w");
    return sk;
}

// Factorization under which each {e_i, f_i} is a complete edge.
inline kgf::KGraph ladder_aligned() {
    kgf::SquareTable tb;
    tb.insert({"e1", "f1"}, {"f1", "e1"});
    tb.insert({"e1", "f2"}, {"f1", "e2"});
    tb.insert({"e2", "f3"}, {"f2", "e3"});
    tb.insert({"e3", "f3"}, {"f3", "e3"});
    return must_build(ladder_skeleton(), std::move(tb));
}

// Crossed factorization on the same skeleton; no complete edges exist.
inline kgf::KGraph ladder_crossed() {
    kgf::SquareTable tb;
    tb.insert({"e1", "f1"}, {"f1", "e1"});
    tb.insert({"e1", "f2"}, {"f2", "e3"});
    tb.insert({"e2", "f3"}, {"f1", "e2"});
    tb.insert({"e3", "f3"}, {"f3", "e3"});
    return must_build(ladder_skeleton(), std::move(tb));
}

// One vertex, one loop per color.
inline kgf::KGraph two_loop() {
    kgf::Skeleton sk(2);
    sk.add_vertex("v");
    sk.add_edge("r", 1, "v", "v");
    sk.add_edge("b", 2, "v", "v");
    kgf::SquareTable tb;
    tb.insert({"r", "b"}, {"b", "r"});
    return must_build(std::move(sk), std::move(tb));
}

inline kgf::KGraph single_loop_k1() {
    kgf::Skeleton sk(1);
    sk.add_vertex("v");
    sk.add_edge("l", 1, "v", "v");
    return must_build(std::move(sk), kgf::SquareTable{});
}

// Valid 2-graph with a source: one vertex, one red loop, no blue edges at all.
inline kgf::KGraph red_only_loop() {
    kgf::Skeleton sk(2);
    sk.add_vertex("v");
    sk.add_edge("r", 1, "v", "v");
    return must_build(std::move(sk), kgf::SquareTable{});
}

// Red-only forest used for sink-deletion edge cases: y -> x <- z with loops
// at x and z; every vertex is a color-2 sink.
inline kgf::KGraph red_only_fan() {
    kgf::Skeleton sk(2);
    sk.add_vertex("x");
    sk.add_vertex("y");
    sk.add_vertex("z");
    sk.add_edge("rx", 1, "x", "x");
    sk.add_edge("ry", 1, "y", "x");
    sk.add_edge("rz", 1, "z", "z");
    sk.add_edge("rzx", 1, "z", "x");
    return must_build(std::move(sk), kgf::SquareTable{});
}

// The two-vertex cycle with the w -> v edges doubled; the in-edges of v stop
// being a complete edge while the out-edges still are.
inline kgf::KGraph doubled_cycle() {
    kgf::Skeleton sk(2);
    sk.add_vertex("v");
    sk.add_vertex("w");
    sk.add_edge("r1", 1, "w", "v");
    sk.add_edge("b1", 2, "w", "v");
    sk.add_edge("r1x", 1, "w", "v");
    sk.add_edge("b1x", 2, "w", "v");
    sk.add_edge("r2", 1, "v", "w");
    sk.add_edge("b2", 2, "v", "w");
    kgf::SquareTable tb;
    tb.insert({"r1", "b2"}, {"b1", "r2"});
    tb.insert({"r1x", "b2"}, {"b1x", "r2"});
    tb.insert({"r2", "b1"}, {"b2", "r1"});
    tb.insert({"r2", "b1x"}, {"b2", "r1x"});
    return must_build(std::move(sk), std::move(tb));
}

// Unvalidated 3-colored presentation that satisfies the square-level checks
// but breaks associativity: color 2 acts on the color-1 loops by (a1 a2) and
// color 3 by (a2 a3), and those permutations do not commute.
inline std::pair<kgf::Skeleton, kgf::SquareTable> twisted_three_graph() {
    kgf::Skeleton sk(3);
    sk.add_vertex("v");
    sk.add_edge("a1", 1, "v", "v");
    sk.add_edge("a2", 1, "v", "v");
    sk.add_edge("a3", 1, "v", "v");
    sk.add_edge("b", 2, "v", "v");
    sk.add_edge("c", 3, "v", "v");
    kgf::SquareTable tb;
    tb.insert({"a1", "b"}, {"b", "a2"});
    tb.insert({"a2", "b"}, {"b", "a1"});
    tb.insert({"a3", "b"}, {"b", "a3"});
    tb.insert({"a1", "c"}, {"c", "a1"});
    tb.insert({"a2", "c"}, {"c", "a3"});
    tb.insert({"a3", "c"}, {"c", "a2"});
    tb.insert({"b", "c"}, {"c", "b"});
    return {std::move(sk), std::move(tb)};
}

// Cartesian product of k one-colored graphs. Component edges are given as
// (source, range) pairs over vertices 0..vertex_count-1; the product vertex
// set is the set of coordinate tuples.
struct ComponentGraph {
    int vertex_count = 1;
    std::vector<std::pair<int, int>> edges;
};

inline std::string tuple_id(const char* prefix, const std::vector<int>& coords) {
    std::string id = prefix;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        id += (i ? "." : "") + std::to_string(coords[i]);
    }
    return id;
}

inline kgf::KGraph product_kgraph(const std::vector<ComponentGraph>& components) {
    const int k = static_cast<int>(components.size());
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur(components.size(), 0);
    while (true) {
        tuples.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && ++cur[static_cast<std::size_t>(pos)] ==
                               components[static_cast<std::size_t>(pos)].vertex_count) {
            cur[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
    }

    auto edge_id = [&](int color, std::size_t m, const std::vector<int>& at) {
        return "c" + std::to_string(color) + "e" + std::to_string(m) + "v" + tuple_id("", at);
    };

    kgf::Skeleton sk(k);
    for (const auto& t : tuples) {
        sk.add_vertex(tuple_id("v", t));
    }
    for (int color = 1; color <= k; ++color) {
        const auto& comp = components[static_cast<std::size_t>(color - 1)];
        for (std::size_t m = 0; m < comp.edges.size(); ++m) {
            for (const auto& t : tuples) {
                if (t[static_cast<std::size_t>(color - 1)] != comp.edges[m].first) {
                    continue;
                }
                std::vector<int> to = t;
                to[static_cast<std::size_t>(color - 1)] = comp.edges[m].second;
                sk.add_edge(edge_id(color, m, t), color, tuple_id("v", t), tuple_id("v", to));
            }
        }
    }
    kgf::SquareTable tb;
    for (int ci = 1; ci <= k; ++ci) {
        for (int cj = ci + 1; cj <= k; ++cj) {
            const auto& gi = components[static_cast<std::size_t>(ci - 1)];
            const auto& gj = components[static_cast<std::size_t>(cj - 1)];
            for (std::size_t mi = 0; mi < gi.edges.size(); ++mi) {
                for (std::size_t mj = 0; mj < gj.edges.size(); ++mj) {
                    for (const auto& t : tuples) {
                        if (t[static_cast<std::size_t>(ci - 1)] != gi.edges[mi].first ||
                            t[static_cast<std::size_t>(cj - 1)] != gj.edges[mj].first) {
                            continue;
                        }
                        std::vector<int> after_i = t;
                        after_i[static_cast<std::size_t>(ci - 1)] = gi.edges[mi].second;
                        std::vector<int> after_j = t;
                        after_j[static_cast<std::size_t>(cj - 1)] = gj.edges[mj].second;
                        tb.insert({edge_id(ci, mi, t), edge_id(cj, mj, after_i)},
                                  {edge_id(cj, mj, t), edge_id(ci, mi, after_j)});
                    }
                }
            }
        }
    }
    return must_build(std::move(sk), std::move(tb));
}

inline fixtures::ComponentGraph loops(int count) {
    ComponentGraph g;
    g.vertex_count = 1;
    for (int i = 0; i < count; ++i) {
        g.edges.emplace_back(0, 0);
    }
    return g;
}

inline fixtures::ComponentGraph cycle(int length) {
    ComponentGraph g;
    g.vertex_count = length;
    for (int i = 0; i < length; ++i) {
        g.edges.emplace_back(i, (i + 1) % length);
    }
    return g;
}

// Product of single-vertex components with the given loop counts.
inline kgf::KGraph loops_product(const std::vector<int>& loop_counts) {
    std::vector<ComponentGraph> comps;
    for (int n : loop_counts) {
        comps.push_back(loops(n));
    }
    return product_kgraph(comps);
}

}  // namespace fixtures
