#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kgf/kgraph.hpp"

namespace kgf {

/// (vertex, color) pairs that emit no edge of that color.
struct SinkReport {
    std::vector<std::pair<std::string, int>> entries;

    bool sink_free() const { return entries.empty(); }
    bool is_sink(const std::string& vertex) const {
        for (const auto& [v, c] : entries) {
            if (v == vertex) {
                return true;
            }
        }
        return false;
    }
};

/// (vertex, color) pairs that receive no edge of that color.
struct SourceReport {
    std::vector<std::pair<std::string, int>> entries;
};

inline SinkReport sinks(const KGraph& kg) {
    const Skeleton& sk = kg.skeleton();
    SinkReport report;
    for (const auto& v : sk.vertices()) {
        for (int c = 1; c <= sk.k(); ++c) {
            bool emits = false;
            for (const auto& id : sk.out_of(v)) {
                if (sk.color(id) == c) {
                    emits = true;
                    break;
                }
            }
            if (!emits) {
                report.entries.emplace_back(v, c);
            }
        }
    }
    return report;
}

inline SourceReport sources(const KGraph& kg) {
    const Skeleton& sk = kg.skeleton();
    SourceReport report;
    for (const auto& v : sk.vertices()) {
        for (int c = 1; c <= sk.k(); ++c) {
            bool receives = false;
            for (const auto& id : sk.into(v)) {
                if (sk.color(id) == c) {
                    receives = true;
                    break;
                }
            }
            if (!receives) {
                report.entries.emplace_back(v, c);
            }
        }
    }
    return report;
}

inline bool is_source_free(const KGraph& kg) { return sources(kg).entries.empty(); }

/// Finite presentations receive finitely many edges everywhere; exposed for
/// interface completeness.
inline bool row_finite(const KGraph&) { return true; }

/// counts[u][x] = number of color-c edges with range u and source x, indexed
/// by vertex_order (vertex ids, sorted).
struct AdjacencyMatrix {
    int color = 0;
    std::vector<std::string> vertex_order;
    std::vector<std::vector<long>> counts;
};

inline AdjacencyMatrix adjacency_matrix(const KGraph& kg, int color) {
    const Skeleton& sk = kg.skeleton();
    if (color < 1 || color > sk.k()) {
        throw std::invalid_argument("adjacency_matrix: color out of range");
    }
    AdjacencyMatrix m;
    m.color = color;
    m.vertex_order.assign(sk.vertices().begin(), sk.vertices().end());
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < m.vertex_order.size(); ++i) {
        index[m.vertex_order[i]] = i;
    }
    m.counts.assign(m.vertex_order.size(), std::vector<long>(m.vertex_order.size(), 0));
    for (const auto& [id, e] : sk.edges()) {
        if (e.color == color) {
            ++m.counts[index[e.range]][index[e.source]];
        }
    }
    return m;
}

struct CommutationCheck {
    bool ok = true;
    int color_i = 0;
    int color_j = 0;
    std::string range_vertex;
    std::string source_vertex;
    long left = 0;   // (M_i M_j)[range][source]
    long right = 0;  // (M_j M_i)[range][source]
};

/// Verifies M_i M_j = M_j M_i for all color pairs; on a validated k-graph the
/// square table induces the bijection that forces this.
inline CommutationCheck matrices_commute(const KGraph& kg) {
    std::vector<AdjacencyMatrix> ms;
    for (int c = 1; c <= kg.k(); ++c) {
        ms.push_back(adjacency_matrix(kg, c));
    }
    CommutationCheck check;
    std::size_t n = kg.vertices().size();
    auto product_entry = [&](const AdjacencyMatrix& a, const AdjacencyMatrix& b,
                             std::size_t u, std::size_t x) {
        long total = 0;
        for (std::size_t z = 0; z < n; ++z) {
            total += a.counts[u][z] * b.counts[z][x];
        }
        return total;
    };
    for (int i = 0; i < kg.k(); ++i) {
        for (int j = i + 1; j < kg.k(); ++j) {
            for (std::size_t u = 0; u < n; ++u) {
                for (std::size_t x = 0; x < n; ++x) {
                    long left = product_entry(ms[static_cast<std::size_t>(i)],
                                              ms[static_cast<std::size_t>(j)], u, x);
                    long right = product_entry(ms[static_cast<std::size_t>(j)],
                                               ms[static_cast<std::size_t>(i)], u, x);
                    if (left != right) {
                        check.ok = false;
                        check.color_i = i + 1;
                        check.color_j = j + 1;
                        check.range_vertex = ms[0].vertex_order[u];
                        check.source_vertex = ms[0].vertex_order[x];
                        check.left = left;
                        check.right = right;
                        return check;
                    }
                }
            }
        }
    }
    return check;
}

/// Smallest vertex set containing X that is hereditary (sources of edges into
/// a member join) and saturated with n ranging over the color generators: if
/// every color-i edge into v starts inside the set, v joins.
inline std::set<std::string> saturation(const KGraph& kg, const std::set<std::string>& seed) {
    const Skeleton& sk = kg.skeleton();
    for (const auto& v : seed) {
        if (!sk.has_vertex(v)) {
            throw std::invalid_argument("saturation: unknown vertex '" + v + "'");
        }
    }
    std::set<std::string> s = seed;
    bool changed = true;
    while (changed) {
        changed = false;
        // Heredity: v in S and r(e) = v implies s(e) in S.
        for (const auto& v : std::vector<std::string>(s.begin(), s.end())) {
            for (const auto& id : sk.into(v)) {
                changed |= s.insert(sk.source(id)).second;
            }
        }
        // Saturation at generator degrees.
        for (const auto& v : sk.vertices()) {
            if (s.count(v)) {
                continue;
            }
            for (int c = 1; c <= sk.k(); ++c) {
                bool all_inside = true;
                for (const auto& id : sk.into(v)) {
                    if (sk.color(id) == c && !s.count(sk.source(id))) {
                        all_inside = false;
                        break;
                    }
                }
                if (all_inside) {
                    s.insert(v);
                    changed = true;
                    break;
                }
            }
        }
    }
    return s;
}

/// Edge weighting in Z^k; total on the edge set.
using EdgeWeighting = std::map<std::string, std::vector<long>>;

/// The degree map itself, R = d.
inline EdgeWeighting degree_weighting(const KGraph& kg) {
    EdgeWeighting r;
    for (const auto& [id, e] : kg.edges()) {
        std::vector<long> v(static_cast<std::size_t>(kg.k()), 0);
        v[static_cast<std::size_t>(e.color - 1)] = 1;
        r[id] = v;
    }
    return r;
}

struct DegreeFunctorCheck {
    bool ok = true;
    SquareTable::Pair key;
    SquareTable::Pair image;
};

/// True iff R(a)+R(b) = R(c)+R(d) on every square (a,b) ~ (c,d); the relation
/// is generated by the squares, so this makes the additive extension of R
/// constant on equivalence classes.
inline DegreeFunctorCheck check_degree_functor(const KGraph& kg, const EdgeWeighting& weighting) {
    auto lookup = [&](const std::string& id) -> const std::vector<long>& {
        auto it = weighting.find(id);
        if (it == weighting.end()) {
            throw std::invalid_argument("check_degree_functor: weighting misses edge '" + id + "'");
        }
        if (it->second.size() != static_cast<std::size_t>(kg.k())) {
            throw std::invalid_argument("check_degree_functor: weighting for '" + id +
                                        "' has wrong arity");
        }
        return it->second;
    };
    for (const auto& entry : kg.edges()) {
        lookup(entry.first);
    }
    DegreeFunctorCheck check;
    for (const auto& [key, image] : kg.squares().entries()) {
        const auto& ra = lookup(key.first);
        const auto& rb = lookup(key.second);
        const auto& rc = lookup(image.first);
        const auto& rd = lookup(image.second);
        for (std::size_t i = 0; i < ra.size(); ++i) {
            if (ra[i] + rb[i] != rc[i] + rd[i]) {
                check.ok = false;
                check.key = key;
                check.image = image;
                return check;
            }
        }
    }
    return check;
}

}  // namespace kgf
