#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace kgf {

// Degrees live in N^k; a path's degree counts its edges per color.
using DegreeVector = std::vector<long>;

// Colors are 1-based: an edge of color i contributes the i-th standard basis
// vector to the degree of any path through it.
struct Edge {
    std::string id;
    int color = 0;
    std::string source;
    std::string range;
};

// Ids are restricted to [A-Za-z0-9_.'^-]+ so every skeleton is serializable.
inline bool valid_id(const std::string& id) {
    if (id.empty()) {
        return false;
    }
    for (char c : id) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                  (c >= '0' && c <= '9') || c == '_' || c == '.' ||
                  c == '\'' || c == '^' || c == '-';
        if (!ok) {
            return false;
        }
    }
    return true;
}

/// Finite k-colored directed multigraph. Construction enforces well-formedness
/// (unique ids, declared endpoints, colors in 1..k); malformed input faults.
class Skeleton {
public:
    explicit Skeleton(int k) : k_(k) {
        if (k < 1) {
            throw std::invalid_argument("skeleton: k must be >= 1");
        }
    }

    int k() const { return k_; }

    void add_vertex(const std::string& id) {
        if (!valid_id(id)) {
            throw std::invalid_argument("skeleton: invalid vertex id '" + id + "'");
        }
        if (vertices_.count(id)) {
            throw std::invalid_argument("skeleton: duplicate vertex id '" + id + "'");
        }
        vertices_.insert(id);
    }

    void add_edge(const std::string& id, int color, const std::string& source,
                  const std::string& range) {
        if (!valid_id(id)) {
            throw std::invalid_argument("skeleton: invalid edge id '" + id + "'");
        }
        if (edges_.count(id)) {
            throw std::invalid_argument("skeleton: duplicate edge id '" + id + "'");
        }
        if (color < 1 || color > k_) {
            throw std::invalid_argument("skeleton: edge '" + id + "' color out of range");
        }
        if (!vertices_.count(source)) {
            throw std::invalid_argument("skeleton: edge '" + id + "' has undeclared source '" + source + "'");
        }
        if (!vertices_.count(range)) {
            throw std::invalid_argument("skeleton: edge '" + id + "' has undeclared range '" + range + "'");
        }
        edges_.emplace(id, Edge{id, color, source, range});
        insert_sorted(out_[source], id);
        insert_sorted(in_[range], id);
    }

    bool has_vertex(const std::string& id) const { return vertices_.count(id) != 0; }
    bool has_edge(const std::string& id) const { return edges_.count(id) != 0; }

    const Edge& edge(const std::string& id) const {
        auto it = edges_.find(id);
        if (it == edges_.end()) {
            throw std::invalid_argument("skeleton: unknown edge '" + id + "'");
        }
        return it->second;
    }

    int color(const std::string& edge_id) const { return edge(edge_id).color; }
    const std::string& source(const std::string& edge_id) const { return edge(edge_id).source; }
    const std::string& range(const std::string& edge_id) const { return edge(edge_id).range; }

    const std::set<std::string>& vertices() const { return vertices_; }
    const std::map<std::string, Edge>& edges() const { return edges_; }

    // Edge ids with the given source / range, sorted.
    const std::vector<std::string>& out_of(const std::string& vertex) const {
        auto it = out_.find(vertex);
        return it == out_.end() ? empty_ : it->second;
    }
    const std::vector<std::string>& into(const std::string& vertex) const {
        auto it = in_.find(vertex);
        return it == in_.end() ? empty_ : it->second;
    }

    std::size_t edge_count(int color) const {
        std::size_t n = 0;
        for (const auto& [id, e] : edges_) {
            if (e.color == color) {
                ++n;
            }
        }
        return n;
    }

    DegreeVector zero_degree() const { return DegreeVector(static_cast<std::size_t>(k_), 0); }

private:
    static void insert_sorted(std::vector<std::string>& v, const std::string& id) {
        v.insert(std::upper_bound(v.begin(), v.end(), id), id);
    }

    int k_;
    std::set<std::string> vertices_;
    std::map<std::string, Edge> edges_;
    std::map<std::string, std::vector<std::string>> out_;
    std::map<std::string, std::vector<std::string>> in_;
    inline static const std::vector<std::string> empty_{};
};

}  // namespace kgf
