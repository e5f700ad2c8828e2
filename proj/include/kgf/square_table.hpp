#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace kgf {

/// Factorization table. Keys and images are two-edge paths written in
/// traversal order (first edge first); a well-formed table maps every
/// composable mixed-color 2-path to the unique equivalent path with the
/// transposed color order. Totality, involution and (r,s,d)-preservation are
/// checked by build_kgraph, not enforced by the container.
class SquareTable {
public:
    using Pair = std::pair<std::string, std::string>;

    /// Records key -> image together with image -> key. Returns false (and
    /// changes nothing) when either direction already maps elsewhere.
    bool insert(const Pair& key, const Pair& image) {
        auto k = entries_.find(key);
        if (k != entries_.end() && k->second != image) {
            return false;
        }
        auto i = entries_.find(image);
        if (i != entries_.end() && i->second != key) {
            return false;
        }
        entries_[key] = image;
        entries_[image] = key;
        return true;
    }

    /// Sets a single direction, overwriting. Bypasses the involution pairing;
    /// intended for tests that build deliberately broken tables.
    void set(const Pair& key, const Pair& image) { entries_[key] = image; }

    std::optional<Pair> image(const Pair& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    bool contains(const Pair& key) const { return entries_.count(key) != 0; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const std::map<Pair, Pair>& entries() const { return entries_; }

private:
    std::map<Pair, Pair> entries_;
};

}  // namespace kgf
