#pragma once

// The graph G_phi(A): vertices are the closure of a seed set under phi,
// edges join each vertex to its totient. Always a tree rooted at 1.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "phigraph/totient.hpp"
#include "phigraph/tree.hpp"

namespace phigraph {

// Parameters that pass the precondition check but admit no valid output.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SeedSet {
    std::vector<u64> elements;  // ascending, duplicate-free, all >= 1

    static SeedSet from(std::vector<u64> xs) {
        if (xs.empty()) throw std::invalid_argument("seed set: must be nonempty");
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        if (xs.front() == 0) throw std::invalid_argument("seed set: elements must be positive");
        SeedSet s;
        s.elements = std::move(xs);
        return s;
    }
};

// A_phi: the seed together with every totient iterate of its members.
// Contains 1 (every chain ends there) and the seed itself (k = 0).
inline std::vector<u64> closure(const SeedSet& seed) {
    std::unordered_set<u64> seen;
    for (u64 a : seed.elements) {
        u64 v = a;
        while (seen.insert(v).second && v != 1) v = totient(v);
    }
    std::vector<u64> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

class PhiGraph {
public:
    static PhiGraph build(const SeedSet& seed) {
        PhiGraph g;
        g.verts_ = closure(seed);
        g.seed_ = seed.elements;
        std::size_t n = g.verts_.size();
        g.parent_.assign(n, 0);
        g.children_.assign(n, {});
        for (std::size_t i = 0; i < n; ++i) {
            u64 v = g.verts_[i];
            if (v == 1) continue;  // phi(1) = 1 would be a self-loop, suppressed
            std::size_t p = g.index_of(totient(v));
            g.parent_[i] = p;
            g.children_[p].push_back(i);
        }
        return g;
    }

    const std::vector<u64>& vertices() const { return verts_; }
    const std::vector<u64>& seed() const { return seed_; }
    std::size_t order() const { return verts_.size(); }
    std::size_t edge_count() const { return verts_.size() - 1; }

    bool contains(u64 v) const {
        auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
        return it != verts_.end() && *it == v;
    }

    u64 parent_of(u64 v) const {
        std::size_t i = checked_index(v);
        if (v == 1) throw std::out_of_range("vertex 1 is the root and has no parent");
        return verts_[parent_[i]];
    }

    std::vector<u64> children_of(u64 v) const {
        std::size_t i = checked_index(v);
        std::vector<u64> out;
        out.reserve(children_[i].size());
        for (std::size_t c : children_[i]) out.push_back(verts_[c]);
        return out;
    }

    std::size_t degree(u64 v) const {
        std::size_t i = checked_index(v);
        return children_[i].size() + (v == 1 ? 0 : 1);
    }

    // (child, parent) pairs, ascending by child.
    std::vector<std::pair<u64, u64>> edges() const {
        std::vector<std::pair<u64, u64>> out;
        out.reserve(verts_.size() - 1);
        for (std::size_t i = 0; i < verts_.size(); ++i)
            if (verts_[i] != 1) out.emplace_back(verts_[i], verts_[parent_[i]]);
        return out;
    }

private:
    std::vector<u64> verts_;  // ascending; verts_[0] == 1 always
    std::vector<u64> seed_;
    std::vector<std::size_t> parent_;                 // index of phi(v), unused at 1
    std::vector<std::vector<std::size_t>> children_;  // ascending indices

    std::size_t index_of(u64 v) const {
        return static_cast<std::size_t>(
            std::lower_bound(verts_.begin(), verts_.end(), v) - verts_.begin());
    }

    std::size_t checked_index(u64 v) const {
        std::size_t i = index_of(v);
        if (i == verts_.size() || verts_[i] != v)
            throw std::out_of_range("vertex not in graph");
        return i;
    }
};

inline PhiGraph build(const SeedSet& seed) { return PhiGraph::build(seed); }

// Always true by construction (every vertex walks down to 1); checked
// for real (connectivity plus edge count) so construction bugs surface.
inline bool is_tree(const PhiGraph& g) {
    std::size_t n = g.order();
    if (g.edge_count() != n - 1) return false;
    std::unordered_set<u64> seen{1};
    std::vector<u64> stack{1};
    while (!stack.empty()) {
        u64 v = stack.back();
        stack.pop_back();
        for (u64 c : g.children_of(v))
            if (seen.insert(c).second) stack.push_back(c);
    }
    return seen.size() == n;
}

// Distance from v to the root 1. Equals the iteration length R(v).
inline u64 depth(const PhiGraph& g, u64 v) {
    if (!g.contains(v)) throw std::out_of_range("depth: vertex not in graph");
    u64 d = 0;
    while (v != 1) {
        v = g.parent_of(v);
        ++d;
    }
    return d;
}

inline std::vector<u64> leaves(const PhiGraph& g) {
    if (g.order() < 2)
        throw std::domain_error("leaves: single-vertex graph has no degree-1 vertices");
    std::vector<u64> out;
    for (u64 v : g.vertices())
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

// The unique smallest seed generating g: every vertex without a
// phi-preimage inside the graph must be seeded, and those alone
// already reach everything else.
inline SeedSet minimal_seed(const PhiGraph& g) {
    std::vector<u64> out;
    for (u64 v : g.vertices())
        if (g.children_of(v).empty()) out.push_back(v);
    if (out.empty()) out.push_back(1);  // single-vertex graph
    return SeedSet::from(std::move(out));
}

// Vertices ascending map to ids 0..order-1.
inline UnlabeledTree shape_of(const PhiGraph& g) {
    const auto& vs = g.vertices();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(g.edge_count());
    auto id = [&](u64 v) {
        return static_cast<std::size_t>(
            std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    for (auto [c, p] : g.edges()) edges.emplace_back(id(c), id(p));
    return UnlabeledTree::from_edges(vs.size(), std::move(edges));
}

namespace detail {

inline u64 next_odd_prime(u64 after) {
    u64 p = after < 3 ? 3 : after + 2;
    while (!is_prime(p)) p += 2;
    return p;
}

} // namespace detail

// A seed B with |B| = n whose graph has exactly t degree-1 vertices.
// Construction: t-1 odd primes plus 1, padded to size n with members of
// the primes' own totient chains (those do not alter the closure). The
// graph's leaves are then 1 and the primes themselves. Primes are taken
// smallest-first and escalated when the chains are too short to pad from.
inline SeedSet construct_seed_with_leaves(u64 n, u64 t) {
    if (n < 1) throw std::invalid_argument("construct_seed_with_leaves: n must be positive");
    if (t < 1 || t > n + 1)
        throw std::invalid_argument("construct_seed_with_leaves: t must be in [1, n+1]");
    if (t == 1)
        throw InfeasibleError("construct_seed_with_leaves: every totient graph on 2 or more "
                              "vertices has at least two degree-1 vertices");
    if (n == 1) return SeedSet::from({2});  // t == 2, the path on {1, 2}
    if (t == n + 1) {
        std::vector<u64> primes;
        u64 p = 1;
        while (primes.size() < n) primes.push_back(p = detail::next_odd_prime(p));
        return SeedSet::from(std::move(primes));
    }
    std::vector<u64> primes;
    u64 p = 1;
    while (primes.size() < t - 1) primes.push_back(p = detail::next_odd_prime(p));
    for (int attempt = 0; attempt < 5000; ++attempt) {
        std::vector<u64> pool;
        for (u64 v : closure(SeedSet::from(primes)))
            if (v != 1 && !std::binary_search(primes.begin(), primes.end(), v))
                pool.push_back(v);
        if (pool.size() >= n - t) {
            std::vector<u64> b{1};
            b.insert(b.end(), primes.begin(), primes.end());
            b.insert(b.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n - t));
            SeedSet seed = SeedSet::from(std::move(b));
            if (leaves(PhiGraph::build(seed)).size() == t) return seed;
        }
        primes.back() = detail::next_odd_prime(primes.back());
    }
    throw InfeasibleError("construct_seed_with_leaves: no valid seed found");
}

} // namespace phigraph
