#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cfn {

/// Positional id of an edge in a Graph's edge list.
using EdgeId = int;

inline std::pair<int, int> ordered_pair(int u, int v) {
    return u < v ? std::pair<int, int>{u, v} : std::pair<int, int>{v, u};
}

/// Immutable simple undirected graph. Vertices are 0..n-1; the edge list
/// order is fixed at construction, so edge ids are stable and reproducible.
/// Loops and parallel edges are rejected.
class Graph {
public:
    Graph() : n_(0) {}

    Graph(int n, std::vector<std::pair<int, int>> edge_pairs) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        adj_.resize(static_cast<std::size_t>(n));
        std::set<std::pair<int, int>> seen;
        edges_.reserve(edge_pairs.size());
        for (auto [u, v] : edge_pairs) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("Graph: endpoint out of range");
            if (u == v) throw std::invalid_argument("Graph: loop rejected");
            auto key = ordered_pair(u, v);
            if (!seen.insert(key).second)
                throw std::invalid_argument("Graph: parallel edge rejected");
            edges_.push_back(key);
            adj_[static_cast<std::size_t>(key.first)].push_back(key.second);
            adj_[static_cast<std::size_t>(key.second)].push_back(key.first);
        }
    }

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::pair<int, int>& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }
    int min_degree() const {
        if (n_ == 0) return 0;
        int d = degree(0);
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    bool is_cubic() const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != 3) return false;
        return n_ > 0;
    }

    bool has_edge(int u, int v) const {
        const auto& a = neighbors(u);
        return std::find(a.begin(), a.end(), v) != a.end();
    }

    /// Edge id of uv, or -1.
    EdgeId edge_id(int u, int v) const {
        auto key = ordered_pair(u, v);
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i] == key) return static_cast<EdgeId>(i);
        return -1;
    }

    /// Same labeled graph: equal vertex count and edge set (edge-list
    /// order is irrelevant to identity).
    bool operator==(const Graph& o) const {
        if (n_ != o.n_ || edges_.size() != o.edges_.size()) return false;
        auto a = edges_, b = o.edges_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Adjacency-mask view of a graph on at most 64 vertices. The search
/// kernels (bisections, connected subsets, ratio scans) run on this.
struct MaskGraph {
    int n = 0;
    std::vector<std::uint64_t> nbr;  // nbr[v] = bitmask of neighbors of v

    static constexpr int max_vertices = 64;

    explicit MaskGraph(const Graph& g) : n(g.n()), nbr(static_cast<std::size_t>(g.n()), 0) {
        if (g.n() > max_vertices)
            throw std::invalid_argument("MaskGraph: more than 64 vertices");
        for (auto [u, v] : g.edges()) {
            nbr[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
            nbr[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        }
    }

    std::uint64_t full_mask() const {
        return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }
};

inline std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        int v = __builtin_ctzll(mask);
        out.push_back(v);
        mask &= mask - 1;
    }
    return out;
}

inline std::uint64_t vertices_to_mask(const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= std::uint64_t{1} << v;
    return m;
}

}  // namespace cfn
