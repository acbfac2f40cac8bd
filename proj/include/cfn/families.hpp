#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cfn/graph.hpp"

namespace cfn {

/// Petersen graph: outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
inline Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, std::move(e));
}

/// Flower snark J_t, t odd >= 5, on 4t vertices. Vertex layout per block
/// i: hub 4i, outer 4i+1, inner pair 4i+2 / 4i+3. The outer vertices form
/// a t-cycle and the inner pairs a single twisted 2t-cycle.
inline Graph flower(int t) {
    if (t < 5 || t % 2 == 0)
        throw std::invalid_argument("flower: parameter must be odd and >= 5");
    std::vector<std::pair<int, int>> e;
    auto hub = [](int i) { return 4 * i; };
    auto outer = [](int i) { return 4 * i + 1; };
    auto in_a = [](int i) { return 4 * i + 2; };
    auto in_b = [](int i) { return 4 * i + 3; };
    for (int i = 0; i < t; ++i) {
        e.emplace_back(hub(i), outer(i));
        e.emplace_back(hub(i), in_a(i));
        e.emplace_back(hub(i), in_b(i));
        e.emplace_back(outer(i), outer((i + 1) % t));
        if (i + 1 < t) {
            e.emplace_back(in_a(i), in_a(i + 1));
            e.emplace_back(in_b(i), in_b(i + 1));
        }
    }
    // The twist closing the two inner paths into one 2t-cycle.
    e.emplace_back(in_a(t - 1), in_b(0));
    e.emplace_back(in_b(t - 1), in_a(0));
    return Graph(4 * t, std::move(e));
}

/// Gluing data for a dot product: remove independent edges ab, cd from the
/// left graph, remove adjacent vertices x, y from the right graph, then
/// link a-u, b-v, c-w, d-z where u, v are the other neighbors of x and
/// w, z the other neighbors of y.
struct DotProductSpec {
    Graph left;
    std::pair<int, int> ab;
    std::pair<int, int> cd;
    Graph right;
    int x = -1;
    int y = -1;
    // Other neighbors of x and of y, in linking order.
    std::pair<int, int> uv;
    std::pair<int, int> wz;
};

/// Dot product of two cubic graphs. Left vertices keep their ids; right
/// vertices (minus x, y) follow, compacted in increasing original id.
inline Graph dot_product(const DotProductSpec& spec) {
    const Graph& G = spec.left;
    const Graph& H = spec.right;
    auto [a, b] = spec.ab;
    auto [c, d] = spec.cd;
    if (!G.is_cubic() || !H.is_cubic())
        throw std::invalid_argument("dot_product: both graphs must be cubic");
    if (G.n() < 6 || H.n() < 6)
        throw std::invalid_argument("dot_product: both graphs must have >= 6 vertices");
    if (!G.has_edge(a, b) || !G.has_edge(c, d))
        throw std::invalid_argument("dot_product: ab, cd must be edges of the left graph");
    if (a == c || a == d || b == c || b == d)
        throw std::invalid_argument("dot_product: ab and cd must be independent");
    if (!H.has_edge(spec.x, spec.y))
        throw std::invalid_argument("dot_product: x, y must be adjacent in the right graph");
    auto [u, v] = spec.uv;
    auto [w, z] = spec.wz;
    auto other_neighbors = [&](int center, int excluded) {
        std::vector<int> r;
        for (int t : H.neighbors(center))
            if (t != excluded) r.push_back(t);
        return r;
    };
    auto un = other_neighbors(spec.x, spec.y);
    auto wn = other_neighbors(spec.y, spec.x);
    if (!((un[0] == u && un[1] == v) || (un[0] == v && un[1] == u)))
        throw std::invalid_argument("dot_product: uv must be the other neighbors of x");
    if (!((wn[0] == w && wn[1] == z) || (wn[0] == z && wn[1] == w)))
        throw std::invalid_argument("dot_product: wz must be the other neighbors of y");
    if (u == v || w == z || u == w || u == z || v == w || v == z)
        throw std::invalid_argument("dot_product: u, v, w, z must be distinct");

    // Compact right-graph ids, skipping x and y.
    std::vector<int> map(static_cast<std::size_t>(H.n()), -1);
    int next = G.n();
    for (int t = 0; t < H.n(); ++t)
        if (t != spec.x && t != spec.y) map[static_cast<std::size_t>(t)] = next++;

    std::vector<std::pair<int, int>> e;
    for (auto [p, q] : G.edges()) {
        bool removed = (ordered_pair(p, q) == ordered_pair(a, b)) ||
                       (ordered_pair(p, q) == ordered_pair(c, d));
        if (!removed) e.emplace_back(p, q);
    }
    for (auto [p, q] : H.edges()) {
        if (p == spec.x || p == spec.y || q == spec.x || q == spec.y) continue;
        e.emplace_back(map[static_cast<std::size_t>(p)], map[static_cast<std::size_t>(q)]);
    }
    e.emplace_back(a, map[static_cast<std::size_t>(u)]);
    e.emplace_back(b, map[static_cast<std::size_t>(v)]);
    e.emplace_back(c, map[static_cast<std::size_t>(w)]);
    e.emplace_back(d, map[static_cast<std::size_t>(z)]);
    return Graph(G.n() + H.n() - 2, std::move(e));
}

}  // namespace cfn
