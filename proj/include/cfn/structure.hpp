#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "cfn/graph.hpp"

namespace cfn {

/// Structural flags of a graph; girth is empty for forests.
struct StructureReport {
    bool is_connected = false;
    bool is_bridgeless = false;
    std::optional<int> girth;
    bool is_bipartite = false;
    bool is_cubic = false;
};

inline std::vector<int> component_labels(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
    int label = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        stack.push_back(s);
        comp[static_cast<std::size_t>(s)] = label;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = label;
                    stack.push_back(w);
                }
        }
        ++label;
    }
    return comp;
}

inline bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    auto comp = component_labels(g);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

/// Cut edges in edge-id order (iterative lowpoint DFS).
inline std::vector<EdgeId> find_bridges(const Graph& g) {
    const int n = g.n();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<bool> bridge(static_cast<std::size_t>(g.edge_count()), false);
    int timer = 0;

    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int s = 0; s < n; ++s) {
        if (disc[static_cast<std::size_t>(s)] != -1) continue;
        disc[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = timer++;
        stack.push_back({s, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                EdgeId eid = g.edge_id(f.v, w);
                if (eid == f.parent_edge) continue;
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    stack.push_back({w, eid, 0});
                } else {
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                int v = f.v;
                int pe = f.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[static_cast<std::size_t>(p)] =
                        std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                    if (low[static_cast<std::size_t>(v)] > disc[static_cast<std::size_t>(p)])
                        bridge[static_cast<std::size_t>(pe)] = true;
                }
            }
        }
    }

    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (bridge[static_cast<std::size_t>(e)]) out.push_back(e);
    return out;
}

inline bool is_bridgeless(const Graph& g) { return find_bridges(g).empty(); }

/// Length of a shortest cycle; empty when the graph is a forest.
/// BFS from every vertex; the minimum over all roots is exact.
inline std::optional<int> girth(const Graph& g) {
    const int n = g.n();
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[static_cast<std::size_t>(s)] = 0;
        parent[static_cast<std::size_t>(s)] = -1;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (best != -1 && 2 * dist[static_cast<std::size_t>(u)] >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    q.push(w);
                } else if (w != parent[static_cast<std::size_t>(u)]) {
                    int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

inline bool is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.n()), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (side[static_cast<std::size_t>(w)] == -1) {
                    side[static_cast<std::size_t>(w)] = side[static_cast<std::size_t>(u)] ^ 1;
                    stack.push_back(w);
                } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace detail {

/// Backtracking over edges, most-propagating order first.
inline bool color_edges_3(const Graph& g) {
    const int m = g.edge_count();
    if (m == 0) return true;

    // Order edges so each one (after the first) shares a vertex with an
    // earlier edge where possible; tightens propagation a lot.
    std::vector<EdgeId> order;
    order.reserve(static_cast<std::size_t>(m));
    std::vector<bool> edge_used(static_cast<std::size_t>(m), false);
    std::vector<bool> vertex_seen(static_cast<std::size_t>(g.n()), false);
    for (int round = 0; static_cast<int>(order.size()) < m; ++round) {
        EdgeId pick = -1;
        for (EdgeId e = 0; e < m; ++e) {
            if (edge_used[static_cast<std::size_t>(e)]) continue;
            auto [u, v] = g.edge(e);
            if (order.empty() || vertex_seen[static_cast<std::size_t>(u)] ||
                vertex_seen[static_cast<std::size_t>(v)]) {
                pick = e;
                break;
            }
        }
        if (pick == -1) pick = static_cast<EdgeId>(std::find(edge_used.begin(), edge_used.end(), false) - edge_used.begin());
        edge_used[static_cast<std::size_t>(pick)] = true;
        auto [u, v] = g.edge(pick);
        vertex_seen[static_cast<std::size_t>(u)] = vertex_seen[static_cast<std::size_t>(v)] = true;
        order.push_back(pick);
    }

    std::vector<int> avail(static_cast<std::size_t>(g.n()), 0b111);
    std::vector<int> chosen(static_cast<std::size_t>(m), 0);
    int depth = 0;
    while (true) {
        EdgeId e = order[static_cast<std::size_t>(depth)];
        auto [u, v] = g.edge(e);
        int can = avail[static_cast<std::size_t>(u)] & avail[static_cast<std::size_t>(v)];
        int prev = chosen[static_cast<std::size_t>(depth)];  // colors < prev were tried already
        int pick = -1;
        for (int c = prev; c < 3; ++c)
            if (can & (1 << c)) {
                pick = c;
                break;
            }
        if (pick == -1) {
            chosen[static_cast<std::size_t>(depth)] = 0;
            if (--depth < 0) return false;
            EdgeId pe = order[static_cast<std::size_t>(depth)];
            auto [pu, pv] = g.edge(pe);
            int pc = chosen[static_cast<std::size_t>(depth)] - 1;
            avail[static_cast<std::size_t>(pu)] |= 1 << pc;
            avail[static_cast<std::size_t>(pv)] |= 1 << pc;
            continue;
        }
        chosen[static_cast<std::size_t>(depth)] = pick + 1;
        avail[static_cast<std::size_t>(u)] &= ~(1 << pick);
        avail[static_cast<std::size_t>(v)] &= ~(1 << pick);
        if (++depth == m) return true;
    }
}

}  // namespace detail

/// Proper 3-edge-coloring existence for cubic graphs.
inline bool is_3_edge_colorable(const Graph& g) {
    if (!g.is_cubic()) throw std::invalid_argument("is_3_edge_colorable: graph is not cubic");
    return detail::color_edges_3(g);
}

namespace detail {

/// Number of components containing a cycle after deleting `removed` edges.
inline int cyclic_component_count(const Graph& g, const std::vector<EdgeId>& removed) {
    const int n = g.n();
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    std::vector<int> extra(static_cast<std::size_t>(n), 0);  // non-tree edges per root
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (std::find(removed.begin(), removed.end(), e) != removed.end()) continue;
        auto [u, v] = g.edge(e);
        int ru = find(u), rv = find(v);
        if (ru == rv) {
            ++extra[static_cast<std::size_t>(ru)];
        } else {
            parent[static_cast<std::size_t>(ru)] = rv;
            extra[static_cast<std::size_t>(rv)] += extra[static_cast<std::size_t>(ru)];
        }
    }
    int cyclic = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v && extra[static_cast<std::size_t>(v)] > 0) ++cyclic;
    return cyclic;
}

}  // namespace detail

/// True iff no edge cut of size <= 3 separates two components that each
/// contain a cycle. Exhaustive enumeration of small edge subsets.
inline bool is_cyclically_4_edge_connected(const Graph& g) {
    if (!g.is_cubic()) throw std::invalid_argument("is_cyclically_4_edge_connected: graph is not cubic");
    if (!is_connected(g)) return false;
    const int m = g.edge_count();
    std::vector<EdgeId> cut;
    for (EdgeId a = 0; a < m; ++a) {
        cut = {a};
        if (detail::cyclic_component_count(g, cut) >= 2) return false;
        for (EdgeId b = a + 1; b < m; ++b) {
            cut = {a, b};
            if (detail::cyclic_component_count(g, cut) >= 2) return false;
            for (EdgeId c = b + 1; c < m; ++c) {
                cut = {a, b, c};
                if (detail::cyclic_component_count(g, cut) >= 2) return false;
            }
        }
    }
    return true;
}

/// Cubic, cyclically 4-edge-connected, girth >= 5, not 3-edge-colorable.
inline bool is_snark(const Graph& g) {
    if (!g.is_cubic()) return false;
    auto gi = girth(g);
    if (!gi || *gi < 5) return false;
    if (!is_cyclically_4_edge_connected(g)) return false;
    return !is_3_edge_colorable(g);
}

inline StructureReport analyze_structure(const Graph& g) {
    StructureReport r;
    r.is_connected = is_connected(g);
    r.is_bridgeless = is_bridgeless(g);
    r.girth = girth(g);
    r.is_bipartite = is_bipartite(g);
    r.is_cubic = g.is_cubic();
    return r;
}

}  // namespace cfn
