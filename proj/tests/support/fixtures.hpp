#pragma once

#include <utility>
#include <vector>

#include "cfn/graph.hpp"

namespace fixtures {

inline cfn::Graph k4() {
    return cfn::Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline cfn::Graph k33() {
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) e.emplace_back(a, b);
    return cfn::Graph(6, std::move(e));
}

inline cfn::Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return cfn::Graph(n, std::move(e));
}

inline cfn::Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return cfn::Graph(n, std::move(e));
}

// Triangular prism K_3 x K_2: cubic, 3-edge-colorable, girth 3.
inline cfn::Graph prism() {
    return cfn::Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

// Two triangles joined by a single edge (the canonical bridge example).
inline cfn::Graph two_triangles_bridge() {
    return cfn::Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
}

// Cube graph Q_3: cubic bipartite.
inline cfn::Graph cube() {
    return cfn::Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
                          {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

}  // namespace fixtures
