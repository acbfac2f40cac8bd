#include <catch2/catch_amalgamated.hpp>

#include "cfn/graph.hpp"
#include "support/fixtures.hpp"

using cfn::Graph;

TEST_CASE("graph construction validates simplicity") {
    CHECK_THROWS(Graph(3, {{0, 0}}));               // loop
    CHECK_THROWS(Graph(3, {{0, 1}, {1, 0}}));       // parallel (any orientation)
    CHECK_THROWS(Graph(3, {{0, 3}}));               // out of range
    CHECK_NOTHROW(Graph(0, {}));
}

TEST_CASE("degree bookkeeping") {
    auto g = fixtures::k4();
    for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
    CHECK(g.is_cubic());
    CHECK(g.edge_count() == 6);

    // Handshake: sum of degrees is twice the edge count.
    auto p = fixtures::path(5);
    int total = 0;
    for (int v = 0; v < p.n(); ++v) total += p.degree(v);
    CHECK(total == 2 * p.edge_count());
}

TEST_CASE("edge ids are positional and stable") {
    Graph g(4, {{2, 3}, {0, 1}, {1, 3}});
    CHECK(g.edge(0) == std::pair<int, int>{2, 3});
    CHECK(g.edge(1) == std::pair<int, int>{0, 1});
    CHECK(g.edge_id(3, 1) == 2);
    CHECK(g.edge_id(0, 2) == -1);
}

TEST_CASE("adjacency is symmetric and consistent with the edge list") {
    auto g = fixtures::cube();
    for (auto [u, v] : g.edges()) {
        CHECK(g.has_edge(u, v));
        CHECK(g.has_edge(v, u));
    }
    int adj_total = 0;
    for (int v = 0; v < g.n(); ++v) adj_total += g.degree(v);
    CHECK(adj_total == 2 * g.edge_count());
}

TEST_CASE("mask graph round trips vertex sets") {
    auto g = fixtures::k33();
    cfn::MaskGraph mg(g);
    CHECK(mg.full_mask() == 0x3f);
    CHECK(mg.nbr[0] == 0b111000);
    std::vector<int> vs{0, 2, 5};
    CHECK(cfn::mask_to_vertices(cfn::vertices_to_mask(vs)) == vs);
}
