#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "cfn/families.hpp"
#include "cfn/structure.hpp"
#include "support/fixtures.hpp"

using namespace cfn;

namespace {

// Oracle: an edge lies on a cycle iff its endpoints stay connected after
// removing it.
std::vector<EdgeId> bridges_by_definition(const Graph& g) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        std::vector<std::pair<int, int>> rest;
        for (EdgeId f = 0; f < g.edge_count(); ++f)
            if (f != e) rest.push_back(g.edge(f));
        Graph h(g.n(), rest);
        auto comp = component_labels(h);
        if (comp[static_cast<std::size_t>(u)] != comp[static_cast<std::size_t>(v)]) out.push_back(e);
    }
    return out;
}

Graph random_graph(std::mt19937& rng, int n, int extra) {
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < extra; ++k) {
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (seen.insert(key).second) edges.push_back(key);
    }
    return Graph(n, edges);
}

// Two Petersen copies, each with one vertex cut, joined by a 3-edge matching.
Graph petersen_pair_with_3_cut() {
    Graph p = petersen();
    std::vector<std::pair<int, int>> e;
    auto keep = [&](int v) { return v != 0; };
    auto shift = [&](int v, int off) { return off + v - 1; };  // drop vertex 0
    for (int copy = 0; copy < 2; ++copy) {
        int off = copy * 9;
        for (auto [u, v] : p.edges())
            if (keep(u) && keep(v)) e.emplace_back(shift(u, off), shift(v, off));
    }
    for (int v : p.neighbors(0)) e.emplace_back(shift(v, 0), shift(v, 9));
    return Graph(18, std::move(e));
}

}  // namespace

TEST_CASE("bridges") {
    CHECK(find_bridges(petersen()).empty());

    auto p3 = fixtures::path(3);
    CHECK(find_bridges(p3) == std::vector<EdgeId>{0, 1});

    auto tt = fixtures::two_triangles_bridge();
    CHECK(find_bridges(tt) == std::vector<EdgeId>{6});
}

TEST_CASE("bridge set matches the on-a-cycle oracle on random graphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = random_graph(rng, n, static_cast<int>(rng() % (2 * n + 2)));
        CHECK(find_bridges(g) == bridges_by_definition(g));
    }
}

TEST_CASE("girth") {
    CHECK(girth(petersen()) == 5);
    CHECK(girth(fixtures::k4()) == 3);
    CHECK(girth(fixtures::k33()) == 4);
    CHECK(girth(fixtures::cube()) == 4);
    CHECK_FALSE(girth(fixtures::path(6)).has_value());
    CHECK(girth(fixtures::cycle(7)) == 7);
    CHECK(girth(flower(5)) == 5);
}

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(fixtures::k33()));
    CHECK(is_bipartite(fixtures::cube()));
    CHECK(is_bipartite(fixtures::path(4)));
    CHECK_FALSE(is_bipartite(fixtures::k4()));
    CHECK_FALSE(is_bipartite(petersen()));
}

TEST_CASE("3-edge-colorability") {
    CHECK(is_3_edge_colorable(fixtures::k4()));
    CHECK(is_3_edge_colorable(fixtures::k33()));
    CHECK(is_3_edge_colorable(fixtures::prism()));
    CHECK(is_3_edge_colorable(fixtures::cube()));
    CHECK_FALSE(is_3_edge_colorable(petersen()));
    CHECK_FALSE(is_3_edge_colorable(flower(5)));
    CHECK_THROWS(is_3_edge_colorable(fixtures::path(3)));
}

TEST_CASE("cyclic 4-edge-connectivity") {
    CHECK(is_cyclically_4_edge_connected(petersen()));
    CHECK(is_cyclically_4_edge_connected(fixtures::k4()));
    CHECK(is_cyclically_4_edge_connected(fixtures::k33()));
    CHECK_FALSE(is_cyclically_4_edge_connected(petersen_pair_with_3_cut()));
    CHECK_FALSE(is_cyclically_4_edge_connected(fixtures::prism() /* 3-cut of prism? girth 3 triangles */));
    CHECK_THROWS(is_cyclically_4_edge_connected(fixtures::path(3)));
}

TEST_CASE("snark recognition") {
    CHECK(is_snark(petersen()));
    CHECK_FALSE(is_snark(fixtures::k4()));           // girth 3
    CHECK_FALSE(is_snark(fixtures::k33()));          // colorable
    CHECK_FALSE(is_snark(fixtures::path(3)));        // not cubic
    CHECK(is_snark(flower(5)));
    CHECK_FALSE(is_snark(petersen_pair_with_3_cut()));

    // A snark decomposes per its definition.
    auto g = flower(5);
    CHECK(girth(g).value() >= 5);
    CHECK_FALSE(is_3_edge_colorable(g));
    CHECK(is_cyclically_4_edge_connected(g));
}

TEST_CASE("dot product of two Petersen graphs is a snark") {
    // Edges at distance 1 in the left copy; any adjacent pair on the right.
    DotProductSpec spec;
    spec.left = petersen();
    spec.ab = {0, 1};
    spec.cd = {2, 3};  // distance 1 from {0,1} via edge 1-2
    spec.right = petersen();
    spec.x = 0;
    spec.y = 1;
    spec.uv = {4, 5};  // other neighbors of 0
    spec.wz = {2, 6};  // other neighbors of 1
    Graph s = dot_product(spec);
    CHECK(s.n() == 18);
    CHECK(s.is_cubic());
    CHECK(is_snark(s));
}

TEST_CASE("structure report is self-consistent") {
    auto r = analyze_structure(petersen());
    CHECK(r.is_connected);
    CHECK(r.is_bridgeless);
    CHECK(r.girth == 5);
    CHECK_FALSE(r.is_bipartite);
    CHECK(r.is_cubic);

    auto t = analyze_structure(fixtures::path(4));
    CHECK_FALSE(t.girth.has_value());
    CHECK_FALSE(t.is_bridgeless);
}
