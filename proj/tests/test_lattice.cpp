#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "asmlab/lattice.hpp"

using namespace asmlab;

TEST_CASE("edge_set counts and order") {
    auto e11 = edge_set(GridSpec(1, 1));
    REQUIRE(e11.size() == 4);
    CHECK(e11 == std::vector<EdgeKey>{H(1, 0), H(1, 1), V(0, 1), V(1, 1)});
    CHECK(edge_set(GridSpec(3, 3)).size() == 24);
    CHECK(edge_set(GridSpec(2, 3)).size() == 17);

    GridSpec g(2, 3);
    auto edges = edge_set(g);
    for (size_t k = 0; k < edges.size(); ++k) {
        CHECK(edge_index(g, edges[k]) == static_cast<int>(k));
        CHECK(edge_at(g, static_cast<int>(k)) == edges[k]);
    }
}

TEST_CASE("boundary edge labels") {
    CHECK(boundary_edge_label(3, 1) == V(0, 1));
    CHECK(boundary_edge_label(3, 5) == V(3, 1));
    CHECK(boundary_edge_label(3, 12) == V(0, 2));
    CHECK(boundary_edge_label(3, 2) == H(1, 0));
    CHECK(boundary_edge_label(3, 8) == H(3, 3));
    CHECK(boundary_edge_label(3, 11) == V(0, 3));
    CHECK_THROWS_AS(boundary_edge_label(3, 0), std::out_of_range);
    CHECK_THROWS_AS(boundary_edge_label(3, 13), std::out_of_range);
    CHECK(boundary_edge_label_cyclic(3, 13) == boundary_edge_label(3, 1));
    CHECK(boundary_edge_label_cyclic(3, 0) == boundary_edge_label(3, 12));
}

TEST_CASE("boundary labeling is a bijection onto the boundary edges") {
    for (int n = 1; n <= 6; ++n) {
        GridSpec g = square_grid(n);
        std::map<EdgeKey, int> seen;
        for (int k = 1; k <= 4 * n; ++k) {
            EdgeKey e = boundary_edge_label(n, k);
            CHECK(is_boundary_edge(g, e));
            CHECK(!seen.count(e));
            seen[e] = k;
            CHECK(boundary_edge_position(n, e) == k);
        }
        int boundary_total = 0;
        for (EdgeKey e : edge_set(g)) boundary_total += is_boundary_edge(g, e) ? 1 : 0;
        CHECK(boundary_total == 4 * n);
        CHECK(static_cast<int>(seen.size()) == 4 * n);
    }
}

TEST_CASE("plaquette contents") {
    Plaquette p = plaquette(2, 1, 1);
    CHECK(p.interior);
    CHECK(!p.odd());
    CHECK(p.edges == std::vector<EdgeKey>{H(1, 1), H(2, 1), V(1, 1), V(1, 2)});
    auto eta = p.eta();
    CHECK(eta[0] == V(1, 1));
    CHECK(eta[1] == H(2, 1));
    CHECK(eta[2] == V(1, 2));
    CHECK(eta[3] == H(1, 1));

    Plaquette corner = plaquette(3, 0, 0);
    CHECK(!corner.interior);
    CHECK(corner.edges == std::vector<EdgeKey>{H(1, 0), V(0, 1)});
    CHECK(corner.vertices.size() == 3);

    CHECK(plaquette(4, 1, 2).interior);
    CHECK(plaquette(4, 1, 2).odd());
    CHECK_THROWS_AS(plaquette(3, 4, 0), std::out_of_range);
}

TEST_CASE("plaquettes of one parity partition the edges") {
    CHECK(edge_partition_check(1, false));
    CHECK(edge_partition_check(3, true));
    CHECK(edge_partition_check(4, false));
    for (int n = 1; n <= 6; ++n) {
        CHECK(edge_partition_check(n, true));
        CHECK(edge_partition_check(n, false));
    }
}

TEST_CASE("vertex and edge membership counts") {
    for (int n = 2; n <= 5; ++n) {
        GridSpec g = square_grid(n);
        std::map<VertexId, std::pair<int, int>> vertex_in;  // (odd, even) plaquettes
        std::map<EdgeKey, std::pair<int, int>> edge_in;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                Plaquette p = plaquette(n, i, j);
                for (VertexId v : p.vertices)
                    if (is_interior_vertex(g, v)) (p.odd() ? vertex_in[v].first : vertex_in[v].second)++;
                for (EdgeKey e : p.edges) (p.odd() ? edge_in[e].first : edge_in[e].second)++;
            }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                CHECK(vertex_in[{i, j}] == std::pair<int, int>{2, 2});
        for (EdgeKey e : edge_set(g)) CHECK(edge_in[e] == std::pair<int, int>{1, 1});
    }
}
