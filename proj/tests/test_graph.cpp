#include <doctest.h>

#include "brute_force.hpp"
#include "domstruct/errors.hpp"
#include "domstruct/graph.hpp"
#include "fixtures.hpp"

using namespace domstruct;
using namespace fixtures;

TEST_CASE("closed neighborhood") {
    Graph c5 = cycle_graph(5);
    CHECK(closed_neighborhood(c5, {0}) == VertexSet{0, 1, 4});
    CHECK(closed_neighborhood(c5, {}) == VertexSet{});
    CHECK(closed_neighborhood(complete_graph(4), {2}) == VertexSet{0, 1, 2, 3});
    CHECK_THROWS_AS(closed_neighborhood(c5, {7}), input_error);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_graph(7, 0.4, seed);
        VertexSet w{1, 3};
        VertexSet nh = closed_neighborhood(g, w);
        CHECK(is_subset_of(w, nh));
    }
}

TEST_CASE("domination test") {
    Graph c5 = cycle_graph(5);
    CHECK(is_dominating(c5, {0, 2}));
    CHECK_FALSE(is_dominating(c5, {0}));
    CHECK(is_dominating(c5, {0, 1, 2, 3, 4}));

    // agrees with the first-principles check on small random graphs
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_graph(6, 0.35, seed);
        for (int mask = 0; mask < 64; ++mask) {
            VertexSet x;
            for (int v = 0; v < 6; ++v)
                if ((mask >> v) & 1) x.push_back(v);
            CHECK(is_dominating(g, x) == bf::dominating(g, x));
        }
    }
}

TEST_CASE("cut vertices") {
    CHECK(cut_vertices(bowtie()) == VertexSet{0});
    CHECK(cut_vertices(cycle_graph(6)) == VertexSet{});
    CHECK(cut_vertices(path_graph(3)) == VertexSet{1});

    for (int n = 2; n <= 8; ++n) {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            Graph g = random_graph(n, 0.35, 1000 * n + seed);
            CHECK(cut_vertices(g) == bf::cut_vertices_definition(g));
        }
    }
}

TEST_CASE("components") {
    Graph two = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto comps = components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1, 2});
    CHECK(comps[1] == VertexSet{3, 4, 5});
    CHECK(components(petersen()).size() == 1);
    CHECK(components(Graph(0)).empty());
    CHECK(is_connected(Graph(0)));
}

TEST_CASE("vertex deletion with remap") {
    Graph c4 = cycle_graph(4);
    InducedSubgraph sub = delete_vertices(c4, {3});
    CHECK(sub.graph == path_graph(3));
    CHECK(sub.old_of_new == std::vector<int>{0, 1, 2});
    CHECK(sub.new_of_old == std::vector<int>{0, 1, 2, -1});

    InducedSubgraph same = delete_vertices(c4, {});
    CHECK(same.graph == c4);
    CHECK(same.old_of_new == std::vector<int>{0, 1, 2, 3});

    InducedSubgraph edge = delete_vertices(complete_graph(4), {0, 1});
    CHECK(edge.graph.edge_count() == 1);
    CHECK(edge.graph.vertex_count() == 2);

    // result edges are exactly the host edges with both ends surviving
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = random_graph(7, 0.4, 50 + seed);
        VertexSet s{0, 4};
        InducedSubgraph r = delete_vertices(g, s);
        int expected = 0;
        for (const auto& [u, v] : g.edges())
            if (!set_contains(s, u) && !set_contains(s, v)) ++expected;
        CHECK(r.graph.edge_count() == expected);
        for (const auto& [u, v] : r.graph.edges())
            CHECK(g.has_edge(r.old_of_new[u], r.old_of_new[v]));
    }
}

TEST_CASE("edge addition") {
    // the 1-mod-3 repair on a 4-cycle yields the complete graph
    AddEdgesResult k4 = add_edges(cycle_graph(4), {{1, 3}, {0, 2}});
    CHECK(k4.graph == complete_graph(4));
    CHECK(k4.duplicates == 0);

    Graph tri = complete_graph(3);
    CHECK(add_edges(tri, {}).graph == tri);
    AddEdgesResult dup = add_edges(tri, {{0, 1}});
    CHECK(dup.graph == tri);
    CHECK(dup.duplicates == 1);

    CHECK_THROWS_AS(add_edges(tri, {{1, 1}}), input_error);
    CHECK_THROWS_AS(add_edges(tri, {{0, 9}}), input_error);
}

TEST_CASE("degree profile") {
    DegreeProfile p = degree_profile(petersen());
    CHECK(p.min_degree == 3);
    CHECK(p.max_degree == 3);
    CHECK(p.is_cubic);

    p = degree_profile(cycle_graph(6));
    CHECK(p.min_degree == 2);
    CHECK(p.max_degree == 2);
    CHECK_FALSE(p.is_cubic);

    CHECK(degree_profile(complete_graph(4)).is_cubic);
    CHECK_FALSE(degree_profile(star(3)).is_cubic);
}

TEST_CASE("graph construction guards") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), input_error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 5}}), input_error);
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);  // duplicates collapse
}
