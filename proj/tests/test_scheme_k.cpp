#include <doctest.h>

#include "brute_force.hpp"
#include "domstruct/cycles.hpp"
#include "domstruct/errors.hpp"
#include "domstruct/harness.hpp"
#include "domstruct/scheme_k.hpp"
#include "fixtures.hpp"

using namespace domstruct;
using namespace fixtures;

TEST_CASE("cut vertex step") {
    // bowtie: joining both triangle pairs across the center yields K5
    auto [g, step] = step_cut_vertex(bowtie(), 0);
    CHECK(g == complete_graph(5));
    CHECK(step.added == EdgeList{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(step.kind == KStepKind::CUT_VERTEX);

    // two triangles joined through a degree-2 cut vertex: exactly one new edge
    Graph barbell = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4},
                                          {4, 5}, {5, 6}, {4, 6}});
    auto [g2, step2] = step_cut_vertex(barbell, 3);
    CHECK(step2.added == EdgeList{{2, 4}});

    // three triangles sharing one vertex: 4 edges per component pair
    Graph tri3 = Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4},
                                       {0, 5}, {0, 6}, {5, 6}});
    auto [g3, step3] = step_cut_vertex(tri3, 0);
    CHECK(step3.added.size() == 12);
    CHECK(cut_vertices(g3).empty());

    CHECK_THROWS_AS(step_cut_vertex(cycle_graph(5), 0), input_error);
}

TEST_CASE("2-mod-3 cycle step") {
    Graph c5 = cycle_graph(5);
    InducedCycle d2 = make_cycle({0, 1, 2, 3, 4});
    auto [g, step] = step_cycle_mod2(c5, d2, 0);
    // w=0 has cycle neighbors w2=1, w1=4 and alpha=2 beyond w2
    CHECK(step.added == EdgeList{{0, 2}, {1, 4}, {2, 4}});
    CHECK(g.edge_count() == 8);
    for (const auto& c : enumerate_induced_cycles(g)) CHECK(c.length() == 3);
    CHECK(bf::induced_cycles_subsets(g).size() == 5);  // five triangles, nothing else

    Graph c8 = cycle_graph(8);
    auto [g8, step8] = step_cycle_mod2(c8, make_cycle({0, 1, 2, 3, 4, 5, 6, 7}), 0);
    CHECK(step8.added.size() == 3);
    for (const auto& seq : bf::induced_cycles_subsets(g8)) CHECK(seq.size() % 3 == 0);

    CHECK_THROWS_AS(step_cycle_mod2(cycle_graph(6), make_cycle({0, 1, 2, 3, 4, 5}), 0),
                    input_error);
    CHECK_THROWS_AS(step_cycle_mod2(c5, d2, 9), input_error);
    // stale cycle: the edge set no longer matches
    Graph c5x = add_edges(c5, {{0, 2}}).graph;
    CHECK_THROWS_AS(step_cycle_mod2(c5x, d2, 0), input_error);
}

TEST_CASE("1-mod-3 cycle step") {
    Graph c4 = cycle_graph(4);
    auto [g, step] = step_cycle_mod1(c4, make_cycle({0, 1, 2, 3}), 0);
    CHECK(g == complete_graph(4));
    CHECK(step.added == EdgeList{{0, 2}, {1, 3}});

    Graph c7 = cycle_graph(7);
    auto [g7, step7] = step_cycle_mod1(c7, make_cycle({0, 1, 2, 3, 4, 5, 6}), 0);
    CHECK(step7.added.size() == 2);
    for (const auto& seq : bf::induced_cycles_subsets(g7)) CHECK(seq.size() % 3 == 0);

    CHECK_THROWS_AS(step_cycle_mod1(cycle_graph(5), make_cycle({0, 1, 2, 3, 4}), 0), input_error);
}

TEST_CASE("full construction fixtures") {
    KTrace c6 = construct_K(cycle_graph(6));
    CHECK(c6.steps.empty());
    CHECK(c6.output == cycle_graph(6));
    CHECK(c6.terminated);

    KTrace c4 = construct_K(cycle_graph(4));
    CHECK(c4.steps.size() == 1);
    CHECK(c4.output == complete_graph(4));

    KTrace bow = construct_K(bowtie());
    CHECK(bow.output == complete_graph(5));
    CHECK(bow.steps.size() == 1);  // K5 needs no cycle repairs afterwards

    KTrace c5 = construct_K(cycle_graph(5));
    CHECK(c5.steps.size() == 1);
    CHECK(c5.steps[0].kind == KStepKind::CYCLE_MOD2);
    CHECK(c5.steps[0].added == EdgeList{{0, 2}, {1, 4}, {2, 4}});

    CHECK_THROWS_AS(construct_K(Graph::from_edges(4, {{0, 1}, {2, 3}})), input_error);
}

TEST_CASE("construction invariants on random cubic graphs") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        for (int n : {8, 10, 12}) {
            Graph g = random_cubic(n, seed);
            KTrace t = construct_K(g);
            REQUIRE(t.terminated);

            // edge monotonicity and exact replay
            Graph cur = t.input;
            for (const auto& step : t.steps) {
                for (const auto& [u, v] : step.added) CHECK_FALSE(cur.has_edge(u, v));
                cur = add_edges(cur, step.added).graph;
                CHECK(cur.edge_count() >= t.input.edge_count());
            }
            CHECK(cur == t.output);
            CHECK(replay(t) == t.output);

            // terminated means 2-connected with only 0-mod-3 induced cycles
            CHECK(cut_vertices(t.output).empty());
            CHECK(all_induced_cycles_mod3(t.output).all_mod3);

            // identical policy, identical trace
            KTrace again = construct_K(g);
            CHECK(again.steps.size() == t.steps.size());
            CHECK(again.output == t.output);
        }
    }
}

TEST_CASE("random policy still terminates correctly") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = random_cubic(10, 40 + seed);
        KOptions opts;
        opts.policy = {KPolicy::Kind::RANDOM, seed};
        KTrace t = construct_K(g, opts);
        REQUIRE(t.terminated);
        CHECK(cut_vertices(t.output).empty());
        CHECK(all_induced_cycles_mod3(t.output).all_mod3);
        CHECK(replay(t) == t.output);
    }
}

TEST_CASE("iteration cap reports rather than throws") {
    KOptions opts;
    opts.max_iterations = 1;
    // C4 needs exactly one repair, so a cap of 1 still terminates
    CHECK(construct_K(cycle_graph(4), opts).terminated);
    // a chain of three triangles has two cut vertices and needs two steps
    Graph chain = Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4},
                                        {4, 5}, {4, 6}, {5, 6}});
    KTrace t = construct_K(chain, opts);
    CHECK_FALSE(t.terminated);
    CHECK(t.iterations == 1);
    CHECK(construct_K(chain).terminated);
}
