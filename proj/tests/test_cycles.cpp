#include <doctest.h>

#include <algorithm>

#include "brute_force.hpp"
#include "domstruct/cycles.hpp"
#include "domstruct/errors.hpp"
#include "fixtures.hpp"

using namespace domstruct;
using namespace fixtures;

namespace {

std::vector<std::vector<int>> sequences(const std::vector<InducedCycle>& cycles) {
    std::vector<std::vector<int>> out;
    for (const auto& c : cycles) out.push_back(c.vertices);
    return out;
}

}  // namespace

TEST_CASE("cycle canonical form") {
    InducedCycle a = make_cycle({2, 3, 4, 0, 1});
    InducedCycle b = make_cycle({0, 4, 3, 2, 1});
    CHECK(a.vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(a == b);
    CHECK(make_cycle({5, 9, 7}).vertices == std::vector<int>{5, 7, 9});
    CHECK_THROWS_AS(make_cycle({0, 1}), input_error);
    CHECK_THROWS_AS(make_cycle({0, 1, 1}), input_error);
}

TEST_CASE("cycle validity") {
    Graph c6 = cycle_graph(6);
    CHECK(cycle_valid_in(c6, make_cycle({0, 1, 2, 3, 4, 5})));
    CHECK_FALSE(cycle_valid_in(c6, make_cycle({0, 1, 2})));
    Graph k4 = complete_graph(4);
    CHECK(cycle_valid_in(k4, make_cycle({0, 1, 2})));
    CHECK_FALSE(cycle_valid_in(k4, make_cycle({0, 1, 2, 3})));  // chords everywhere
}

TEST_CASE("induced cycle enumeration fixtures") {
    auto c6 = enumerate_induced_cycles(cycle_graph(6));
    REQUIRE(c6.size() == 1);
    CHECK(c6[0].length() == 6);
    CHECK(c6[0].residue() == 0);

    auto k4 = enumerate_induced_cycles(complete_graph(4));
    REQUIRE(k4.size() == 4);  // four triangles, every 4-cycle has a chord
    for (const auto& c : k4) CHECK(c.length() == 3);
    CHECK(sequences(k4) == bf::induced_cycles_subsets(complete_graph(4)));

    // Petersen: girth 5, twelve 5-cycles, ten chordless 6-cycles, nothing else
    auto pet = enumerate_induced_cycles(petersen());
    int fives = 0, sixes = 0;
    for (const auto& c : pet) {
        if (c.length() == 5) ++fives;
        if (c.length() == 6) ++sixes;
    }
    CHECK(fives == 12);
    CHECK(sixes == 10);
    CHECK(pet.size() == 22);
    CHECK(sequences(pet) == bf::induced_cycles_subsets(petersen()));

    auto pet6 = enumerate_induced_cycles(petersen(), {.max_length = 6});
    CHECK(pet6.size() == 22);
    auto pet5 = enumerate_induced_cycles(petersen(), {.max_length = 5});
    CHECK(pet5.size() == 12);
}

TEST_CASE("enumeration agrees with subset sweep on small graphs") {
    for (int n = 3; n <= 8; ++n) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            Graph g = random_graph(n, 0.45, 777 * n + seed);
            auto got = enumerate_induced_cycles(g);
            CHECK(sequences(got) == bf::induced_cycles_subsets(g));
            for (const auto& c : got) CHECK(cycle_valid_in(g, c));
        }
    }
}

TEST_CASE("enumeration budget") {
    CycleEnumerationOptions opts;
    opts.max_cycles = 2;
    CHECK_THROWS_AS(enumerate_induced_cycles(complete_graph(5), opts), budget_error);
}

TEST_CASE("seam relation") {
    // two triangles sharing an edge
    Graph g1 = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(connecting_without_seams(make_cycle({0, 1, 2}), make_cycle({1, 2, 3}), g1));
    CHECK(connecting_without_seams(make_cycle({1, 2, 3}), make_cycle({0, 1, 2}), g1));

    // vertex-disjoint triangles
    Graph g2 = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(connecting_without_seams(make_cycle({0, 1, 2}), make_cycle({3, 4, 5}), g2));

    // two 6-cycles sharing two vertices nonadjacent in both: two trivial paths
    Graph g3 = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                      {0, 6}, {6, 7}, {7, 3}, {3, 8}, {8, 9}, {9, 0}});
    InducedCycle a = make_cycle({0, 1, 2, 3, 4, 5});
    InducedCycle b = make_cycle({0, 6, 7, 3, 8, 9});
    CHECK_FALSE(connecting_without_seams(a, b, g3));

    // single shared vertex: trivial path by default, rejectable via the switch
    Graph g4 = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
    CHECK(connecting_without_seams(make_cycle({0, 1, 2}), make_cycle({0, 3, 4}), g4));
    CHECK_FALSE(connecting_without_seams(make_cycle({0, 1, 2}), make_cycle({0, 3, 4}), g4, false));

    // identical cycles intersect in a cycle, not a path
    CHECK_FALSE(connecting_without_seams(a, a, g3));
}

TEST_CASE("structures") {
    auto c6 = find_structures(cycle_graph(6));
    REQUIRE(c6.size() == 1);
    CHECK(c6[0].cycles.size() == 1);
    CHECK(is_domination_structure(cycle_graph(6), c6[0]));

    CHECK(find_structures(cycle_graph(5)).empty());

    auto k4 = find_structures(complete_graph(4));
    REQUIRE(k4.size() == 1);
    CHECK(k4[0].cycles.size() == 4);
    CHECK(k4[0].seam_edges.size() == 6);  // every pair of triangles shares an edge
    CHECK(k4[0].seam_connected());
    CHECK(is_domination_structure(complete_graph(4), k4[0]));

    for (const auto& st : find_structures(petersen())) {
        for (const auto& c : st.cycles) CHECK(c.residue() == 0);
        CHECK(st.seam_connected());
    }

    // a pendant vertex breaks coverage
    Graph pend = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}});
    auto st = find_structures(pend);
    REQUIRE(st.size() == 1);
    CHECK_FALSE(is_domination_structure(pend, st[0]));
}

TEST_CASE("residue scan") {
    Mod3Check k4 = all_induced_cycles_mod3(complete_graph(4));
    CHECK(k4.all_mod3);
    CHECK_FALSE(k4.offender.has_value());

    Mod3Check c5 = all_induced_cycles_mod3(cycle_graph(5));
    CHECK_FALSE(c5.all_mod3);
    REQUIRE(c5.offender.has_value());
    CHECK(c5.offender->length() == 5);

    CHECK(all_induced_cycles_mod3(cycle_graph(6)).all_mod3);
}
