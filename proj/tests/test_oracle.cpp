#include <doctest.h>

#include "brute_force.hpp"
#include "domstruct/errors.hpp"
#include "domstruct/oracle.hpp"
#include "fixtures.hpp"

using namespace domstruct;
using namespace fixtures;

TEST_CASE("exact oracle fixtures") {
    OracleResult k4 = min_dominating_set_exact(complete_graph(4));
    CHECK(k4.gamma == 1);
    CHECK(k4.witness == VertexSet{0});
    CHECK_FALSE(k4.budget_hit);

    CHECK(min_dominating_set_exact(cycle_graph(9)).gamma == 3);

    OracleResult pet = min_dominating_set_exact(petersen());
    CHECK(pet.gamma == 3);
    CHECK(pet.gamma == bf::gamma_and_witness(petersen()).first);
    CHECK(is_dominating(petersen(), pet.witness));

    CHECK(min_dominating_set_exact(Graph(0)).gamma == 0);
}

TEST_CASE("oracle matches subset sweep on small graphs") {
    for (int n = 1; n <= 8; ++n) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            Graph g = random_graph(n, 0.15 + 0.1 * static_cast<double>(seed % 7), 31 * n + seed);
            auto [gamma, witness] = bf::gamma_and_witness(g);
            OracleResult r = min_dominating_set_exact(g);
            CHECK(r.gamma == gamma);
            CHECK(r.witness == witness);  // lex-min among optima
            CHECK_FALSE(r.budget_hit);
        }
    }
}

TEST_CASE("oracle budget degrades honestly") {
    OracleResult r = min_dominating_set_exact(petersen(), 1);
    CHECK(r.budget_hit);
    CHECK(is_dominating(petersen(), r.witness));  // greedy upper bound still valid
    CHECK(static_cast<int>(r.witness.size()) == r.gamma);
}

TEST_CASE("minimum dominating set enumeration") {
    DsetEnumeration c3 = enumerate_all_dsets(complete_graph(3));
    CHECK(c3.sets == std::vector<VertexSet>{{0}, {1}, {2}});
    CHECK(c3.complete);

    DsetEnumeration k4 = enumerate_all_dsets(complete_graph(4));
    CHECK(k4.sets == std::vector<VertexSet>{{0}, {1}, {2}, {3}});

    DsetEnumeration c6 = enumerate_all_dsets(cycle_graph(6));
    CHECK(c6.sets == std::vector<VertexSet>{{0, 3}, {1, 4}, {2, 5}});
    CHECK(c6.sets == bf::all_dsets(cycle_graph(6)));

    for (int n = 1; n <= 8; ++n) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Graph g = random_graph(n, 0.4, 97 * n + seed);
            CHECK(enumerate_all_dsets(g).sets == bf::all_dsets(g));
        }
    }

    CHECK_FALSE(enumerate_all_dsets(petersen(), 1).complete);
}

TEST_CASE("closed forms match the search oracle") {
    for (int n = 1; n <= 15; ++n) {
        CHECK(gamma_path(n) == min_dominating_set_exact(path_graph(n)).gamma);
        VertexSet w = path_dset_witness(n);
        CHECK(static_cast<int>(w.size()) == gamma_path(n));
        CHECK(is_dominating(path_graph(n), w));
    }
    for (int n = 3; n <= 15; ++n) {
        CHECK(gamma_cycle(n) == min_dominating_set_exact(cycle_graph(n)).gamma);
        VertexSet w = cycle_dset_witness(n);
        CHECK(static_cast<int>(w.size()) == gamma_cycle(n));
        CHECK(is_dominating(cycle_graph(n), w));
    }
    CHECK(gamma_path(4) == 2);
    CHECK(gamma_cycle(6) == 2);
    CHECK(gamma_path(1) == 1);
    CHECK(path_dset_witness(1) == VertexSet{0});
    CHECK_THROWS_AS(gamma_path(0), input_error);
    CHECK_THROWS_AS(gamma_cycle(2), input_error);
}

TEST_CASE("minimality check") {
    Graph c6 = cycle_graph(6);
    CHECK(is_minimal_dominating(c6, {0, 3}).minimal_dominating);
    MinimalityCheck redundant = is_minimal_dominating(c6, {0, 1, 3});
    CHECK(redundant.dominating);
    CHECK_FALSE(redundant.minimal_dominating);
    CHECK_FALSE(is_minimal_dominating(c6, {0, 1, 2, 3, 4, 5}).minimal_dominating);
    CHECK_FALSE(is_minimal_dominating(c6, {0}).dominating);
}

TEST_CASE("remark biconditional") {
    Graph c6 = cycle_graph(6);
    RemarkCheck ok = check_remark_R(c6, {0, 3});
    CHECK(ok.verdict == Verdict::HOLDS);
    CHECK(ok.left_holds);
    CHECK(ok.right_holds);

    // {0,2,4} dominates but is not minimum: both sides must come out false
    RemarkCheck both_false = check_remark_R(c6, {0, 2, 4});
    CHECK(both_false.verdict == Verdict::HOLDS);
    CHECK_FALSE(both_false.left_holds);
    CHECK_FALSE(both_false.right_holds);

    RemarkCheck empty = check_remark_R(Graph(0), {});
    CHECK(empty.verdict == Verdict::HOLDS);

    CHECK_THROWS_AS(check_remark_R(c6, {0}), input_error);  // not dominating

    for (int n = 1; n <= 7; ++n) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Graph g = random_connected(n, 0.5, 13 * n + seed);
            auto [gamma, witness] = bf::gamma_and_witness(g);
            CHECK(check_remark_R(g, witness).verdict == Verdict::HOLDS);
        }
    }
}
