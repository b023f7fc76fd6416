#include <doctest.h>

#include "domstruct/errors.hpp"
#include "domstruct/io.hpp"
#include "fixtures.hpp"

using namespace domstruct;
using namespace fixtures;

TEST_CASE("graph6 fixed encodings") {
    CHECK(parse_graph6("C~") == complete_graph(4));
    CHECK(write_graph6(complete_graph(4)) == "C~");
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(write_graph6(complete_graph(3)) == "Bw");
    CHECK(parse_graph6("Dhc") == cycle_graph(5));
    CHECK(write_graph6(cycle_graph(5)) == "Dhc");
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(write_graph6(Graph(0)) == "?");
    CHECK(parse_graph6(">>graph6<<C~") == complete_graph(4));
}

TEST_CASE("graph6 round trip") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = static_cast<int>(seed % 13);
        Graph g = random_graph(n, 0.1 + 0.08 * static_cast<double>(seed % 10), seed);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
    // multi-byte vertex-count header
    Graph big = random_graph(80, 0.05, 7);
    std::string enc = write_graph6(big);
    CHECK(enc.size() >= 4);
    CHECK(enc[0] == 126);
    CHECK(parse_graph6(enc) == big);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_AS(parse_graph6("C"), parse_error);             // truncated bit stream
    CHECK_THROWS_AS(parse_graph6("C~~"), parse_error);           // trailing data
    CHECK_THROWS_AS(parse_graph6("Bx"), parse_error);            // nonzero padding bits
    CHECK_THROWS_AS(parse_graph6("B\x20"), parse_error);         // byte below 63
    CHECK_THROWS_AS(parse_graph6("B\x7f"), parse_error);         // byte above 126
    const std::string valid = write_graph6(petersen());
    for (size_t len = 0; len < valid.size(); ++len)
        CHECK_THROWS_AS(parse_graph6(valid.substr(0, len)), parse_error);
    try {
        parse_graph6("Bx");
    } catch (const parse_error& e) {
        CHECK(e.offset == 1);  // the byte carrying the bad padding
    }
}

TEST_CASE("edge list parsing") {
    CHECK(parse_edge_list("0 1\n1 2\n2 0\n") == complete_graph(3));
    CHECK(parse_edge_list("") == Graph(0));
    CHECK_THROWS_AS(parse_edge_list("0 0"), parse_error);
    CHECK(parse_edge_list("3 3\n0 1\n1 2\n2 0\n") == complete_graph(3));  // header form
    CHECK(parse_edge_list("0 1\n1 2\n") == path_graph(3));  // header heuristic must not fire
    CHECK(parse_edge_list("# comment\n0 1\n") == path_graph(2));
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("0\n"), parse_error);
    try {
        parse_edge_list("0 1\n2 2\n");
    } catch (const parse_error& e) {
        CHECK(e.offset == 2);  // line number
    }
}

TEST_CASE("dot export") {
    std::string dot = write_dot(complete_graph(4), {{{1, 3}, {0, 2}}, {0}});
    CHECK(dot.find("graph G {") == 0);
    size_t marked = 0, at = 0;
    while ((at = dot.find("[color=red, style=bold]", at)) != std::string::npos) {
        ++marked;
        at += 1;
    }
    CHECK(marked == 2);
    CHECK(dot.find("0 [style=filled, fillcolor=gold]") != std::string::npos);

    CHECK(write_dot(Graph(0)) == "graph G {\n}\n");
    std::string plain = write_dot(complete_graph(3));
    CHECK(plain.find("color=red") == std::string::npos);
}

TEST_CASE("report document JSON") {
    ReportDocument doc;
    doc.graph_id = "test:1";
    doc.input_format = "graph6";
    doc.n = 4;
    doc.m = 6;
    std::string minimal = write_report(doc);
    CHECK(minimal.find("\"claims\": []") != std::string::npos);
    CHECK(minimal.find("\"schema_version\": \"1\"") != std::string::npos);
    CHECK(minimal.find("runtimes") == std::string::npos);  // omitted when empty

    doc.claims.push_back({"construction_cycles_mod3", Verdict::REFUTED, "offending cycle [0 1 2 3 4]"});
    doc.candidate_sets.push_back({0, 2});
    doc.oracle_gamma = 1;
    doc.counterexample_graph6 = write_graph6(complete_graph(4));
    CHECK(doc.any_refuted());
    std::string full = write_report(doc);
    CHECK(full.find("\"counterexample_graph6\": \"C~\"") != std::string::npos);

    // round trip: parse back and re-serialize identically
    ReportDocument back = parse_report(full);
    CHECK(write_report(back) == full);
    CHECK(back.oracle_gamma == 1);
    CHECK(back.claims.size() == 1);
    CHECK(back.claims[0].verdict == Verdict::REFUTED);
}
