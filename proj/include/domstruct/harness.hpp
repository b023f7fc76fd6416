#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "domstruct/cycles.hpp"
#include "domstruct/graph.hpp"
#include "domstruct/io.hpp"
#include "domstruct/oracle.hpp"
#include "domstruct/scheme_k.hpp"

namespace domstruct {

/// Everything a run needs; equal configs give byte-identical reports.
struct RunConfig {
    std::string input_path;
    std::string format = "graph6";  // "graph6" or "edgelist"
    std::uint64_t seed = 1;
    KPolicy policy;
    long long max_iterations = 0;  // construction cap, 0 = default
    std::uint64_t oracle_budget = kDefaultOracleBudget;
    CycleEnumerationOptions cycles;
    bool all_y = false;
    bool strict = false;         // corpus exits nonzero on any refutation
    bool emit_runtimes = false;  // keep off for reproducible reports

    // claim toggles
    bool check_construction = true;
    bool check_labeling = true;
    bool check_subset = true;
    bool check_combine = true;
    bool check_pipeline = true;
    int unique_structure_max_n = 10;  // structure-count claim is skipped above this

    // generator corpus spec (used when gen_count > 0 instead of input_path)
    int gen_count = 0;
    int gen_min_n = 4;
    int gen_max_n = 10;
};

// Connected cubic graph on n vertices by the configuration model: pair 3n
// stubs uniformly, reject loops, parallel edges and disconnected outcomes,
// retrying on a derived substream. Deterministic for (n, seed).
Graph random_cubic(int n, std::uint64_t seed);

// Evaluates every applicable claim on one connected graph and assembles the
// report; hypothesis gating and in-band errors become SKIPPED verdicts.
ReportDocument verify_graph(const Graph& g, const RunConfig& cfg,
                            const std::string& graph_id = "graph",
                            const std::string& input_format = "graph6");

struct LoadedGraph {
    Graph graph;
    std::string id;
    std::string format;
};

// Graphs from a graph6 file (one per line), an edge-list file or directory,
// or the seeded generator spec.
std::vector<LoadedGraph> load_graphs(const RunConfig& cfg);

struct CorpusResult {
    std::vector<ReportDocument> reports;
    std::vector<std::tuple<std::string, std::string, int>> summary;  // claim, verdict, count
    bool any_refuted = false;
};

CorpusResult run_corpus(const RunConfig& cfg);

std::string summary_table(const CorpusResult& result);

}  // namespace domstruct
