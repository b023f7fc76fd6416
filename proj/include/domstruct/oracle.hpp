#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "domstruct/graph.hpp"
#include "domstruct/verdict.hpp"

namespace domstruct {

inline constexpr std::uint64_t kDefaultOracleBudget = 100000000ULL;  // search nodes

struct OracleResult {
    int gamma = 0;       // exact when budget_hit is false, else best known upper bound
    VertexSet witness;   // dominating set of size gamma (lex-min among optima when exact)
    std::uint64_t nodes_explored = 0;
    bool budget_hit = false;
};

// Exact domination number by iterative deepening on cardinality: greedy upper
// bound, ceil(n/(maxdeg+1)) lower bound, branching on the vertex with fewest
// remaining dominators. A second lexicographic pass pins the witness.
OracleResult min_dominating_set_exact(const Graph& g, std::uint64_t node_budget = kDefaultOracleBudget);

struct DsetEnumeration {
    int gamma = 0;
    std::vector<VertexSet> sets;  // every dominating set of size gamma, lex order
    bool complete = false;        // false when the node budget ran out
    std::uint64_t nodes_explored = 0;
};

DsetEnumeration enumerate_all_dsets(const Graph& g, std::uint64_t node_budget = kDefaultOracleBudget);

// ceil(n/3) closed forms with explicit witnesses.
int gamma_path(int n);   // n >= 1
int gamma_cycle(int n);  // n >= 3
VertexSet path_dset_witness(int n);
VertexSet cycle_dset_witness(int n);

struct MinimalityCheck {
    bool dominating = false;
    bool minimal_dominating = false;  // dominating and no one-vertex removal still dominates
};

MinimalityCheck is_minimal_dominating(const Graph& g, const VertexSet& x);

// Checks the biconditional "every subset D of X is a d-set of N[D]  <=>
// X is a d-set of G" on one instance. Skips when |X| exceeds the subset cap.
struct RemarkCheck {
    Verdict verdict = Verdict::SKIPPED;
    bool left_holds = false;   // all subsets D are d-sets of their N[D]
    bool right_holds = false;  // |X| equals gamma(G)
    std::optional<VertexSet> offending_subset;
    bool budget_hit = false;
};

inline constexpr int kRemarkSubsetCap = 20;

RemarkCheck check_remark_R(const Graph& g, const VertexSet& x,
                           std::uint64_t node_budget = kDefaultOracleBudget);

}  // namespace domstruct
