#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domstruct/graph.hpp"
#include "domstruct/labeling.hpp"
#include "domstruct/oracle.hpp"
#include "domstruct/scheme_k.hpp"
#include "domstruct/verdict.hpp"

namespace domstruct {

enum class Branch { PRIME, DOUBLE_PRIME };

// Structural shape of a derived graph's components, strongest class that applies.
enum class StructuralClass {
    INDEPENDENT,   // no edges at all
    PATHS,         // every component is a path (isolated vertices included)
    PATHS_CYCLES,  // every component is a path or a cycle
    VIOLATED,      // some component has a vertex of degree >= 3
};

StructuralClass classify_components(const Graph& g);
std::string to_string(Branch b);
std::string to_string(StructuralClass c);

// Deletes y, then joins every surviving pair of y-neighbors by an edge.
InducedSubgraph build_G_prime(const Graph& g, const VertexSet& y);

// Induced subgraph on V minus N[y].
InducedSubgraph build_G_double_prime(const Graph& g, const VertexSet& y);

struct CombineResult {
    VertexSet result;
    Branch branch;
};

// |z1| < |z2| picks y ∪ z1 (PRIME); ties go to the DOUBLE_PRIME side.
CombineResult combine(const VertexSet& y, const VertexSet& z1, const VertexSet& z2);

struct P2Check {
    Verdict verdict = Verdict::SKIPPED;
    std::optional<VertexSet> witness_y;  // the contained candidate on HOLDS
    std::optional<VertexSet> witness_x;  // the optimum containing it
    std::vector<VertexSet> all_dsets;    // the full optimum listing when enumerable
    int gamma = 0;
};

// Does some candidate sit inside some minimum dominating set of g?
P2Check check_P2(const Graph& g, const std::vector<VertexSet>& ys,
                 std::uint64_t oracle_budget = kDefaultOracleBudget);

struct SpecialSolve {
    VertexSet witness;
    StructuralClass cls = StructuralClass::INDEPENDENT;
    bool oracle_fallback = false;  // some component was not a path or cycle
    bool budget_hit = false;
};

// Minimum dominating set by closed form on path/cycle/isolated components;
// anything else is classified VIOLATED and solved by the search oracle.
SpecialSolve solve_special(const Graph& g, std::uint64_t oracle_budget = kDefaultOracleBudget);

/// One level of the cascade, everything in original input coordinates except
/// the stored derived graphs (which carry their own id maps).
struct LevelRecord {
    int level = 0;
    std::vector<int> orig_ids;  // graph_before local id -> original id
    Graph graph_before;
    VertexSet y_used;  // original ids
    bool y_from_fallback = false;
    std::optional<bool> preferred_candidate_available;
    bool final_level = false;  // y_used was returned directly (depth cap)
    Graph g_prime;
    Graph g_double_prime;
    VertexSet w_prime;         // original ids
    VertexSet w_double_prime;  // original ids
    Branch chosen_branch = Branch::DOUBLE_PRIME;
    StructuralClass structural_check = StructuralClass::INDEPENDENT;  // observed on g_double_prime
};

enum class SolveVerdict { MATCH, SUBOPTIMAL, NOT_DOMINATING, STRUCTURE_VIOLATION, ORACLE_SKIPPED };
std::string to_string(SolveVerdict v);

struct SolveConfig {
    bool all_y = false;  // try every minimum labeling at the top level, keep the best
    std::uint64_t oracle_budget = kDefaultOracleBudget;
    KOptions k;
    int depth_cap = 3;
};

struct SolveResult {
    VertexSet candidate;
    std::vector<LevelRecord> levels;
    bool dominates = false;
    std::optional<int> oracle_gamma;
    SolveVerdict verdict = SolveVerdict::ORACLE_SKIPPED;
    bool used_fallback = false;  // an oracle stood in for a failed labeling somewhere
    std::vector<std::pair<std::string, double>> runtime_ms;
};

// The three-level cascade for connected cubic graphs: extract a labeling
// candidate from the constructed graph, split into the two derived graphs,
// recurse on the first, solve the second by closed form, combine by size.
SolveResult solve_cubic(const Graph& g, const SolveConfig& cfg = {});

}  // namespace domstruct
