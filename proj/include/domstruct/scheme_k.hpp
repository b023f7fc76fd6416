#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "domstruct/cycles.hpp"
#include "domstruct/graph.hpp"

namespace domstruct {

enum class KStepKind { CUT_VERTEX, CYCLE_MOD2, CYCLE_MOD1 };

/// One edge-adding step of the construction, with everything needed to replay it.
struct KStep {
    KStepKind kind;
    int vertex = -1;  // the cut vertex v, or the chosen cycle vertex w / x
    std::optional<InducedCycle> cycle;
    EdgeList added;
    int k_before = 0;
    int k_after = 0;
};

// Joins the neighborhoods of cut vertex v: for every pair of components of
// g - v, every neighbor of v in one gets an edge to every neighbor in the other.
std::pair<Graph, KStep> step_cut_vertex(const Graph& g, int v);

// Repairs an induced cycle of length 2 mod 3: with cycle neighbors w1, w2 of w
// and a the next vertex after w2, adds {w1w2, w1a, wa}.
std::pair<Graph, KStep> step_cycle_mod2(const Graph& g, const InducedCycle& d2, int w);

// Repairs an induced cycle of length 1 mod 3: adds {x1x2, xa}.
std::pair<Graph, KStep> step_cycle_mod1(const Graph& g, const InducedCycle& d1, int x);

struct KPolicy {
    enum class Kind {
        CANONICAL,  // smallest cut vertex; (residue 2 first, shortest, lex) cycle; w = cycle minimum
        RANDOM,     // seeded uniform choices among the same candidate pools
    };
    Kind kind = Kind::CANONICAL;
    std::uint64_t seed = 0;
};

struct KOptions {
    KPolicy policy;
    long long max_iterations = 0;  // 0 means 10 * n^2
    CycleEnumerationOptions cycles;
};

struct KTrace {
    Graph input;
    Graph output;
    std::vector<KStep> steps;
    bool terminated = true;  // false when the iteration cap stopped the loop
    int iterations = 0;
};

// Runs the full construction: cut-vertex steps while any exist, then cycle
// repairs, rechecking both every sweep, until no cut vertex remains and every
// induced cycle has length 0 mod 3. Input must be connected.
KTrace construct_K(const Graph& g, const KOptions& opts = {});

// Re-applies the trace's steps to its input; equal to trace.output by construction.
Graph replay(const KTrace& trace);

}  // namespace domstruct
