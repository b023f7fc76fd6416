#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "domstruct/cycles.hpp"
#include "domstruct/graph.hpp"
#include "domstruct/oracle.hpp"
#include "domstruct/verdict.hpp"

namespace domstruct {

enum class LabelDirection { FORWARD, BACKWARD };

/// One labeling attempt: every third vertex along the structure's cycles,
/// phases propagated across seams from the start vertex's cycle outward.
struct Labeling {
    int start_vertex = -1;
    LabelDirection direction = LabelDirection::FORWARD;
    VertexSet labeled;
    std::vector<int> skipped_cycles;  // cycle indices left unlabeled (covered by others)
    bool consistent = true;           // no phase conflict was hit
    int conflicts = 0;
    int phase_rule_fired = 0;  // times a cycle's phase had to be carried over an unlabeled seam
};

struct LabelingSet {
    std::vector<Labeling> labelings;  // deduplicated by labeled set, enumeration order
    int raw_attempts = 0;
    int conflict_count = 0;  // attempts that hit at least one phase conflict
    int phase_rule_fired = 0;
};

// All labelings of domination structure h over kg: one attempt per
// (start vertex, direction), deduplicated. Throws input_error when h does
// not cover kg.
LabelingSet enumerate_labelings(const Graph& kg, const Structure& h);

struct DominationFilter {
    std::vector<VertexSet> sets;       // consistent labeled sets that dominate kg
    Verdict claim_all_dominate = Verdict::HOLDS;  // every consistent labeling dominates
};

DominationFilter dominating_labelings(const Graph& kg, const std::vector<Labeling>& labelings);

struct CandidateY {
    std::vector<VertexSet> candidates;  // minimum-size dominating labeled sets
    Verdict claim_reaches_optimum = Verdict::SKIPPED;  // some labeling is a d-set of kg
    std::optional<int> kg_gamma;
    bool oracle_budget_hit = false;
};

CandidateY candidate_Y(const Graph& kg, const std::vector<Labeling>& labelings,
                       std::uint64_t oracle_budget = kDefaultOracleBudget);

}  // namespace domstruct
