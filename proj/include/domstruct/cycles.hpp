#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "domstruct/graph.hpp"

namespace domstruct {

/// Chordless cycle in canonical form: the smallest vertex comes first and
/// its smaller cycle-neighbor second, so rotations and reflections compare equal.
struct InducedCycle {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    int residue() const { return length() % 3; }

    auto operator<=>(const InducedCycle&) const = default;
};

// Canonicalizes a cyclic vertex order (no validation against any graph).
InducedCycle make_cycle(std::vector<int> vertices);

// Full validity check: length >= 3, consecutive adjacency, chordless.
bool cycle_valid_in(const Graph& g, const InducedCycle& c);

struct CycleEnumerationOptions {
    int max_length = 0;              // 0 means the host graph's vertex count
    long long max_cycles = 1000000;  // throws budget_error beyond this
};

// Every chordless cycle of length <= max_length, each once, sorted by
// (length, vertex sequence). DFS path extension with chord pruning.
std::vector<InducedCycle> enumerate_induced_cycles(const Graph& g,
                                                   const CycleEnumerationOptions& opts = {});

// True iff the two cycles' intersection (shared vertices plus edges lying on
// both cycles) is exactly one path. A single shared vertex counts as a
// trivial path unless allow_trivial_path is false.
bool connecting_without_seams(const InducedCycle& a, const InducedCycle& b, const Graph& g,
                              bool allow_trivial_path = true);

/// Seam-connected family of induced cycles of length 0 mod 3.
struct Structure {
    std::vector<InducedCycle> cycles;             // sorted by (length, sequence)
    std::vector<std::pair<int, int>> seam_edges;  // index pairs i < j into cycles
    bool maximal = true;

    VertexSet vertex_union() const;
    bool seam_connected() const;  // seam graph connected (vacuous for one cycle)
};

// All maximal seam-connected families of 0-mod-3 induced cycles, each family a
// connected component of the seam graph; deterministic order (by first cycle).
std::vector<Structure> find_structures(const Graph& g, const CycleEnumerationOptions& opts = {},
                                       bool allow_trivial_path = true);

// True iff h's cycles jointly cover every vertex of g.
bool is_domination_structure(const Graph& g, const Structure& h);

struct Mod3Check {
    bool all_mod3 = true;
    std::optional<InducedCycle> offender;  // smallest offending cycle if any
};

Mod3Check all_induced_cycles_mod3(const Graph& g, const CycleEnumerationOptions& opts = {});

}  // namespace domstruct
