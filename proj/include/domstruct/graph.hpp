#pragma once

#include <utility>
#include <vector>

namespace domstruct {

// Vertex subset as a sorted, duplicate-free id vector.
using VertexSet = std::vector<int>;

// Undirected edge, normalized to first < second.
using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;

/// Immutable simple undirected graph on dense vertex ids 0..n-1.
/// Adjacency lists are sorted; no loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n >= 0 ? static_cast<size_t>(n) : 0) {}

    // Builds a graph from an edge list; duplicate edges collapse silently.
    // Throws input_error on loops or out-of-range endpoints.
    static Graph from_edges(int n, const EdgeList& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_vertex(int v) const { return v >= 0 && v < vertex_count(); }
    bool has_edge(int u, int v) const;

    // All edges, normalized and sorted.
    EdgeList edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adj_;
};

// ---- sorted-vector set helpers ----------------------------------------

VertexSet set_union_of(const VertexSet& a, const VertexSet& b);
VertexSet set_difference_of(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection_of(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, int v);
bool is_subset_of(const VertexSet& a, const VertexSet& b);
VertexSet normalized(VertexSet s);  // sort + unique

// Throws input_error if any id of s is outside g.
void require_valid_vertices(const Graph& g, const VertexSet& s);

// ---- elementary operations ---------------------------------------------

// N[W] = W together with every neighbor of a W member.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& w);

// True iff N[X] covers every vertex.
bool is_dominating(const Graph& g, const VertexSet& x);

// Articulation points, found per component by DFS low-link.
VertexSet cut_vertices(const Graph& g);

// Connected components, ordered by smallest member id.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);  // n == 0 counts as connected

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_of_new;  // new id -> old id
    std::vector<int> new_of_old;  // old id -> new id, -1 on deleted vertices
};

// Induced subgraph on V \ s, with the id remapping in both directions.
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s);

struct AddEdgesResult {
    Graph graph;
    int duplicates = 0;  // requested edges that were already present
};

// Edge-set union; re-adding an existing edge is counted, not an error.
// Throws input_error on loops or out-of-range endpoints.
AddEdgesResult add_edges(const Graph& g, const EdgeList& e);

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    bool is_cubic = false;  // every vertex has degree exactly 3
};

DegreeProfile degree_profile(const Graph& g);

// Maps a vertex set through a new->old table (for lifting solver results
// on derived graphs back into host-graph coordinates).
VertexSet map_to_old(const VertexSet& s, const std::vector<int>& old_of_new);

}  // namespace domstruct
