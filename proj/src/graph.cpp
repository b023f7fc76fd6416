#include "domstruct/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "domstruct/errors.hpp"

namespace domstruct {

Graph Graph::from_edges(int n, const EdgeList& edges) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u == v) throw input_error("loop edge " + std::to_string(u) + "-" + std::to_string(v));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw input_error("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return g;
}

int Graph::edge_count() const {
    size_t twice = 0;
    for (const auto& list : adj_) twice += list.size();
    return static_cast<int>(twice / 2);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (!has_vertex(v)) throw input_error("vertex id out of range: " + std::to_string(v));
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

EdgeList Graph::edges() const {
    EdgeList out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet set_union_of(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference_of(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection_of(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

bool is_subset_of(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

void require_valid_vertices(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (!g.has_vertex(v)) throw input_error("vertex id out of range: " + std::to_string(v));
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& w) {
    require_valid_vertices(g, w);
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : w) {
        in[v] = 1;
        for (int u : g.neighbors(v)) in[u] = 1;
    }
    VertexSet out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (in[v]) out.push_back(v);
    return out;
}

bool is_dominating(const Graph& g, const VertexSet& x) {
    return static_cast<int>(closed_neighborhood(g, x).size()) == g.vertex_count();
}

VertexSet cut_vertices(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int u : g.neighbors(v)) {
            if (u == parent) continue;  // simple graph: exactly one parent edge
            if (disc[u] != -1) {
                low[v] = std::min(low[v], disc[u]);
            } else {
                ++children;
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (parent != -1 && low[u] >= disc[v]) is_cut[v] = 1;
            }
        }
        if (parent == -1 && children > 1) is_cut[v] = 1;
    };

    for (int r = 0; r < n; ++r)
        if (disc[r] == -1) dfs(r, -1);

    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) out.push_back(v);
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        VertexSet members;
        std::vector<int> stack{s};
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u : g.neighbors(v)) {
                if (comp[u] == -1) {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;  // ordered by smallest member since seeds scan ascending
}

bool is_connected(const Graph& g) {
    return g.vertex_count() == 0 || components(g).size() == 1;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
    require_valid_vertices(g, s);
    const int n = g.vertex_count();
    InducedSubgraph out;
    out.new_of_old.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!set_contains(s, v)) {
            out.new_of_old[v] = static_cast<int>(out.old_of_new.size());
            out.old_of_new.push_back(v);
        }
    }
    EdgeList kept;
    for (const auto& [u, v] : g.edges())
        if (out.new_of_old[u] != -1 && out.new_of_old[v] != -1)
            kept.emplace_back(out.new_of_old[u], out.new_of_old[v]);
    out.graph = Graph::from_edges(static_cast<int>(out.old_of_new.size()), kept);
    return out;
}

AddEdgesResult add_edges(const Graph& g, const EdgeList& e) {
    AddEdgesResult out;
    EdgeList all = g.edges();
    for (const auto& [u, v] : e) {
        if (u == v) throw input_error("loop edge " + std::to_string(u) + "-" + std::to_string(v));
        if (!g.has_vertex(u) || !g.has_vertex(v))
            throw input_error("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
        if (g.has_edge(u, v)) ++out.duplicates;
        else all.emplace_back(std::min(u, v), std::max(u, v));
    }
    out.graph = Graph::from_edges(g.vertex_count(), all);
    return out;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    const int n = g.vertex_count();
    if (n == 0) {
        p.is_cubic = true;  // vacuous
        return p;
    }
    p.min_degree = g.degree(0);
    p.max_degree = g.degree(0);
    for (int v = 1; v < n; ++v) {
        p.min_degree = std::min(p.min_degree, g.degree(v));
        p.max_degree = std::max(p.max_degree, g.degree(v));
    }
    p.is_cubic = (p.min_degree == 3 && p.max_degree == 3);
    return p;
}

VertexSet map_to_old(const VertexSet& s, const std::vector<int>& old_of_new) {
    VertexSet out;
    out.reserve(s.size());
    for (int v : s) out.push_back(old_of_new.at(static_cast<size_t>(v)));
    return normalized(std::move(out));
}

}  // namespace domstruct
