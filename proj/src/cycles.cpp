#include "domstruct/cycles.hpp"

#include <algorithm>
#include <functional>

#include "domstruct/errors.hpp"

namespace domstruct {

namespace {

bool cycle_less(const InducedCycle& a, const InducedCycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
}

}  // namespace

InducedCycle make_cycle(std::vector<int> vertices) {
    const int len = static_cast<int>(vertices.size());
    if (len < 3) throw input_error("cycle needs at least 3 vertices");
    {
        auto copy = vertices;
        std::sort(copy.begin(), copy.end());
        if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
            throw input_error("cycle vertices must be distinct");
    }
    const auto min_it = std::min_element(vertices.begin(), vertices.end());
    const int start = static_cast<int>(min_it - vertices.begin());

    std::vector<int> fwd(len), bwd(len);
    for (int i = 0; i < len; ++i) {
        fwd[i] = vertices[(start + i) % len];
        bwd[i] = vertices[(start - i + len) % len];
    }
    return InducedCycle{fwd <= bwd ? std::move(fwd) : std::move(bwd)};
}

bool cycle_valid_in(const Graph& g, const InducedCycle& c) {
    const int len = c.length();
    if (len < 3) return false;
    for (int v : c.vertices)
        if (!g.has_vertex(v)) return false;
    for (int i = 0; i < len; ++i) {
        for (int j = i + 1; j < len; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.has_edge(c.vertices[i], c.vertices[j]) != consecutive) return false;
        }
    }
    return true;
}

std::vector<InducedCycle> enumerate_induced_cycles(const Graph& g,
                                                   const CycleEnumerationOptions& opts) {
    const int n = g.vertex_count();
    const int max_len = opts.max_length > 0 ? std::min(opts.max_length, n) : n;
    std::vector<InducedCycle> out;
    if (max_len < 3) return out;

    std::vector<int> path;
    std::vector<char> on_path(n, 0);

    // Grows paths s=v0,v1,...,vk with every vi > s where only consecutive path
    // vertices are adjacent. A candidate adjacent to s closes a chordless
    // cycle and is never interior; canonical direction is fixed by v1 < vk.
    std::function<void(int)> extend = [&](int s) {
        const int last = path.back();
        for (int u : g.neighbors(last)) {
            if (u <= s || on_path[u]) continue;
            bool chord = false;
            for (size_t i = 1; i + 1 < path.size(); ++i) {
                if (g.has_edge(u, path[i])) {
                    chord = true;
                    break;
                }
            }
            if (chord) continue;
            if (g.has_edge(u, s)) {
                if (path.size() >= 2 && path[1] < u &&
                    static_cast<int>(path.size()) + 1 <= max_len) {
                    std::vector<int> cyc = path;
                    cyc.push_back(u);
                    out.push_back(make_cycle(std::move(cyc)));
                    if (static_cast<long long>(out.size()) > opts.max_cycles)
                        throw budget_error("induced cycle enumeration exceeded its output cap",
                                           opts.max_cycles);
                }
                continue;
            }
            if (static_cast<int>(path.size()) + 1 >= max_len) continue;
            path.push_back(u);
            on_path[u] = 1;
            extend(s);
            path.pop_back();
            on_path[u] = 0;
        }
    };

    for (int s = 0; s < n; ++s) {
        on_path[s] = 1;
        for (int v1 : g.neighbors(s)) {
            if (v1 <= s) continue;
            path = {s, v1};
            on_path[v1] = 1;
            extend(s);
            on_path[v1] = 0;
        }
        on_path[s] = 0;
    }

    std::sort(out.begin(), out.end(), cycle_less);
    return out;
}

bool connecting_without_seams(const InducedCycle& a, const InducedCycle& b, const Graph& g,
                              bool allow_trivial_path) {
    for (int v : a.vertices)
        if (!g.has_vertex(v)) throw input_error("cycle vertex out of range: " + std::to_string(v));
    for (int v : b.vertices)
        if (!g.has_vertex(v)) throw input_error("cycle vertex out of range: " + std::to_string(v));

    VertexSet va = normalized(a.vertices);
    VertexSet vb = normalized(b.vertices);
    VertexSet shared = set_intersection_of(va, vb);
    if (shared.empty()) return false;

    auto cycle_edges = [](const InducedCycle& c) {
        EdgeList e;
        const int len = c.length();
        for (int i = 0; i < len; ++i) {
            int u = c.vertices[i], v = c.vertices[(i + 1) % len];
            e.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(e.begin(), e.end());
        return e;
    };
    EdgeList ea = cycle_edges(a), eb = cycle_edges(b);
    EdgeList common;
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(common));

    if (shared.size() == 1) return allow_trivial_path;

    // One path: connected, acyclic, max degree <= 2 over the shared subgraph.
    if (common.size() != shared.size() - 1) return false;  // tree edge count
    std::vector<int> deg(shared.size(), 0);
    auto index_of = [&](int v) {
        return static_cast<int>(std::lower_bound(shared.begin(), shared.end(), v) - shared.begin());
    };
    std::vector<std::vector<int>> adj(shared.size());
    for (const auto& [u, v] : common) {
        int iu = index_of(u), iv = index_of(v);
        ++deg[iu];
        ++deg[iv];
        adj[iu].push_back(iv);
        adj[iv].push_back(iu);
    }
    for (int d : deg)
        if (d > 2) return false;
    std::vector<char> seen(shared.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == shared.size();
}

VertexSet Structure::vertex_union() const {
    VertexSet out;
    for (const auto& c : cycles) out = set_union_of(out, normalized(c.vertices));
    return out;
}

bool Structure::seam_connected() const {
    if (cycles.size() <= 1) return true;
    std::vector<std::vector<int>> adj(cycles.size());
    for (const auto& [i, j] : seam_edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<char> seen(cycles.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == cycles.size();
}

std::vector<Structure> find_structures(const Graph& g, const CycleEnumerationOptions& opts,
                                       bool allow_trivial_path) {
    std::vector<InducedCycle> zero;
    for (auto& c : enumerate_induced_cycles(g, opts))
        if (c.residue() == 0) zero.push_back(std::move(c));

    const int m = static_cast<int>(zero.size());
    std::vector<std::pair<int, int>> seams;
    std::vector<int> comp(m, -1);
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (connecting_without_seams(zero[i], zero[j], g, allow_trivial_path)) {
                seams.emplace_back(i, j);
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    std::vector<Structure> out;
    for (int s = 0; s < m; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> members;
        std::vector<int> stack{s};
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u : adj[v]) {
                if (comp[u] == -1) {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
            }
        }
        std::sort(members.begin(), members.end());
        Structure st;
        std::vector<int> local(m, -1);
        for (size_t k = 0; k < members.size(); ++k) {
            local[members[k]] = static_cast<int>(k);
            st.cycles.push_back(zero[members[k]]);
        }
        for (const auto& [i, j] : seams)
            if (comp[i] == comp[s] && comp[j] == comp[s])
                st.seam_edges.emplace_back(local[i], local[j]);
        std::sort(st.seam_edges.begin(), st.seam_edges.end());
        out.push_back(std::move(st));
    }
    return out;  // ordered by smallest cycle since zero[] is sorted
}

bool is_domination_structure(const Graph& g, const Structure& h) {
    VertexSet all(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<size_t>(v)] = v;
    return h.vertex_union() == all;
}

Mod3Check all_induced_cycles_mod3(const Graph& g, const CycleEnumerationOptions& opts) {
    Mod3Check res;
    for (auto& c : enumerate_induced_cycles(g, opts)) {
        if (c.residue() != 0) {
            res.all_mod3 = false;
            res.offender = std::move(c);
            break;
        }
    }
    return res;
}

}  // namespace domstruct
