#include "domstruct/scheme_k.hpp"

#include <algorithm>
#include <random>
#include <tuple>

#include "domstruct/errors.hpp"

namespace domstruct {

namespace {

int cycle_position(const InducedCycle& c, int v) {
    for (int i = 0; i < c.length(); ++i)
        if (c.vertices[i] == v) return i;
    return -1;
}

Edge mk_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

std::pair<Graph, KStep> step_cut_vertex(const Graph& g, int v) {
    if (!g.has_vertex(v)) throw input_error("vertex id out of range: " + std::to_string(v));
    if (!set_contains(cut_vertices(g), v))
        throw input_error("vertex " + std::to_string(v) + " is not a cut vertex");

    InducedSubgraph without = delete_vertices(g, VertexSet{v});
    std::vector<VertexSet> comps;
    for (const auto& c : components(without.graph)) comps.push_back(map_to_old(c, without.old_of_new));

    VertexSet nv = g.neighbors(v);
    EdgeList added;
    for (size_t i = 0; i < comps.size(); ++i) {
        VertexSet ni = set_intersection_of(nv, comps[i]);
        for (size_t j = i + 1; j < comps.size(); ++j) {
            VertexSet nj = set_intersection_of(nv, comps[j]);
            for (int a : ni)
                for (int b : nj) added.push_back(mk_edge(a, b));
        }
    }
    std::sort(added.begin(), added.end());
    added.erase(std::unique(added.begin(), added.end()), added.end());

    KStep step{KStepKind::CUT_VERTEX, v, std::nullopt, added, 0, 0};
    return {add_edges(g, added).graph, step};
}

std::pair<Graph, KStep> step_cycle_mod2(const Graph& g, const InducedCycle& d2, int w) {
    if (d2.residue() != 2) throw input_error("cycle length must be 2 mod 3");
    if (!cycle_valid_in(g, d2)) throw input_error("cycle is not induced in the graph");
    const int i = cycle_position(d2, w);
    if (i < 0) throw input_error("vertex " + std::to_string(w) + " is not on the cycle");

    const int len = d2.length();
    const int w1 = d2.vertices[(i - 1 + len) % len];
    const int w2 = d2.vertices[(i + 1) % len];
    const int alpha = d2.vertices[(i + 2) % len];  // w1-w-w2-alpha along the cycle

    EdgeList added{mk_edge(w1, w2), mk_edge(w1, alpha), mk_edge(w, alpha)};
    std::sort(added.begin(), added.end());
    KStep step{KStepKind::CYCLE_MOD2, w, d2, added, 0, 0};
    return {add_edges(g, added).graph, step};
}

std::pair<Graph, KStep> step_cycle_mod1(const Graph& g, const InducedCycle& d1, int x) {
    if (d1.residue() != 1) throw input_error("cycle length must be 1 mod 3");
    if (!cycle_valid_in(g, d1)) throw input_error("cycle is not induced in the graph");
    const int i = cycle_position(d1, x);
    if (i < 0) throw input_error("vertex " + std::to_string(x) + " is not on the cycle");

    const int len = d1.length();
    const int x1 = d1.vertices[(i - 1 + len) % len];
    const int x2 = d1.vertices[(i + 1) % len];
    const int alpha = d1.vertices[(i + 2) % len];

    EdgeList added{mk_edge(x1, x2), mk_edge(x, alpha)};
    std::sort(added.begin(), added.end());
    KStep step{KStepKind::CYCLE_MOD1, x, d1, added, 0, 0};
    return {add_edges(g, added).graph, step};
}

KTrace construct_K(const Graph& g, const KOptions& opts) {
    if (!is_connected(g))
        throw input_error("construction needs a connected graph; apply it per component");

    KTrace trace;
    trace.input = g;
    const long long n = g.vertex_count();
    const long long cap = opts.max_iterations > 0 ? opts.max_iterations : std::max<long long>(1, 10 * n * n);
    std::mt19937_64 rng(opts.policy.seed);
    auto pick = [&](size_t size) -> size_t {
        return opts.policy.kind == KPolicy::Kind::RANDOM ? rng() % size : 0;
    };

    Graph cur = g;
    while (true) {
        VertexSet cuts = cut_vertices(cur);
        const InducedCycle* chosen_cycle = nullptr;
        std::vector<InducedCycle> offenders;
        if (cuts.empty()) {
            for (auto& c : enumerate_induced_cycles(cur, opts.cycles))
                if (c.residue() != 0) offenders.push_back(std::move(c));
            if (offenders.empty()) break;  // no cut vertex, all cycles 0 mod 3
            // residue 2 before residue 1, then shortest, then lexicographic
            std::sort(offenders.begin(), offenders.end(),
                      [](const InducedCycle& a, const InducedCycle& b) {
                          return std::tuple(a.residue() != 2, a.length(), a.vertices) <
                                 std::tuple(b.residue() != 2, b.length(), b.vertices);
                      });
            chosen_cycle = &offenders[pick(offenders.size())];
        }
        if (trace.iterations >= cap) {
            trace.terminated = false;
            break;
        }

        std::pair<Graph, KStep> applied = [&] {
            if (!cuts.empty()) return step_cut_vertex(cur, cuts[pick(cuts.size())]);
            const InducedCycle& c = *chosen_cycle;
            const int v = c.vertices[pick(static_cast<size_t>(c.length()))];
            return c.residue() == 2 ? step_cycle_mod2(cur, c, v) : step_cycle_mod1(cur, c, v);
        }();
        applied.second.k_before = trace.iterations;
        applied.second.k_after = trace.iterations + 1;
        cur = std::move(applied.first);
        trace.steps.push_back(std::move(applied.second));
        ++trace.iterations;
    }
    trace.output = std::move(cur);
    return trace;
}

Graph replay(const KTrace& trace) {
    Graph cur = trace.input;
    for (const auto& step : trace.steps) cur = add_edges(cur, step.added).graph;
    return cur;
}

}  // namespace domstruct
