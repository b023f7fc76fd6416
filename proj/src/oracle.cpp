#include "domstruct/oracle.hpp"

#include <algorithm>
#include <bit>

#include "domstruct/errors.hpp"

namespace domstruct {

namespace {

// Closed-neighborhood cover masks, 64 vertices per word.
struct CoverContext {
    int n = 0;
    int words = 0;
    std::vector<std::vector<std::uint64_t>> mask;  // mask[v] = bits of N[v]
    std::vector<int> max_dominator;                // largest id that covers v
    int max_options = 1;                           // maxdeg + 1

    explicit CoverContext(const Graph& g) : n(g.vertex_count()) {
        words = (n + 63) / 64;
        mask.assign(n, std::vector<std::uint64_t>(words, 0));
        max_dominator.assign(n, 0);
        for (int v = 0; v < n; ++v) {
            auto set_bit = [&](int u) { mask[v][u / 64] |= std::uint64_t{1} << (u % 64); };
            set_bit(v);
            int hi = v;
            for (int u : g.neighbors(v)) {
                set_bit(u);
                hi = std::max(hi, u);
            }
            max_dominator[v] = hi;
            max_options = std::max(max_options, g.degree(v) + 1);
        }
    }

    bool full(const std::vector<std::uint64_t>& covered) const {
        for (int w = 0; w < words; ++w) {
            std::uint64_t want = (w == words - 1 && n % 64) ? ((std::uint64_t{1} << (n % 64)) - 1)
                                                            : ~std::uint64_t{0};
            if (n == 0) want = 0;
            if ((covered[w] & want) != want) return false;
        }
        return true;
    }

    bool covered_bit(const std::vector<std::uint64_t>& covered, int v) const {
        return (covered[v / 64] >> (v % 64)) & 1;
    }

    int uncovered_count(const std::vector<std::uint64_t>& covered) const {
        int cnt = 0;
        for (int w = 0; w < words; ++w) cnt += std::popcount(covered[w]);
        return n - cnt;
    }

    void add(std::vector<std::uint64_t>& covered, int v) const {
        for (int w = 0; w < words; ++w) covered[w] |= mask[v][w];
    }
};

struct NodeBudget {
    std::uint64_t limit;
    std::uint64_t used = 0;
    bool exhausted = false;

    bool tick() {
        if (used >= limit) {
            exhausted = true;
            return false;
        }
        ++used;
        return true;
    }
};

VertexSet greedy_dominating(const CoverContext& ctx) {
    VertexSet chosen;
    std::vector<std::uint64_t> covered(ctx.words, 0);
    while (!ctx.full(covered)) {
        int best = -1, best_gain = -1;
        for (int v = 0; v < ctx.n; ++v) {
            int gain = 0;
            for (int w = 0; w < ctx.words; ++w)
                gain += std::popcount(ctx.mask[v][w] & ~covered[w]);
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        chosen.push_back(best);
        ctx.add(covered, best);
    }
    return normalized(std::move(chosen));
}

// Depth-limited existence search branching on the uncovered vertex with the
// fewest dominator options; candidate dominators tried in id order.
bool exists_dominating(const Graph& g, const CoverContext& ctx, NodeBudget& budget,
                       std::vector<std::uint64_t>& covered, VertexSet& chosen, int slots,
                       VertexSet& witness) {
    if (!budget.tick()) return false;
    if (ctx.full(covered)) {
        witness = normalized(chosen);
        return true;
    }
    if (slots == 0) return false;
    if (ctx.uncovered_count(covered) > slots * ctx.max_options) return false;

    int branch = -1, branch_options = ctx.max_options + 1;
    for (int v = 0; v < ctx.n; ++v) {
        if (ctx.covered_bit(covered, v)) continue;
        int options = g.degree(v) + 1;
        if (options < branch_options) {
            branch_options = options;
            branch = v;
        }
    }
    std::vector<int> candidates = g.neighbors(branch);
    candidates.push_back(branch);
    std::sort(candidates.begin(), candidates.end());
    for (int u : candidates) {
        std::vector<std::uint64_t> saved = covered;
        ctx.add(covered, u);
        chosen.push_back(u);
        if (exists_dominating(g, ctx, budget, covered, chosen, slots - 1, witness)) return true;
        chosen.pop_back();
        covered = saved;
        if (budget.exhausted) return false;
    }
    return false;
}

// Enumerates dominating sets of size exactly k in lexicographic order of their
// sorted member lists. Returns false once the visitor asks to stop.
template <typename Visitor>
bool lex_combinations(const CoverContext& ctx, NodeBudget& budget, std::vector<std::uint64_t>& covered,
                      VertexSet& chosen, int next, int k, Visitor&& visit) {
    if (!budget.tick()) return false;
    if (static_cast<int>(chosen.size()) == k) {
        if (ctx.full(covered)) return visit(chosen);
        return true;
    }
    const int slots = k - static_cast<int>(chosen.size());
    if (ctx.uncovered_count(covered) > slots * ctx.max_options) return true;
    for (int v = 0; v < ctx.n; ++v)
        if (!ctx.covered_bit(covered, v) && ctx.max_dominator[v] < next) return true;  // unreachable

    for (int u = next; u <= ctx.n - slots; ++u) {
        std::vector<std::uint64_t> saved = covered;
        ctx.add(covered, u);
        chosen.push_back(u);
        bool go_on = lex_combinations(ctx, budget, covered, chosen, u + 1, k,
                                      std::forward<Visitor>(visit));
        chosen.pop_back();
        covered = saved;
        if (!go_on || budget.exhausted) return false;
    }
    return true;
}

}  // namespace

OracleResult min_dominating_set_exact(const Graph& g, std::uint64_t node_budget) {
    OracleResult res;
    const int n = g.vertex_count();
    if (n == 0) return res;

    CoverContext ctx(g);
    NodeBudget budget{node_budget};
    VertexSet ub_set = greedy_dominating(ctx);
    const int lb = (n + ctx.max_options - 1) / ctx.max_options;

    int gamma = static_cast<int>(ub_set.size());
    VertexSet witness = ub_set;
    for (int k = lb; k < static_cast<int>(ub_set.size()); ++k) {
        std::vector<std::uint64_t> covered(ctx.words, 0);
        VertexSet chosen, found;
        if (exists_dominating(g, ctx, budget, covered, chosen, k, found)) {
            gamma = k;
            witness = found;
            break;
        }
        if (budget.exhausted) {
            res.gamma = static_cast<int>(ub_set.size());
            res.witness = ub_set;
            res.nodes_explored = budget.used;
            res.budget_hit = true;
            return res;
        }
    }

    // Lexicographic pass: first dominating k-subset in combination order.
    std::vector<std::uint64_t> covered(ctx.words, 0);
    VertexSet chosen;
    VertexSet lex_witness;
    lex_combinations(ctx, budget, covered, chosen, 0, gamma, [&](const VertexSet& s) {
        lex_witness = s;
        return false;  // stop at the first hit
    });
    if (!lex_witness.empty()) witness = lex_witness;

    res.gamma = gamma;  // exact: every smaller depth was exhausted above
    res.witness = witness;
    res.nodes_explored = budget.used;
    return res;
}

DsetEnumeration enumerate_all_dsets(const Graph& g, std::uint64_t node_budget) {
    DsetEnumeration out;
    OracleResult base = min_dominating_set_exact(g, node_budget);
    out.gamma = base.gamma;
    out.nodes_explored = base.nodes_explored;
    if (base.budget_hit) return out;  // complete stays false

    CoverContext ctx(g);
    NodeBudget budget{node_budget};
    std::vector<std::uint64_t> covered(ctx.words, 0);
    VertexSet chosen;
    lex_combinations(ctx, budget, covered, chosen, 0, base.gamma, [&](const VertexSet& s) {
        out.sets.push_back(s);
        return true;
    });
    out.nodes_explored += budget.used;
    out.complete = !budget.exhausted;
    return out;
}

int gamma_path(int n) {
    if (n < 1) throw input_error("path needs at least one vertex");
    return (n + 2) / 3;
}

int gamma_cycle(int n) {
    if (n < 3) throw input_error("cycle needs at least three vertices");
    return (n + 2) / 3;
}

VertexSet path_dset_witness(int n) {
    if (n < 1) throw input_error("path needs at least one vertex");
    VertexSet w;
    for (int i = 1; i < n; i += 3) w.push_back(i);
    if (n % 3 == 1) w.push_back(n - 1);
    return normalized(std::move(w));
}

VertexSet cycle_dset_witness(int n) {
    if (n < 3) throw input_error("cycle needs at least three vertices");
    VertexSet w;
    const int k = gamma_cycle(n);
    for (int i = 0; i < k; ++i) w.push_back(3 * i);
    return w;
}

MinimalityCheck is_minimal_dominating(const Graph& g, const VertexSet& x) {
    MinimalityCheck res;
    require_valid_vertices(g, x);
    if (!is_dominating(g, x)) return res;
    res.dominating = true;
    for (int v : x) {
        VertexSet smaller = set_difference_of(x, VertexSet{v});
        if (is_dominating(g, smaller)) return res;  // v was redundant
    }
    res.minimal_dominating = true;
    return res;
}

RemarkCheck check_remark_R(const Graph& g, const VertexSet& x, std::uint64_t node_budget) {
    RemarkCheck res;
    require_valid_vertices(g, x);
    if (!is_dominating(g, x)) throw input_error("remark check requires a dominating set");
    if (static_cast<int>(x.size()) > kRemarkSubsetCap) {
        res.budget_hit = true;
        return res;  // SKIPPED
    }

    OracleResult whole = min_dominating_set_exact(g, node_budget);
    if (whole.budget_hit) {
        res.budget_hit = true;
        return res;
    }
    res.right_holds = static_cast<int>(x.size()) == whole.gamma;

    res.left_holds = true;
    const int k = static_cast<int>(x.size());
    VertexSet all(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<size_t>(v)] = v;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        VertexSet d;
        for (int i = 0; i < k; ++i)
            if ((bits >> i) & 1) d.push_back(x[static_cast<size_t>(i)]);
        VertexSet hood = closed_neighborhood(g, d);
        InducedSubgraph sub = delete_vertices(g, set_difference_of(all, hood));
        OracleResult r = min_dominating_set_exact(sub.graph, node_budget);
        if (r.budget_hit) {
            res.budget_hit = true;
            return res;
        }
        if (r.gamma != static_cast<int>(d.size())) {
            res.left_holds = false;
            res.offending_subset = d;
            break;
        }
    }

    res.verdict = (res.left_holds == res.right_holds) ? Verdict::HOLDS : Verdict::REFUTED;
    return res;
}

}  // namespace domstruct
