#include "domstruct/labeling.hpp"

#include <algorithm>
#include <map>

#include "domstruct/errors.hpp"

namespace domstruct {

namespace {

struct StructureIndex {
    int n = 0;
    std::vector<std::vector<int>> position;  // position[i][v] = index of v on cycle i, -1 off
    std::vector<char> skip_eligible;         // every vertex also lies on another cycle
    std::vector<std::vector<int>> seam_adj;

    StructureIndex(const Graph& kg, const Structure& h) : n(kg.vertex_count()) {
        const int m = static_cast<int>(h.cycles.size());
        position.assign(m, std::vector<int>(n, -1));
        for (int i = 0; i < m; ++i)
            for (int p = 0; p < h.cycles[i].length(); ++p)
                position[i][h.cycles[i].vertices[p]] = p;

        std::vector<int> cover_count(n, 0);
        for (int i = 0; i < m; ++i)
            for (int v : h.cycles[i].vertices) ++cover_count[v];
        skip_eligible.assign(m, 1);
        for (int i = 0; i < m; ++i)
            for (int v : h.cycles[i].vertices)
                if (cover_count[v] < 2) skip_eligible[i] = 0;

        seam_adj.assign(m, {});
        for (const auto& [a, b] : h.seam_edges) {
            seam_adj[a].push_back(b);
            seam_adj[b].push_back(a);
        }
        for (auto& list : seam_adj) std::sort(list.begin(), list.end());
    }
};

Labeling attempt_labeling(const Structure& h, const StructureIndex& ix, int start,
                          LabelDirection dir) {
    Labeling lab;
    lab.start_vertex = start;
    lab.direction = dir;

    const int m = static_cast<int>(h.cycles.size());
    std::vector<char> labeled(ix.n, 0), processed(m, 0);

    auto label_phase = [&](int ci, int phase) {
        const auto& cyc = h.cycles[ci].vertices;
        for (int p = phase % 3; p < static_cast<int>(cyc.size()); p += 3) labeled[cyc[p]] = 1;
    };

    int start_cycle = -1;
    for (int i = 0; i < m; ++i) {
        if (ix.position[i][start] != -1) {
            start_cycle = i;
            break;
        }
    }
    label_phase(start_cycle, ix.position[start_cycle][start] % 3);
    processed[start_cycle] = 1;

    auto labeled_positions = [&](int ci) {
        std::vector<int> pos;
        const auto& cyc = h.cycles[ci].vertices;
        for (int p = 0; p < static_cast<int>(cyc.size()); ++p)
            if (labeled[cyc[p]]) pos.push_back(p);
        return pos;
    };

    for (int done = 1; done < m; ++done) {
        // Cycles that already carry a label fix their own phase.
        int next = -1;
        for (int i = 0; i < m && next == -1; ++i)
            if (!processed[i] && !labeled_positions(i).empty()) next = i;
        if (next != -1) {
            std::vector<int> pos = labeled_positions(next);
            const int phase = pos.front() % 3;
            for (int p : pos) {
                if (p % 3 != phase) {
                    ++lab.conflicts;
                    lab.consistent = false;
                    break;
                }
            }
            label_phase(next, phase);
            processed[next] = 1;
            continue;
        }

        // Otherwise pick a seam neighbor of the processed region. A cycle whose
        // vertices all lie on other cycles needs no labels of its own.
        int parent = -1;
        for (int i = 0; i < m && next == -1; ++i) {
            if (processed[i]) continue;
            for (int j : ix.seam_adj[i]) {
                if (processed[j]) {
                    next = i;
                    parent = j;
                    break;
                }
            }
        }
        if (next == -1) {  // disconnected seam graph; treat the rest as fresh starts
            for (int i = 0; i < m; ++i)
                if (!processed[i]) {
                    next = i;
                    break;
                }
            parent = -1;
        }
        if (ix.skip_eligible[next]) {
            lab.skipped_cycles.push_back(next);
            processed[next] = 1;
            continue;
        }

        // Seam phase rule: continue 3-periodicity from the nearest labeled
        // vertex on the parent, entering through the closest shared vertex.
        int anchor_phase = 0;
        if (parent != -1) {
            std::vector<int> parent_labels = labeled_positions(parent);
            const int lp = h.cycles[parent].length();
            int best_dist = -1, best_u = -1, best_fwd = 0, best_bwd = 0;
            for (int v : h.cycles[next].vertices) {
                const int pu = ix.position[parent][v];
                if (pu == -1) continue;
                int fwd = lp, bwd = lp;
                for (int q : parent_labels) {
                    fwd = std::min(fwd, (q - pu + lp) % lp);
                    bwd = std::min(bwd, (pu - q + lp) % lp);
                }
                const int d = std::min(fwd, bwd);
                if (best_dist == -1 || d < best_dist || (d == best_dist && v < best_u)) {
                    best_dist = d;
                    best_u = v;
                    best_fwd = fwd;
                    best_bwd = bwd;
                }
            }
            if (best_u != -1 && !parent_labels.empty()) {
                const int offset = dir == LabelDirection::FORWARD ? best_fwd : best_bwd;
                const int pu_next = ix.position[next][best_u];
                anchor_phase = dir == LabelDirection::FORWARD ? (pu_next + offset) % 3
                                                              : ((pu_next - offset) % 3 + 3) % 3;
            }
        }
        ++lab.phase_rule_fired;
        label_phase(next, anchor_phase);
        processed[next] = 1;
    }

    for (int v = 0; v < ix.n; ++v)
        if (labeled[v]) lab.labeled.push_back(v);
    std::sort(lab.skipped_cycles.begin(), lab.skipped_cycles.end());
    return lab;
}

}  // namespace

LabelingSet enumerate_labelings(const Graph& kg, const Structure& h) {
    if (!is_domination_structure(kg, h))
        throw input_error("labeling needs a domination structure covering the whole graph");

    LabelingSet out;
    if (kg.vertex_count() == 0) return out;

    StructureIndex ix(kg, h);
    std::map<VertexSet, size_t> seen;  // labeled set -> index in out.labelings
    for (int s = 0; s < kg.vertex_count(); ++s) {
        for (LabelDirection dir : {LabelDirection::FORWARD, LabelDirection::BACKWARD}) {
            Labeling lab = attempt_labeling(h, ix, s, dir);
            ++out.raw_attempts;
            if (!lab.consistent) ++out.conflict_count;
            out.phase_rule_fired += lab.phase_rule_fired;

            auto [it, inserted] = seen.try_emplace(lab.labeled, out.labelings.size());
            if (inserted) {
                out.labelings.push_back(std::move(lab));
            } else if (lab.consistent && !out.labelings[it->second].consistent) {
                out.labelings[it->second] = std::move(lab);  // prefer the clean attempt
            }
        }
    }
    return out;
}

DominationFilter dominating_labelings(const Graph& kg, const std::vector<Labeling>& labelings) {
    DominationFilter out;
    for (const auto& lab : labelings) {
        if (!lab.consistent) continue;
        if (is_dominating(kg, lab.labeled)) out.sets.push_back(lab.labeled);
        else out.claim_all_dominate = Verdict::REFUTED;
    }
    return out;
}

CandidateY candidate_Y(const Graph& kg, const std::vector<Labeling>& labelings,
                       std::uint64_t oracle_budget) {
    CandidateY out;
    if (kg.vertex_count() == 0) {
        out.candidates.push_back({});
        out.claim_reaches_optimum = Verdict::HOLDS;
        out.kg_gamma = 0;
        return out;
    }

    DominationFilter dom = dominating_labelings(kg, labelings);
    if (dom.sets.empty()) {
        out.claim_reaches_optimum = Verdict::REFUTED;  // nothing dominates, so nothing is a d-set
        return out;
    }
    size_t best = dom.sets.front().size();
    for (const auto& s : dom.sets) best = std::min(best, s.size());
    for (const auto& s : dom.sets)
        if (s.size() == best) out.candidates.push_back(s);

    OracleResult oracle = min_dominating_set_exact(kg, oracle_budget);
    if (oracle.budget_hit) {
        out.oracle_budget_hit = true;
        out.claim_reaches_optimum = Verdict::SKIPPED;
        return out;
    }
    out.kg_gamma = oracle.gamma;
    out.claim_reaches_optimum =
        static_cast<int>(best) == oracle.gamma ? Verdict::HOLDS : Verdict::REFUTED;
    return out;
}

}  // namespace domstruct
