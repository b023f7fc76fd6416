#include "domstruct/harness.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "domstruct/errors.hpp"
#include "domstruct/labeling.hpp"
#include "domstruct/pipeline.hpp"

namespace domstruct {

namespace {

std::string join_ids(const VertexSet& s) {
    std::ostringstream out;
    for (size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    return out.str();
}

}  // namespace

Graph random_cubic(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw input_error("cubic graphs need an even vertex count >= 4");

    constexpr int kMaxAttempts = 100000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt));
        std::vector<int> stubs;
        stubs.reserve(3 * static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < 3; ++k) stubs.push_back(v);
        // Fisher-Yates with an explicit draw so results do not depend on any
        // library's distribution implementation.
        for (size_t i = stubs.size() - 1; i > 0; --i) {
            size_t j = static_cast<size_t>(rng() % (i + 1));
            std::swap(stubs[i], stubs[j]);
        }
        EdgeList edges;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) ok = false;
            else edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        Graph g = Graph::from_edges(n, edges);
        if (!is_connected(g)) continue;
        return g;
    }
    throw generation_error("could not generate a connected cubic graph within the retry cap");
}

ReportDocument verify_graph(const Graph& g, const RunConfig& cfg, const std::string& graph_id,
                            const std::string& input_format) {
    ReportDocument doc;
    doc.graph_id = graph_id;
    doc.input_format = input_format;
    doc.n = g.vertex_count();
    doc.m = g.edge_count();

    auto claim = [&](const std::string& name, Verdict v, const std::string& details) {
        doc.claims.push_back({name, v, details});
    };
    auto skip_all = [&](const std::string& reason) {
        for (const char* name :
             {"construction_two_connected", "construction_cycles_mod3",
              "construction_unique_structure", "labeling_count_bound", "labeling_all_dominate",
              "labeling_reaches_optimum", "labeling_independent_in_host",
              "candidate_extends_to_optimum", "split_combine_optimal", "split_paths_cycles",
              "split_paths", "split_independent", "pipeline_candidate_optimal"})
            claim(name, Verdict::SKIPPED, reason);
    };

    if (doc.n == 0) {
        skip_all("empty graph");
        return doc;
    }
    if (!is_connected(g)) {
        skip_all("input graph is disconnected; run per component");
        return doc;
    }

    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t) {
        return std::chrono::duration<double, std::milli>(clock::now() - t).count();
    };
    std::vector<std::pair<std::string, double>> runtimes;

    KOptions kopts;
    kopts.policy = cfg.policy;
    kopts.max_iterations = cfg.max_iterations;
    kopts.cycles = cfg.cycles;

    // -- construction claims ------------------------------------------------
    KTrace kt;
    bool have_kt = false;
    auto t_construct = clock::now();
    try {
        kt = construct_K(g, kopts);
        have_kt = kt.terminated;
        if (!kt.terminated && cfg.check_construction) {
            claim("construction_two_connected", Verdict::BUDGET_EXCEEDED, "iteration cap reached");
            claim("construction_cycles_mod3", Verdict::BUDGET_EXCEEDED, "iteration cap reached");
        }
    } catch (const budget_error& e) {
        if (cfg.check_construction) {
            claim("construction_two_connected", Verdict::BUDGET_EXCEEDED, e.what());
            claim("construction_cycles_mod3", Verdict::BUDGET_EXCEEDED, e.what());
        }
    }
    if (have_kt && cfg.check_construction) {
        VertexSet cuts = cut_vertices(kt.output);
        if (cuts.empty()) {
            claim("construction_two_connected", Verdict::HOLDS,
                  "no cut vertex after " + std::to_string(kt.iterations) + " steps");
        } else {
            claim("construction_two_connected", Verdict::REFUTED,
                  "cut vertex " + std::to_string(cuts.front()) + " in constructed graph");
        }
        try {
            Mod3Check mc = all_induced_cycles_mod3(kt.output, cfg.cycles);
            if (mc.all_mod3) claim("construction_cycles_mod3", Verdict::HOLDS, "");
            else
                claim("construction_cycles_mod3", Verdict::REFUTED,
                      "offending cycle [" + join_ids(mc.offender->vertices) + "]");
        } catch (const budget_error& e) {
            claim("construction_cycles_mod3", Verdict::BUDGET_EXCEEDED, e.what());
        }
    }
    runtimes.emplace_back("construction", ms_since(t_construct));

    // -- structure detection --------------------------------------------------
    auto t_structure = clock::now();
    std::optional<Structure> dom_structure;
    bool structures_budget_hit = false;
    std::string structures_error;
    size_t structure_count = 0;
    if (have_kt) {
        try {
            auto structures = find_structures(kt.output, cfg.cycles);
            structure_count = structures.size();
            for (auto& s : structures) {
                if (is_domination_structure(kt.output, s)) {
                    dom_structure = std::move(s);
                    break;
                }
            }
        } catch (const budget_error& e) {
            structures_budget_hit = true;
            structures_error = e.what();
        }
    }
    if (have_kt && cfg.check_construction) {
        if (structures_budget_hit) {
            claim("construction_unique_structure", Verdict::BUDGET_EXCEEDED, structures_error);
        } else if (doc.n > cfg.unique_structure_max_n) {
            claim("construction_unique_structure", Verdict::SKIPPED,
                  "n > " + std::to_string(cfg.unique_structure_max_n));
        } else if (structure_count == 1 && dom_structure) {
            claim("construction_unique_structure", Verdict::HOLDS, "one structure, covers all vertices");
        } else {
            claim("construction_unique_structure", Verdict::REFUTED,
                  std::to_string(structure_count) + " structures, covering one: " +
                      (dom_structure ? "yes" : "no"));
        }
    }
    runtimes.emplace_back("structures", ms_since(t_structure));

    const bool min_deg3 = degree_profile(g).min_degree >= 3;
    const bool cubic = degree_profile(g).is_cubic;

    // -- labeling claims ------------------------------------------------------
    auto t_label = clock::now();
    std::vector<VertexSet> candidates;
    if (cfg.check_labeling || cfg.check_subset || cfg.check_combine) {
        auto skip_labeling = [&](const std::string& reason, Verdict v) {
            if (!cfg.check_labeling) return;
            for (const char* name : {"labeling_count_bound", "labeling_all_dominate",
                                     "labeling_reaches_optimum", "labeling_independent_in_host"})
                claim(name, v, reason);
        };
        if (!min_deg3) {
            skip_labeling("hypothesis not met: min degree >= 3", Verdict::SKIPPED);
        } else if (!have_kt) {
            skip_labeling("construction did not finish", Verdict::BUDGET_EXCEEDED);
        } else if (structures_budget_hit) {
            skip_labeling(structures_error, Verdict::BUDGET_EXCEEDED);
        } else if (!dom_structure) {
            skip_labeling("no domination structure in constructed graph",
                          Verdict::STRUCTURE_VIOLATION);
        } else {
            LabelingSet labs = enumerate_labelings(kt.output, *dom_structure);
            int consistent = 0;
            for (const auto& l : labs.labelings) consistent += l.consistent ? 1 : 0;
            if (cfg.check_labeling) {
                std::ostringstream d;
                d << consistent << " labelings (" << labs.raw_attempts << " attempts, "
                  << labs.conflict_count << " conflicts) vs bound " << doc.n;
                claim("labeling_count_bound",
                      consistent <= doc.n ? Verdict::HOLDS : Verdict::REFUTED, d.str());
            }
            DominationFilter dom = dominating_labelings(kt.output, labs.labelings);
            if (cfg.check_labeling)
                claim("labeling_all_dominate", dom.claim_all_dominate,
                      std::to_string(dom.sets.size()) + " of " + std::to_string(consistent) +
                          " consistent labelings dominate");
            CandidateY cy = candidate_Y(kt.output, labs.labelings, cfg.oracle_budget);
            candidates = cy.candidates;
            if (cfg.check_labeling) {
                std::ostringstream d;
                if (!cy.candidates.empty()) d << "min labeling size " << cy.candidates.front().size();
                if (cy.kg_gamma) d << " vs gamma " << *cy.kg_gamma;
                claim("labeling_reaches_optimum", cy.claim_reaches_optimum, d.str());

                bool independent = true;
                int bad_u = -1, bad_v = -1;
                for (const auto& y : candidates) {
                    for (int u : y)
                        for (int v : y)
                            if (u < v && g.has_edge(u, v)) {
                                independent = false;
                                bad_u = u;
                                bad_v = v;
                            }
                }
                claim("labeling_independent_in_host",
                      independent ? Verdict::HOLDS : Verdict::REFUTED,
                      independent ? ""
                                  : "edge " + std::to_string(bad_u) + "-" + std::to_string(bad_v) +
                                        " joins two candidate vertices");
            }
        }
    }
    doc.candidate_sets = candidates;
    runtimes.emplace_back("labeling", ms_since(t_label));

    // -- candidate containment (subset of some optimum) -----------------------
    auto t_oracle = clock::now();
    std::optional<P2Check> p2;
    if (cfg.check_subset) {
        if (!min_deg3) {
            claim("candidate_extends_to_optimum", Verdict::SKIPPED,
                  "hypothesis not met: min degree >= 3");
        } else if (candidates.empty()) {
            claim("candidate_extends_to_optimum", Verdict::STRUCTURE_VIOLATION,
                  "no labeling candidates");
        } else {
            p2 = check_P2(g, candidates, cfg.oracle_budget);
            std::ostringstream d;
            if (p2->verdict == Verdict::HOLDS)
                d << "[" << join_ids(*p2->witness_y) << "] inside [" << join_ids(*p2->witness_x)
                  << "]";
            else if (p2->verdict == Verdict::REFUTED)
                d << "no candidate inside any of " << p2->all_dsets.size() << " optima";
            else
                d << "oracle budget exhausted";
            claim("candidate_extends_to_optimum", p2->verdict, d.str());
            if (p2->verdict != Verdict::SKIPPED) doc.oracle_gamma = p2->gamma;
        }
    }

    // -- split-and-combine claim ----------------------------------------------
    if (cfg.check_combine) {
        if (!min_deg3) {
            claim("split_combine_optimal", Verdict::SKIPPED, "hypothesis not met: min degree >= 3");
        } else if (candidates.empty()) {
            claim("split_combine_optimal", Verdict::STRUCTURE_VIOLATION, "no labeling candidates");
        } else {
            VertexSet y = candidates.front();
            if (p2 && p2->verdict == Verdict::HOLDS) y = *p2->witness_y;
            InducedSubgraph gp = build_G_prime(g, y);
            InducedSubgraph gdp = build_G_double_prime(g, y);
            OracleResult z1 = min_dominating_set_exact(gp.graph, cfg.oracle_budget);
            OracleResult z2 = min_dominating_set_exact(gdp.graph, cfg.oracle_budget);
            OracleResult whole = min_dominating_set_exact(g, cfg.oracle_budget);
            if (z1.budget_hit || z2.budget_hit || whole.budget_hit) {
                claim("split_combine_optimal", Verdict::BUDGET_EXCEEDED, "oracle budget exhausted");
            } else {
                doc.oracle_gamma = whole.gamma;
                CombineResult comb = combine(y, map_to_old(z1.witness, gp.old_of_new),
                                             map_to_old(z2.witness, gdp.old_of_new));
                const bool dominates = is_dominating(g, comb.result);
                const bool optimal = static_cast<int>(comb.result.size()) == whole.gamma;
                std::ostringstream d;
                d << to_string(comb.branch) << " pick, size " << comb.result.size() << " vs gamma "
                  << whole.gamma << (dominates ? "" : ", does not dominate");
                claim("split_combine_optimal",
                      dominates && optimal ? Verdict::HOLDS : Verdict::REFUTED, d.str());
            }
        }
    }
    runtimes.emplace_back("oracle", ms_since(t_oracle));

    // -- pipeline claims --------------------------------------------------------
    auto t_pipeline = clock::now();
    if (cfg.check_pipeline) {
        if (!cubic) {
            for (const char* name :
                 {"split_paths_cycles", "split_paths", "split_independent",
                  "pipeline_candidate_optimal"})
                claim(name, Verdict::SKIPPED, "hypothesis not met: cubic");
        } else {
            SolveConfig scfg;
            scfg.all_y = cfg.all_y;
            scfg.oracle_budget = cfg.oracle_budget;
            scfg.k = kopts;
            try {
                SolveResult sr = solve_cubic(g, scfg);
                struct LevelClaim {
                    const char* name;
                    int level;
                    bool (*ok)(StructuralClass);
                };
                const LevelClaim level_claims[] = {
                    {"split_paths_cycles", 0,
                     [](StructuralClass c) { return c != StructuralClass::VIOLATED; }},
                    {"split_paths", 1,
                     [](StructuralClass c) {
                         return c == StructuralClass::PATHS || c == StructuralClass::INDEPENDENT;
                     }},
                    {"split_independent", 2,
                     [](StructuralClass c) { return c == StructuralClass::INDEPENDENT; }},
                };
                for (const auto& lc : level_claims) {
                    bool seen = false, ok = true;
                    std::string detail;
                    for (const auto& rec : sr.levels) {
                        if (rec.level != lc.level || rec.final_level) continue;
                        seen = true;
                        if (!lc.ok(rec.structural_check)) {
                            ok = false;
                            detail = "observed " + to_string(rec.structural_check);
                        }
                    }
                    if (!seen) claim(lc.name, Verdict::SKIPPED, "level not reached");
                    else claim(lc.name, ok ? Verdict::HOLDS : Verdict::REFUTED, detail);
                }

                std::ostringstream d;
                d << "candidate size " << sr.candidate.size();
                if (sr.oracle_gamma) d << " vs gamma " << *sr.oracle_gamma;
                d << " [" << join_ids(sr.candidate) << "]";
                Verdict v = Verdict::SKIPPED;
                switch (sr.verdict) {
                    case SolveVerdict::MATCH: v = Verdict::HOLDS; break;
                    case SolveVerdict::SUBOPTIMAL:
                    case SolveVerdict::NOT_DOMINATING: v = Verdict::REFUTED; break;
                    case SolveVerdict::STRUCTURE_VIOLATION:
                        v = Verdict::STRUCTURE_VIOLATION;
                        break;
                    case SolveVerdict::ORACLE_SKIPPED: v = Verdict::SKIPPED; break;
                }
                if (sr.verdict == SolveVerdict::NOT_DOMINATING) d << ", does not dominate";
                claim("pipeline_candidate_optimal", v, d.str());
                doc.candidate_sets.push_back(sr.candidate);
                if (!doc.oracle_gamma && sr.oracle_gamma) doc.oracle_gamma = sr.oracle_gamma;
            } catch (const budget_error& e) {
                for (const char* name :
                     {"split_paths_cycles", "split_paths", "split_independent",
                      "pipeline_candidate_optimal"})
                    claim(name, Verdict::BUDGET_EXCEEDED, e.what());
            }
        }
    }
    runtimes.emplace_back("pipeline", ms_since(t_pipeline));

    if (doc.any_refuted()) doc.counterexample_graph6 = write_graph6(g);
    if (cfg.emit_runtimes) doc.runtimes_ms = std::move(runtimes);
    return doc;
}

std::vector<LoadedGraph> load_graphs(const RunConfig& cfg) {
    std::vector<LoadedGraph> out;
    if (cfg.gen_count > 0) {
        std::vector<int> sizes;
        for (int n = cfg.gen_min_n; n <= cfg.gen_max_n; ++n)
            if (n >= 4 && n % 2 == 0) sizes.push_back(n);
        if (sizes.empty()) throw input_error("generator range holds no even n >= 4");
        for (int i = 0; i < cfg.gen_count; ++i) {
            const int n = sizes[static_cast<size_t>(i) % sizes.size()];
            const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
            std::ostringstream id;
            id << "gen:n=" << n << ",seed=" << seed;
            out.push_back({random_cubic(n, seed), id.str(), "generated"});
        }
        return out;
    }

    auto read_file = [](const std::string& path) {
        if (path == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            return buf.str();
        }
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };

    namespace fs = std::filesystem;
    if (cfg.input_path != "-" && fs::is_directory(cfg.input_path)) {
        std::vector<std::string> names;
        for (const auto& entry : fs::directory_iterator(cfg.input_path))
            if (entry.is_regular_file()) names.push_back(entry.path().string());
        std::sort(names.begin(), names.end());
        for (const auto& name : names) {
            const std::string text = read_file(name);
            if (cfg.format == "edgelist") {
                out.push_back({parse_edge_list(text), name, "edgelist"});
            } else {
                std::istringstream in(text);
                std::string line;
                int lineno = 0;
                while (std::getline(in, line)) {
                    ++lineno;
                    if (line.empty()) continue;
                    out.push_back({parse_graph6(line), name + ":" + std::to_string(lineno),
                                   "graph6"});
                }
            }
        }
        return out;
    }

    const std::string text = read_file(cfg.input_path);
    if (cfg.format == "edgelist") {
        out.push_back({parse_edge_list(text), cfg.input_path, "edgelist"});
    } else {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            if (line.empty()) continue;
            out.push_back({parse_graph6(line), cfg.input_path + ":" + std::to_string(lineno),
                           "graph6"});
        }
    }
    return out;
}

CorpusResult run_corpus(const RunConfig& cfg) {
    CorpusResult result;
    std::map<std::pair<std::string, std::string>, int> counts;
    for (const LoadedGraph& lg : load_graphs(cfg)) {
        ReportDocument doc;
        try {
            doc = verify_graph(lg.graph, cfg, lg.id, lg.format);
        } catch (const std::exception& e) {
            doc.graph_id = lg.id;
            doc.input_format = lg.format;
            doc.n = lg.graph.vertex_count();
            doc.m = lg.graph.edge_count();
            doc.claims.push_back({"harness_error", Verdict::SKIPPED, e.what()});
        }
        for (const auto& c : doc.claims) ++counts[{c.name, to_string(c.verdict)}];
        result.any_refuted |= doc.any_refuted();
        result.reports.push_back(std::move(doc));
    }
    for (const auto& [key, count] : counts)
        result.summary.emplace_back(key.first, key.second, count);
    return result;
}

std::string summary_table(const CorpusResult& result) {
    std::ostringstream out;
    out << result.reports.size() << " graphs\n";
    for (const auto& [name, verdict, count] : result.summary)
        out << "  " << name << " " << verdict << ": " << count << "\n";
    return out.str();
}

}  // namespace domstruct
