#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "domstruct/errors.hpp"
#include "domstruct/harness.hpp"
#include "domstruct/io.hpp"
#include "domstruct/labeling.hpp"
#include "domstruct/pipeline.hpp"

using namespace domstruct;

namespace {

struct CommonArgs {
    std::string input = "-";
    std::string format = "graph6";
    std::string json_path;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--input", args.input, "input file, directory, or - for stdin");
    cmd->add_option("--format", args.format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    cmd->add_option("--json", args.json_path, "write a JSON document to this path");
}

RunConfig base_config(const CommonArgs& args) {
    RunConfig cfg;
    cfg.input_path = args.input;
    cfg.format = args.format;
    return cfg;
}

LoadedGraph load_one(const RunConfig& cfg) {
    auto graphs = load_graphs(cfg);
    if (graphs.empty()) throw input_error("no graph found in input");
    return graphs.front();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

KPolicy parse_policy(const std::string& name, std::uint64_t seed) {
    KPolicy p;
    p.seed = seed;
    if (name == "canonical") p.kind = KPolicy::Kind::CANONICAL;
    else if (name == "random") p.kind = KPolicy::Kind::RANDOM;
    else throw input_error("unknown policy: " + name);
    return p;
}

std::string set_text(const VertexSet& s) {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << "}";
    return out.str();
}

int cmd_construct(const CommonArgs& args, const std::string& policy, std::uint64_t seed,
                  long long max_iters) {
    RunConfig cfg = base_config(args);
    LoadedGraph lg = load_one(cfg);
    KOptions opts;
    opts.policy = parse_policy(policy, seed);
    opts.max_iterations = max_iters;
    KTrace trace = construct_K(lg.graph, opts);
    std::cout << lg.id << ": n=" << lg.graph.vertex_count() << " m=" << lg.graph.edge_count()
              << " -> m=" << trace.output.edge_count() << " in " << trace.iterations << " steps"
              << (trace.terminated ? "" : " (iteration cap reached)") << "\n";
    for (const auto& step : trace.steps) {
        const char* kind = step.kind == KStepKind::CUT_VERTEX  ? "cut-vertex"
                           : step.kind == KStepKind::CYCLE_MOD2 ? "cycle-mod2"
                                                                : "cycle-mod1";
        std::cout << "  step " << step.k_after << " " << kind << " at " << step.vertex << ", added";
        for (const auto& [u, v] : step.added) std::cout << " " << u << "-" << v;
        std::cout << "\n";
    }
    std::cout << "output: " << write_graph6(trace.output) << "\n";
    if (!args.json_path.empty()) write_text(args.json_path, ktrace_to_json(trace));
    return 0;
}

int cmd_labelings(const CommonArgs& args, std::uint64_t oracle_budget) {
    RunConfig cfg = base_config(args);
    LoadedGraph lg = load_one(cfg);
    KTrace trace = construct_K(lg.graph, {});
    std::optional<Structure> h;
    for (auto& s : find_structures(trace.output)) {
        if (is_domination_structure(trace.output, s)) {
            h = std::move(s);
            break;
        }
    }
    if (!h) {
        std::cout << lg.id << ": constructed graph has no domination structure\n";
        return 0;
    }
    LabelingSet labs = enumerate_labelings(trace.output, *h);
    std::cout << lg.id << ": " << labs.labelings.size() << " distinct labelings from "
              << labs.raw_attempts << " attempts, " << labs.conflict_count << " conflicts\n";
    for (const auto& lab : labs.labelings) {
        std::cout << "  start " << lab.start_vertex << " "
                  << (lab.direction == LabelDirection::FORWARD ? "fwd" : "bwd") << " "
                  << set_text(lab.labeled) << (lab.consistent ? "" : " (inconsistent)")
                  << (is_dominating(trace.output, lab.labeled) ? " dominating" : "") << "\n";
    }
    CandidateY cy = candidate_Y(trace.output, labs.labelings, oracle_budget);
    std::cout << "candidates:";
    for (const auto& s : cy.candidates) std::cout << " " << set_text(s);
    std::cout << "\nreaches optimum: " << to_string(cy.claim_reaches_optimum) << "\n";
    return 0;
}

int cmd_solve(const CommonArgs& args, bool all_y, std::uint64_t oracle_budget) {
    RunConfig cfg = base_config(args);
    LoadedGraph lg = load_one(cfg);
    SolveConfig scfg;
    scfg.all_y = all_y;
    scfg.oracle_budget = oracle_budget;
    SolveResult sr = solve_cubic(lg.graph, scfg);
    std::cout << lg.id << ": candidate " << set_text(sr.candidate) << " size "
              << sr.candidate.size();
    if (sr.oracle_gamma) std::cout << ", gamma " << *sr.oracle_gamma;
    std::cout << ", verdict " << to_string(sr.verdict) << "\n";
    for (const auto& rec : sr.levels) {
        std::cout << "  level " << rec.level << (rec.final_level ? " (final)" : "") << " Y="
                  << set_text(rec.y_used);
        if (!rec.final_level)
            std::cout << " W'=" << set_text(rec.w_prime) << " W''=" << set_text(rec.w_double_prime)
                      << " pick " << to_string(rec.chosen_branch) << " ["
                      << to_string(rec.structural_check) << "]";
        std::cout << "\n";
    }
    if (!args.json_path.empty()) {
        ReportDocument doc;
        doc.graph_id = lg.id;
        doc.input_format = lg.format;
        doc.n = lg.graph.vertex_count();
        doc.m = lg.graph.edge_count();
        doc.candidate_sets.push_back(sr.candidate);
        doc.oracle_gamma = sr.oracle_gamma;
        Verdict v = sr.verdict == SolveVerdict::MATCH ? Verdict::HOLDS
                    : sr.verdict == SolveVerdict::ORACLE_SKIPPED
                        ? Verdict::SKIPPED
                        : (sr.verdict == SolveVerdict::STRUCTURE_VIOLATION
                               ? Verdict::STRUCTURE_VIOLATION
                               : Verdict::REFUTED);
        doc.claims.push_back({"pipeline_candidate_optimal", v, to_string(sr.verdict)});
        if (doc.any_refuted()) doc.counterexample_graph6 = write_graph6(lg.graph);
        write_text(args.json_path, write_report(doc));
    }
    return 0;
}

int cmd_oracle(const CommonArgs& args, std::uint64_t budget, bool enumerate) {
    RunConfig cfg = base_config(args);
    LoadedGraph lg = load_one(cfg);
    OracleResult r = min_dominating_set_exact(lg.graph, budget);
    std::cout << lg.id << ": gamma " << (r.budget_hit ? "<= " : "") << r.gamma << ", witness "
              << set_text(r.witness) << ", nodes " << r.nodes_explored << "\n";
    if (enumerate && !r.budget_hit) {
        DsetEnumeration all = enumerate_all_dsets(lg.graph, budget);
        std::cout << all.sets.size() << " minimum dominating sets"
                  << (all.complete ? "" : " (incomplete)") << "\n";
        for (const auto& s : all.sets) std::cout << "  " << set_text(s) << "\n";
    }
    return 0;
}

int cmd_verify(const CommonArgs& args, RunConfig cfg) {
    cfg.input_path = args.input;
    cfg.format = args.format;
    LoadedGraph lg = load_one(cfg);
    ReportDocument doc = verify_graph(lg.graph, cfg, lg.id, lg.format);
    for (const auto& c : doc.claims) {
        std::cout << "  " << c.name << ": " << to_string(c.verdict)
                  << (c.details.empty() ? "" : " (" + c.details + ")") << "\n";
    }
    if (!args.json_path.empty()) write_text(args.json_path, write_report(doc));
    return doc.any_refuted() && cfg.strict ? 2 : 0;
}

int cmd_corpus(const CommonArgs& args, RunConfig cfg) {
    cfg.input_path = args.input;
    cfg.format = args.format;
    CorpusResult result = run_corpus(cfg);
    std::cout << summary_table(result);
    if (!args.json_path.empty()) write_text(args.json_path, write_report_array(result.reports));
    return result.any_refuted && cfg.strict ? 2 : 0;
}

int cmd_gen(int n, int count, std::uint64_t seed) {
    for (int i = 0; i < count; ++i)
        std::cout << write_graph6(random_cubic(n, seed + static_cast<std::uint64_t>(i))) << "\n";
    return 0;
}

int cmd_export_dot(const CommonArgs& args, bool after_k, bool mark_labeling,
                   const std::string& output) {
    RunConfig cfg = base_config(args);
    LoadedGraph lg = load_one(cfg);
    Graph shown = lg.graph;
    DotAnnotations notes;
    if (after_k) {
        KTrace trace = construct_K(lg.graph, {});
        shown = trace.output;
        for (const auto& step : trace.steps)
            notes.added_edges.insert(notes.added_edges.end(), step.added.begin(),
                                     step.added.end());
        if (mark_labeling) {
            for (auto& s : find_structures(shown)) {
                if (is_domination_structure(shown, s)) {
                    LabelingSet labs = enumerate_labelings(shown, s);
                    CandidateY cy = candidate_Y(shown, labs.labelings);
                    if (!cy.candidates.empty()) notes.labeled_vertices = cy.candidates.front();
                    break;
                }
            }
        }
    }
    const std::string dot = write_dot(shown, notes);
    if (output.empty() || output == "-") std::cout << dot;
    else write_text(output, dot);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"domination-structure construction, labeling, and verification harness"};
    app.require_subcommand(1);

    CommonArgs common;
    std::string policy = "canonical";
    std::uint64_t seed = 1;
    long long max_iters = 0;
    std::uint64_t oracle_budget = kDefaultOracleBudget;
    bool all_y = false, enumerate = false, strict = false, timings = false;
    int gen_n = 8, gen_count = 1;
    bool after_k = false, mark_labeling = false;
    std::string dot_output = "-";
    int gen_min_n = 0, gen_max_n = 0, corpus_count = 0;

    auto* construct = app.add_subcommand("construct", "run the edge-adding construction");
    add_common(construct, common);
    construct->add_option("--policy", policy, "canonical or random");
    construct->add_option("--seed", seed, "seed for the random policy");
    construct->add_option("--max-iters", max_iters, "iteration cap (0 = default)");

    auto* labelings = app.add_subcommand("labelings", "enumerate labelings of the constructed graph");
    add_common(labelings, common);
    labelings->add_option("--oracle-budget", oracle_budget, "search node budget");

    auto* solve = app.add_subcommand("solve", "run the recursive pipeline on a cubic graph");
    add_common(solve, common);
    solve->add_flag("--all-Y", all_y, "try every minimum labeling at the top level");
    solve->add_option("--oracle-budget", oracle_budget, "search node budget");

    auto* oracle = app.add_subcommand("oracle", "exact minimum dominating set");
    add_common(oracle, common);
    oracle->add_option("--oracle-budget", oracle_budget, "search node budget");
    oracle->add_flag("--enumerate", enumerate, "list every minimum dominating set");

    auto* verify = app.add_subcommand("verify", "evaluate all claims on one graph");
    add_common(verify, common);
    verify->add_option("--policy", policy, "canonical or random");
    verify->add_option("--seed", seed, "policy seed");
    verify->add_option("--max-iters", max_iters, "construction iteration cap");
    verify->add_option("--oracle-budget", oracle_budget, "search node budget");
    verify->add_flag("--all-Y", all_y, "try every minimum labeling in the pipeline");
    verify->add_flag("--strict", strict, "exit 2 when a claim is refuted");
    verify->add_flag("--timings", timings, "include runtimes in the report");

    auto* corpus = app.add_subcommand("corpus", "evaluate claims across a corpus");
    add_common(corpus, common);
    corpus->add_option("--policy", policy, "canonical or random");
    corpus->add_option("--seed", seed, "policy and generator seed");
    corpus->add_option("--max-iters", max_iters, "construction iteration cap");
    corpus->add_option("--oracle-budget", oracle_budget, "search node budget");
    corpus->add_flag("--all-Y", all_y, "try every minimum labeling in the pipeline");
    corpus->add_flag("--strict", strict, "exit 2 when any claim is refuted");
    corpus->add_flag("--timings", timings, "include runtimes in reports");
    corpus->add_option("--gen-count", corpus_count, "generate this many cubic graphs instead of reading input");
    corpus->add_option("--gen-min-n", gen_min_n, "smallest generated size");
    corpus->add_option("--gen-max-n", gen_max_n, "largest generated size");

    auto* gen = app.add_subcommand("gen", "generate random connected cubic graphs as graph6");
    gen->add_option("--n", gen_n, "vertex count (even, >= 4)")->required();
    gen->add_option("--count", gen_count, "how many graphs");
    gen->add_option("--seed", seed, "generator seed");

    auto* export_dot = app.add_subcommand("export-dot", "write the graph as DOT");
    add_common(export_dot, common);
    export_dot->add_flag("--after-k", after_k, "run the construction first and mark added edges");
    export_dot->add_flag("--mark-labeling", mark_labeling, "highlight a minimum labeling");
    export_dot->add_option("--output", dot_output, "output path or - for stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg;
        cfg.policy = parse_policy(policy, seed);
        cfg.seed = seed;
        cfg.max_iterations = max_iters;
        cfg.oracle_budget = oracle_budget;
        cfg.all_y = all_y;
        cfg.strict = strict;
        cfg.emit_runtimes = timings;
        cfg.gen_count = corpus_count;
        if (gen_min_n > 0) cfg.gen_min_n = gen_min_n;
        if (gen_max_n > 0) cfg.gen_max_n = gen_max_n;

        if (construct->parsed()) return cmd_construct(common, policy, seed, max_iters);
        if (labelings->parsed()) return cmd_labelings(common, oracle_budget);
        if (solve->parsed()) return cmd_solve(common, all_y, oracle_budget);
        if (oracle->parsed()) return cmd_oracle(common, oracle_budget, enumerate);
        if (verify->parsed()) return cmd_verify(common, cfg);
        if (corpus->parsed()) return cmd_corpus(common, cfg);
        if (gen->parsed()) return cmd_gen(gen_n, gen_count, seed);
        if (export_dot->parsed()) return cmd_export_dot(common, after_k, mark_labeling, dot_output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
