#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domstruct/graph.hpp"
#include "domstruct/scheme_k.hpp"
#include "domstruct/verdict.hpp"

namespace domstruct {

// graph6: header byte(s) = value + 63, then the upper adjacency triangle
// column-major, six bits per printable byte. Rejects bad byte ranges,
// truncation, trailing data, and nonzero padding bits (parse_error carries
// the byte offset). An optional ">>graph6<<" prefix is accepted.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Lines of "u v" edges; an optional leading "n m" header is recognized when
// exactly m edge lines follow and every id fits below n. '#' starts a comment.
Graph parse_edge_list(std::string_view text);

struct DotAnnotations {
    EdgeList added_edges;        // drawn bold red (construction-added edges)
    VertexSet labeled_vertices;  // drawn filled
};

std::string write_dot(const Graph& g, const DotAnnotations& notes = {});

struct ClaimResult {
    std::string name;
    Verdict verdict = Verdict::SKIPPED;
    std::string details;
};

/// Per-graph verification report (JSON schema version "1"). Runtimes are
/// emitted only when present, keeping default reports byte-reproducible.
struct ReportDocument {
    std::string graph_id;
    std::string input_format;  // "graph6", "edgelist", "generated"
    int n = 0;
    int m = 0;
    std::vector<ClaimResult> claims;
    std::vector<VertexSet> candidate_sets;
    std::optional<int> oracle_gamma;
    std::vector<std::pair<std::string, double>> runtimes_ms;
    std::optional<std::string> counterexample_graph6;

    bool any_refuted() const;
};

std::string write_report(const ReportDocument& doc);
ReportDocument parse_report(std::string_view json_text);

std::string write_report_array(const std::vector<ReportDocument>& docs);

// Construction trace as JSON (inputs/outputs as graph6, one entry per step).
std::string ktrace_to_json(const KTrace& trace);

}  // namespace domstruct
