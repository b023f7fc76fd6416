#include "domstruct/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "domstruct/errors.hpp"

namespace domstruct {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr long long kG6MaxN = 68719476735LL;  // 2^36 - 1
constexpr std::string_view kG6Header = ">>graph6<<";

int g6_byte(std::string_view text, size_t offset) {
    if (offset >= text.size())
        throw parse_error("graph6 data truncated", static_cast<long long>(offset));
    unsigned char c = static_cast<unsigned char>(text[offset]);
    if (c < 63 || c > 126)
        throw parse_error("graph6 byte out of printable range", static_cast<long long>(offset));
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    size_t pos = 0;
    if (text.substr(0, kG6Header.size()) == kG6Header) pos = kG6Header.size();

    long long n = 0;
    int first = g6_byte(text, pos);
    if (first < 63) {
        n = first;
        pos += 1;
    } else {
        if (g6_byte(text, pos + 1) == 63) {
            // "~~" prefix: 36-bit count in the next six bytes
            pos += 2;
            for (int i = 0; i < 6; ++i) n = (n << 6) | g6_byte(text, pos + i);
            pos += 6;
        } else {
            pos += 1;
            for (int i = 0; i < 3; ++i) n = (n << 6) | g6_byte(text, pos + i);
            pos += 3;
        }
    }
    if (n > kG6MaxN) throw parse_error("graph6 vertex count out of range", 0);

    const long long bits = n * (n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    EdgeList edges;
    long long bit_index = 0;
    for (long long b = 0; b < bytes; ++b) {
        int value = g6_byte(text, pos + static_cast<size_t>(b));
        for (int k = 5; k >= 0; --k, ++bit_index) {
            const int bit = (value >> k) & 1;
            if (bit_index >= bits) {
                if (bit)
                    throw parse_error("graph6 padding bits must be zero",
                                      static_cast<long long>(pos) + b);
                continue;
            }
            if (bit) {
                // column-major upper triangle: bit t belongs to pair (row, col)
                long long col = 1;
                long long t = bit_index;
                while (t >= col) {
                    t -= col;
                    ++col;
                }
                edges.emplace_back(static_cast<int>(t), static_cast<int>(col));
            }
        }
    }
    if (pos + static_cast<size_t>(bytes) != text.size())
        throw parse_error("trailing data after graph6 encoding",
                          static_cast<long long>(pos) + bytes);
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }

    const long long bits = n * (n - 1) / 2;
    int value = 0, filled = 0;
    long long bit_index = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit_index) {
            value = (value << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
    (void)bits;
    return out;
}

Graph parse_edge_list(std::string_view text) {
    struct Line {
        long long a = 0, b = 0;
        long long number = 0;
    };
    std::vector<Line> lines;
    {
        std::istringstream in{std::string(text)};
        std::string raw;
        long long lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            const size_t hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::istringstream ls(raw);
            long long a, b;
            if (!(ls >> a)) continue;  // blank or comment-only line
            if (!(ls >> b)) throw parse_error("expected two integers", lineno);
            std::string extra;
            if (ls >> extra) throw parse_error("unexpected token '" + extra + "'", lineno);
            if (a < 0 || b < 0) throw parse_error("vertex ids must be nonnegative", lineno);
            lines.push_back({a, b, lineno});
        }
    }
    if (lines.empty()) return Graph(0);

    // a leading "n m" header is accepted when exactly m edge lines follow
    // and their ids all fit under n
    if (lines.front().b == static_cast<long long>(lines.size()) - 1 && lines.front().b >= 1) {
        const long long n = lines.front().a;
        bool fits = true;
        for (size_t i = 1; i < lines.size(); ++i)
            if (lines[i].a >= n || lines[i].b >= n || lines[i].a == lines[i].b) fits = false;
        if (fits) {
            EdgeList edges;
            for (size_t i = 1; i < lines.size(); ++i)
                edges.emplace_back(static_cast<int>(std::min(lines[i].a, lines[i].b)),
                                   static_cast<int>(std::max(lines[i].a, lines[i].b)));
            return Graph::from_edges(static_cast<int>(n), edges);
        }
    }

    long long max_id = -1;
    EdgeList edges;
    for (const Line& l : lines) {
        if (l.a == l.b) throw parse_error("loop edge", l.number);
        max_id = std::max({max_id, l.a, l.b});
        edges.emplace_back(static_cast<int>(std::min(l.a, l.b)),
                           static_cast<int>(std::max(l.a, l.b)));
    }
    return Graph::from_edges(static_cast<int>(max_id + 1), edges);
}

std::string write_dot(const Graph& g, const DotAnnotations& notes) {
    std::ostringstream out;
    out << "graph G {\n";
    VertexSet labeled = normalized(notes.labeled_vertices);
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (set_contains(labeled, v)) out << " [style=filled, fillcolor=gold]";
        out << ";\n";
    }
    EdgeList added = notes.added_edges;
    for (auto& [u, v] : added)
        if (u > v) std::swap(u, v);
    std::sort(added.begin(), added.end());
    for (const auto& [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if (std::binary_search(added.begin(), added.end(), Edge{u, v}))
            out << " [color=red, style=bold]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

bool ReportDocument::any_refuted() const {
    for (const auto& c : claims)
        if (c.verdict == Verdict::REFUTED || c.verdict == Verdict::STRUCTURE_VIOLATION) return true;
    return false;
}

namespace {

ordered_json report_to_json(const ReportDocument& doc) {
    ordered_json j;
    j["schema_version"] = "1";
    j["graph_id"] = doc.graph_id;
    j["input_format"] = doc.input_format;
    j["n"] = doc.n;
    j["m"] = doc.m;
    j["claims"] = ordered_json::array();
    for (const auto& c : doc.claims) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["verdict"] = to_string(c.verdict);
        cj["details"] = c.details;
        j["claims"].push_back(std::move(cj));
    }
    j["candidate_sets"] = ordered_json::array();
    for (const auto& s : doc.candidate_sets) {
        ordered_json sj;
        sj["vertices"] = s;
        sj["size"] = s.size();
        j["candidate_sets"].push_back(std::move(sj));
    }
    if (doc.oracle_gamma) j["oracle_gamma"] = *doc.oracle_gamma;
    if (!doc.runtimes_ms.empty()) {
        ordered_json rj;
        for (const auto& [phase, ms] : doc.runtimes_ms) rj[phase] = ms;
        j["runtimes_ms"] = std::move(rj);
    }
    if (doc.counterexample_graph6) j["counterexample_graph6"] = *doc.counterexample_graph6;
    return j;
}

ReportDocument report_from_json(const ordered_json& j) {
    ReportDocument doc;
    doc.graph_id = j.at("graph_id").get<std::string>();
    doc.input_format = j.at("input_format").get<std::string>();
    doc.n = j.at("n").get<int>();
    doc.m = j.at("m").get<int>();
    for (const auto& cj : j.at("claims")) {
        ClaimResult c;
        c.name = cj.at("name").get<std::string>();
        c.verdict = verdict_from_string(cj.at("verdict").get<std::string>());
        c.details = cj.at("details").get<std::string>();
        doc.claims.push_back(std::move(c));
    }
    for (const auto& sj : j.at("candidate_sets"))
        doc.candidate_sets.push_back(sj.at("vertices").get<VertexSet>());
    if (j.contains("oracle_gamma")) doc.oracle_gamma = j.at("oracle_gamma").get<int>();
    if (j.contains("runtimes_ms"))
        for (const auto& [phase, ms] : j.at("runtimes_ms").items())
            doc.runtimes_ms.emplace_back(phase, ms.get<double>());
    if (j.contains("counterexample_graph6"))
        doc.counterexample_graph6 = j.at("counterexample_graph6").get<std::string>();
    return doc;
}

}  // namespace

std::string write_report(const ReportDocument& doc) { return report_to_json(doc).dump(2) + "\n"; }

ReportDocument parse_report(std::string_view json_text) {
    return report_from_json(ordered_json::parse(json_text));
}

std::string write_report_array(const std::vector<ReportDocument>& docs) {
    ordered_json arr = ordered_json::array();
    for (const auto& d : docs) arr.push_back(report_to_json(d));
    return arr.dump(2) + "\n";
}

std::string ktrace_to_json(const KTrace& trace) {
    ordered_json j;
    j["input_graph6"] = write_graph6(trace.input);
    j["output_graph6"] = write_graph6(trace.output);
    j["terminated"] = trace.terminated;
    j["iterations"] = trace.iterations;
    j["steps"] = ordered_json::array();
    for (const auto& s : trace.steps) {
        ordered_json sj;
        switch (s.kind) {
            case KStepKind::CUT_VERTEX: sj["kind"] = "CUT_VERTEX"; break;
            case KStepKind::CYCLE_MOD2: sj["kind"] = "CYCLE_MOD2"; break;
            case KStepKind::CYCLE_MOD1: sj["kind"] = "CYCLE_MOD1"; break;
        }
        sj["vertex"] = s.vertex;
        if (s.cycle) sj["cycle"] = s.cycle->vertices;
        ordered_json edges = ordered_json::array();
        for (const auto& [u, v] : s.added) edges.push_back(ordered_json::array({u, v}));
        sj["added_edges"] = std::move(edges);
        sj["k_before"] = s.k_before;
        sj["k_after"] = s.k_after;
        j["steps"].push_back(std::move(sj));
    }
    return j.dump(2) + "\n";
}

}  // namespace domstruct
