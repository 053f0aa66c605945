#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cubic/graph.hpp"

namespace cubic {

// Reads a planar_code byte stream: an optional ASCII ">>planar_code<<"
// header, then per graph one vertex-count byte followed by a zero-terminated
// list of 1-based neighbors for each vertex. Rotation order is parsed but
// not retained; only adjacency survives. Each adjacency must appear
// symmetrically (AsymmetricAdjacency). A leading zero byte marks the
// two-byte size extension, which is out of scope (UnsupportedSize). Other
// errors: BadHeader, TruncatedStream, ParseError.
std::vector<Graph> read_planar_code(std::istream& in);

// Writes graphs in planar_code with neighbors in ascending order.
// UnsupportedSize when some graph has more than 255 vertices.
void write_planar_code(const std::vector<Graph>& graphs, std::ostream& out,
                       bool header = true);

// Text edge list: first line "n m", then m lines "u v" with 0 <= u < v < n.
// Errors: ParseError, InconsistentCounts, plus build_graph validation.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

// One aggregate row of a corpus survey, per vertex count. min_hc/max_hc
// cover Hamiltonian graphs only; argmax_id is the corpus index of the first
// graph attaining max_hc. Graphs whose count timed out are tallied in
// `timeouts` and excluded from the min/max aggregation.
struct SurveyRow {
    int n = 0;
    std::uint64_t graph_count = 0;
    std::uint64_t hamiltonian_count = 0;
    std::uint64_t min_hc = 0;
    std::uint64_t max_hc = 0;
    std::int64_t argmax_id = -1;
    std::uint64_t timeouts = 0;
};

struct SurveyOptions {
    std::optional<int> cc_filter;          // keep only cyclically k-edge-connected graphs
    std::optional<double> budget_seconds;  // per graph
    unsigned workers = 0;                  // 0: hardware concurrency
};

// Counts Hamilton cycles for every corpus graph (one graph per worker
// thread) and aggregates rows by vertex count, in ascending n. Aggregation
// runs in corpus order, so results are deterministic for a fixed corpus.
std::vector<SurveyRow> survey(const std::vector<Graph>& corpus,
                              const SurveyOptions& opts = {});

// CSV with the fixed header n,graphs,hamiltonian,min,max,argmax_id; the
// min/max/argmax cells are left empty for rows without Hamiltonian graphs.
void write_survey_csv(const std::vector<SurveyRow>& rows, std::ostream& out);

// Human-readable table of the same rows.
std::string survey_table(const std::vector<SurveyRow>& rows);

}  // namespace cubic
