#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>

#include "cubic/generators.hpp"
#include "cubic/graph.hpp"

namespace cubic {

// Result of a counting run. Hamilton cycles are counted as undirected edge
// subsets: each cycle once, regardless of direction or starting vertex.
// When per_edge is present, its values sum to n * total.
struct HamiltonCount {
    std::uint64_t total = 0;
    std::optional<std::map<Edge, std::uint64_t>> per_edge;
    std::chrono::duration<double> elapsed{0};
};

struct CountOptions {
    bool per_edge = false;
    std::optional<double> budget_seconds;  // Timeout when exceeded
};

// Exact count by edge-state backtracking: each edge is in, out or undecided;
// degree constraints are propagated to a fixpoint after every decision (a
// saturated vertex forces its remaining edges out, a vertex left with
// exactly as many undecided edges as it still needs forces them in) and a
// union-find structure rejects any cycle closed before it spans the graph.
// Requires g connected with n >= 3. Throws Overflow or Timeout.
HamiltonCount count_hamilton_cycles(const Graph& g, const CountOptions& opts = {});

// True iff at least one Hamilton cycle exists; stops at the first one found.
bool is_hamiltonian(const Graph& g, std::optional<double> budget_seconds = std::nullopt);

// Buckets the Hamilton cycles of a layered graph by the number of cut edges
// they use. Every Hamilton cycle must use the same, even number of edges in
// each cut; a cycle violating that raises CutInvariantViolated. The bucket
// values sum to the total count.
std::map<int, std::uint64_t> count_by_crossing_type(
    const LayeredGraph& lg, std::optional<double> budget_seconds = std::nullopt);

}  // namespace cubic
