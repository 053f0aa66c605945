#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cubic/graph.hpp"

// Independent re-implementations used only to cross-check library results.
// They share nothing with the library algorithms beyond the Graph accessors.
namespace oracle {

// Permutation-based Hamilton cycle count, no pruning: fix vertex 0, walk
// every permutation of the rest, check consecutive adjacency plus the
// closing edge, halve the directed total. Usable up to n ~ 12.
std::uint64_t count_hc_permutations(const cubic::Graph& g);

// Second independent counter: subset DP over paths anchored at vertex 0,
// closed back to 0 at the end, halved. Usable up to n ~ 18.
std::uint64_t count_hc_bitmask(const cubic::Graph& g);

// Shortest cycle length via per-edge deletion + BFS between the endpoints;
// -1 for forests.
int girth_by_edge_deletion(const cubic::Graph& g);

// Backtracking isomorphism test with degree pruning, for small graphs.
bool isomorphic(const cubic::Graph& a, const cubic::Graph& b);

bool is_bipartite(const cubic::Graph& g);

// Face sizes of a straight-line plane drawing: per-vertex rotations from
// the coordinates (sorted by angle), faces traced dart by dart. Sorted
// ascending. Only meaningful when pos is a planar embedding of g.
std::vector<int> face_sizes(const cubic::Graph& g,
                            const std::vector<std::pair<double, double>>& pos);

}  // namespace oracle
