#pragma once

#include <string>
#include <vector>

#include "cubic/graph.hpp"

namespace cubic {

// A graph together with the ordered edge cuts that separate consecutive
// layers of a tube-shaped graph: cuts[i] holds the `width` edges between
// layer i and layer i+1. Cuts are pairwise disjoint and removing any one of
// them splits the graph into exactly two components.
struct LayeredGraph {
    Graph graph;
    std::vector<std::vector<Edge>> cuts;
    int width = 0;
    int length = 0;
};

// An induced 4-cycle v1-v2-v3-v4, vertices in cyclic order: the four ring
// edges are present, both diagonals absent, all four vertices of degree 3.
struct FourCycleHandle {
    int v1, v2, v3, v4;
};

// Generalized Petersen graph P(m,k): outer cycle u_0..u_{m-1} (ids 0..m-1),
// inner circulant v_0..v_{m-1} (ids m..2m-1) with step k, spokes u_i-v_i.
// Requires m >= 3 and 1 <= k < m/2 (BadParameters).
Graph generalized_petersen(int m, int k);

// Ring of m k-ladders. Ladder i (i = 0..m-1) occupies ids 2k*i..2k*i+2k-1:
// rail u_1..u_k at 2k*i..2k*i+k-1, rail v_1..v_k at 2k*i+k..2k*i+2k-1, with
// rungs u_j-v_j. Ladder i's u_1 and u_k connect to ladder i+1's v_1 and v_k
// (mod m). Requires m >= 2, k >= 2 (BadParameters).
Graph ring_of_ladders(int m, int k);

// Tube of width w and length k: start w-cycle (ids 0..w-1), k internal
// 2w-cycle layers, end w-cycle. Internal layer j (1-based) occupies
// base = w + 2w(j-1): V_i at base+i, W_i at base+w+i, with in-layer edges
// V_i-W_i and V_i-W_{(i+1) mod w}. cuts[0] joins the start cycle to V_i of
// layer 1, cuts[j] joins W_i of layer j to V_i of layer j+1, cuts[k] joins
// W_i of layer k to the end cycle. 2w(k+1) vertices, 3w(k+1) edges.
// Requires w >= 3, k >= 1 (BadParameters).
LayeredGraph nanotube(int w, int k);

// Replaces the opposite edges v1v2 and v3v4 of an induced 4-cycle by the
// paths v1-x1-x2-v2 and v3-y2-y1-v4 plus the rungs x1-y1 and x2-y2, growing
// the ring into a longer ladder. New ids are appended in the order
// x1,x2,y1,y2. With verify set, first checks that g minus {v1v2, v3v4} is
// not Hamiltonian (HypothesisViolated otherwise); that hypothesis is what
// makes the extension preserve the Hamilton-cycle count.
// Throws NotInducedFourCycle for an invalid handle.
Graph ladder_extension(const Graph& g, const FourCycleHandle& c, bool verify = false);

// All induced 4-cycles of g, one canonical handle each (v1 = smallest
// vertex, v2 its smaller ring neighbor), sorted by vertex set.
std::vector<FourCycleHandle> induced_four_cycles(const Graph& g);

// Named reference graphs: "base38" (constructed in code), "cc5_64_a",
// "cc5_64_b" and "fullerene56" (loaded from the bundled data files).
// Throws UnknownFixture for other names.
Graph fixture(const std::string& name);
Graph fixture(const std::string& name, const std::string& data_dir);

}  // namespace cubic
