#pragma once

#include <utility>
#include <vector>

#include "cubic/errors.hpp"

namespace cubic {

// Canonical undirected edge: first < second.
using Edge = std::pair<int, int>;

// Immutable undirected simple graph on vertices 0..n-1. Adjacency lists are
// sorted and the edge list is in canonical (min,max)-lexicographic order;
// both always describe the same edge set. Instances are freely shareable
// between threads.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<Edge>& edges() const { return edges_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    // Position of {u,v} in edges(), or -1 when absent.
    int edge_index(int u, int v) const;
    bool is_cubic() const;

private:
    friend Graph build_graph(int n, std::vector<Edge> edges);

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
};

// Validates and canonicalizes an edge list (pairs may come in either
// orientation). Throws VertexOutOfRange, LoopEdge or DuplicateEdge.
Graph build_graph(int n, std::vector<Edge> edges);

// New graph with the given edges removed; every edge must be present
// (BadParameters otherwise). Vertex set is unchanged.
Graph remove_edges(const Graph& g, const std::vector<Edge>& to_remove);

bool is_connected(const Graph& g);

// Length of a shortest cycle, by BFS from every vertex.
// Throws AcyclicGraph on forests.
int girth(const Graph& g);

// True iff no edge subset of size < k disconnects g into two or more
// components at least two of which contain a cycle. Exhaustive scan over all
// subsets of size 1..k-1, preceded by a shortest-cycle boundary probe that
// settles most negative instances quickly. Convention: graphs admitting no
// cycle-separating cut at all (e.g. K4) yield true for every k.
// Throws KTooLarge (k > 6) or Disconnected.
bool is_cyclically_k_edge_connected(const Graph& g, int k);

}  // namespace cubic
