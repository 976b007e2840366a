#pragma once

#include <utility>
#include <vector>

#include "chromapoly/base.hpp"

namespace chromapoly {

struct Edge {
    int u;  // u < v
    int v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable simple graph. Vertices are dense integers 0..n-1; external labels
// are mapped away at ingestion (see io.hpp). Edges carry a total order: the
// edge with rank i sits at index i of edges(), and bit i of an EdgeMask. The
// default order is lexicographic on (min endpoint, max endpoint); reordered()
// installs an explicit permutation instead.
class Graph {
  public:
    Graph() = default;
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    // Same graph with the given edge order. `order` must list every edge
    // exactly once, smallest first.
    Graph reordered(const std::vector<std::pair<int, int>>& order) const;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

    // Rank of {u,v} in the edge order, or -1 if not an edge.
    int edge_id(int u, int v) const;
    bool adjacent(int u, int v) const { return edge_id(u, v) >= 0; }

    // (neighbor, edge id) pairs, sorted by neighbor.
    const std::vector<std::pair<int, int>>& neighbors(int v) const {
        return adj_[static_cast<std::size_t>(v)];
    }

    VertexMask adjacency_mask(int v) const { return adj_mask_[static_cast<std::size_t>(v)]; }
    EdgeMask incident_edges(int v) const { return incident_[static_cast<std::size_t>(v)]; }

    VertexMask vertex_mask() const;
    EdgeMask edge_mask() const;
    // Edges with both endpoints inside r.
    EdgeMask edges_within(VertexMask r) const;

    bool is_connected() const;
    // Connectivity of the restriction to r (r must be nonempty).
    bool is_connected_within(VertexMask r) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    void build_tables();

    int n_ = 0;
    std::vector<Edge> edges_;  // ascending edge order; index = rank
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<VertexMask> adj_mask_;
    std::vector<EdgeMask> incident_;
};

// A nontrivial tree inside a graph: a connected acyclic edge set spanning
// `vertices` (>= 2 of them, popcount(vertices) - 1 edges).
struct Tree {
    VertexMask vertices = 0;
    EdgeMask edges = 0;
    friend bool operator==(const Tree&, const Tree&) = default;
};

// An acyclic edge subset together with its decomposition into nontrivial
// trees (isolated vertices are left implicit). The empty forest is valid.
struct Forest {
    EdgeMask edges = 0;
    std::vector<Tree> trees;
    friend bool operator==(const Forest&, const Forest&) = default;
};

// Decomposes an acyclic edge set into its nontrivial trees, ordered by
// minimum vertex. Throws std::invalid_argument if `edges` contains a circuit.
Forest make_forest(const Graph& g, EdgeMask edges);

// Number of connected components of (V, edges); isolated vertices count.
int component_count(const Graph& g, EdgeMask edges);
// Same, restricted to the vertices in r (edges outside r are ignored).
int component_count_within(const Graph& g, VertexMask r, EdgeMask edges);

// The restriction of g to r as a standalone graph: vertices relabeled densely
// preserving order, edge order induced from g.
Graph induced_subgraph(const Graph& g, VertexMask r);

}  // namespace chromapoly
