#pragma once

#include <bit>
#include <vector>

#include "chromapoly/graph.hpp"

namespace chromapoly {

// All connected vertex subsets R with |R| >= 2, ascending by mask value.
std::vector<VertexMask> enumerate_connected_subsets(const Graph& g,
                                                    const EnumLimits& limits = EnumLimits::defaults());

// All edge sets E' with (V, E') connected, ascending by mask value.
// Requires g connected.
std::vector<EdgeMask> enumerate_connected_spanning_subgraphs(const Graph& g,
                                                             const EnumLimits& limits = EnumLimits::defaults());

// Same for the restriction to r, as masks over the parent graph's edges.
// Requires g|_r connected and |r| >= 1.
std::vector<EdgeMask> connected_spanning_subgraphs_within(const Graph& g, VertexMask r,
                                                          const EnumLimits& limits = EnumLimits::defaults());

// All spanning trees. The count is cross-checked against the Kirchhoff
// determinant (for <= 12 vertices); a mismatch is a bug and throws
// std::logic_error. Requires g connected; returns nothing for a single
// vertex (trees here are nontrivial).
std::vector<Tree> enumerate_spanning_trees(const Graph& g, const EnumLimits& limits = EnumLimits::defaults());

// Spanning trees of g|_r as edge masks over the parent graph.
std::vector<EdgeMask> spanning_trees_within(const Graph& g, VertexMask r,
                                            const EnumLimits& limits = EnumLimits::defaults());

// All forests (acyclic edge subsets), the empty one included.
std::vector<Forest> enumerate_forests(const Graph& g, const EnumLimits& limits = EnumLimits::defaults());

// Edges of the unique path between x and y in the tree, in path order.
std::vector<int> tree_path(const Graph& g, const Tree& t, int x, int y);

// All simple circuits as edge sets, deduplicated, ascending by mask value.
std::vector<EdgeMask> enumerate_simple_circuits(const Graph& g,
                                                const EnumLimits& limits = EnumLimits::defaults());

// Every simple circuit with its maximum edge (in the edge order) removed.
std::vector<EdgeMask> broken_circuits(const Graph& g, const EnumLimits& limits = EnumLimits::defaults());

inline bool is_broken_circuit_free(EdgeMask forest_edges, const std::vector<EdgeMask>& bcs) {
    for (EdgeMask bc : bcs)
        if ((bc & forest_edges) == bc) return false;
    return true;
}

// Number of spanning trees by the Kirchhoff (matrix-tree) determinant,
// evaluated exactly. 1 for a single vertex, 0 for a disconnected graph.
BigInt spanning_tree_count_matrix_tree(const Graph& g);

// Visits every forest of g exactly once (edges added in ascending rank, so
// enumeration order is depth-first lexicographic and deterministic).
// Fn is called as fn(EdgeMask).
template <class Fn>
void for_each_forest(const Graph& g, Fn&& fn) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    EdgeMask current = 0;
    auto rec = [&](auto&& self, int next) -> void {
        fn(current);
        for (int id = next; id < m; ++id) {
            const Edge& e = g.edge(id);
            int ru = find(e.u);
            int rv = find(e.v);
            if (ru == rv) continue;
            parent[static_cast<std::size_t>(rv)] = ru;
            current |= EdgeMask{1} << id;
            self(self, id + 1);
            current &= ~(EdgeMask{1} << id);
            parent[static_cast<std::size_t>(rv)] = rv;
        }
    };
    rec(rec, 0);
}

// Isomorphism representatives of all connected graphs on 1..max_vertices
// vertices (brute-force canonical forms; intended for max_vertices <= 6).
std::vector<Graph> connected_graph_catalog(int max_vertices);

// Same, without the connectivity filter.
std::vector<Graph> graph_catalog(int max_vertices);

}  // namespace chromapoly
