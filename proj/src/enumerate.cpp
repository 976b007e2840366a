#include "chromapoly/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace chromapoly {

namespace {

void check_vertex_limit(const Graph& g, const EnumLimits& limits) {
    if (g.vertex_count() > limits.max_vertices)
        throw LimitError("vertex count " + std::to_string(g.vertex_count()) +
                         " exceeds enumeration limit " + std::to_string(limits.max_vertices) +
                         " (set CHROMAPOLY_ENUM_LIMIT to raise)");
}

void check_edge_limit(int edge_count, const EnumLimits& limits) {
    if (edge_count > limits.max_edges)
        throw LimitError("edge count " + std::to_string(edge_count) +
                         " exceeds enumeration limit " + std::to_string(limits.max_edges) +
                         " (set CHROMAPOLY_EDGE_LIMIT to raise)");
}

}  // namespace

std::vector<VertexMask> enumerate_connected_subsets(const Graph& g, const EnumLimits& limits) {
    check_vertex_limit(g, limits);
    const int n = g.vertex_count();
    std::vector<VertexMask> out;
    for (VertexMask r = 0; r < (VertexMask{1} << n); ++r)
        if (std::popcount(r) >= 2 && g.is_connected_within(r)) out.push_back(r);
    return out;
}

std::vector<EdgeMask> connected_spanning_subgraphs_within(const Graph& g, VertexMask r,
                                                          const EnumLimits& limits) {
    if (std::popcount(r) == 0) return {};
    if (std::popcount(r) == 1) return {EdgeMask{0}};
    const EdgeMask full = g.edges_within(r);
    check_edge_limit(std::popcount(full), limits);
    std::vector<EdgeMask> out;
    for (EdgeMask sub = full;; sub = (sub - 1) & full) {
        if (component_count_within(g, r, sub) == 1) out.push_back(sub);
        if (sub == 0) break;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<EdgeMask> enumerate_connected_spanning_subgraphs(const Graph& g, const EnumLimits& limits) {
    return connected_spanning_subgraphs_within(g, g.vertex_mask(), limits);
}

BigInt spanning_tree_count_matrix_tree(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 1) return 1;
    const int d = n - 1;
    // Laplacian with row/column 0 deleted, determinant by fraction-free
    // (Bareiss) elimination: every division below is exact.
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(d),
                                       std::vector<BigInt>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
            std::popcount(g.adjacency_mask(i + 1));
        for (int j = 0; j < d; ++j)
            if (i != j && g.adjacent(i + 1, j + 1))
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
    }
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < d; ++k) {
        auto uk = static_cast<std::size_t>(k);
        if (a[uk][uk] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < d; ++i)
                if (a[static_cast<std::size_t>(i)][uk] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(a[uk], a[static_cast<std::size_t>(pivot)]);
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i) {
            auto ui = static_cast<std::size_t>(i);
            for (int j = k + 1; j < d; ++j) {
                auto uj = static_cast<std::size_t>(j);
                a[ui][uj] = (a[ui][uj] * a[uk][uk] - a[ui][uk] * a[uk][uj]) / prev;
            }
            a[ui][uk] = 0;
        }
        prev = a[uk][uk];
    }
    return sign * a[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(d - 1)];
}

std::vector<Tree> enumerate_spanning_trees(const Graph& g, const EnumLimits& limits) {
    check_vertex_limit(g, limits);
    check_edge_limit(g.edge_count(), limits);
    const int n = g.vertex_count();
    std::vector<Tree> out;
    if (n == 1) return out;
    // An acyclic edge set has n - |F| components, so |F| == n - 1 means
    // connected and spanning.
    for_each_forest(g, [&](EdgeMask f) {
        if (std::popcount(f) == n - 1) out.push_back(Tree{g.vertex_mask(), f});
    });
    if (n <= 12) {
        BigInt expected = spanning_tree_count_matrix_tree(g);
        if (expected != static_cast<long long>(out.size()))
            throw std::logic_error("spanning tree enumeration disagrees with the matrix-tree count");
    }
    return out;
}

std::vector<EdgeMask> spanning_trees_within(const Graph& g, VertexMask r, const EnumLimits& limits) {
    if (std::popcount(r) <= 1) return {};
    std::vector<int> verts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (r >> v & 1) verts.push_back(v);
    Graph h = induced_subgraph(g, r);
    std::vector<EdgeMask> out;
    for (const Tree& t : enumerate_spanning_trees(h, limits)) {
        EdgeMask em = 0;
        for (EdgeMask rest = t.edges; rest != 0; rest &= rest - 1) {
            const Edge& e = h.edge(std::countr_zero(rest));
            em |= EdgeMask{1} << g.edge_id(verts[static_cast<std::size_t>(e.u)],
                                           verts[static_cast<std::size_t>(e.v)]);
        }
        out.push_back(em);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Forest> enumerate_forests(const Graph& g, const EnumLimits& limits) {
    check_vertex_limit(g, limits);
    check_edge_limit(g.edge_count(), limits);
    std::vector<Forest> out;
    for_each_forest(g, [&](EdgeMask f) { out.push_back(make_forest(g, f)); });
    return out;
}

std::vector<int> tree_path(const Graph& g, const Tree& t, int x, int y) {
    if (!(t.vertices >> x & 1) || !(t.vertices >> y & 1))
        throw std::invalid_argument("tree_path endpoint not in the tree");
    if (x == y) return {};
    const int n = g.vertex_count();
    std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> stack{x};
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[static_cast<std::size_t>(x)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == y) break;
        for (auto [w, eid] : g.neighbors(v)) {
            if (!(t.edges >> eid & 1) || seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            parent[static_cast<std::size_t>(w)] = v;
            parent_edge[static_cast<std::size_t>(w)] = eid;
            stack.push_back(w);
        }
    }
    if (!seen[static_cast<std::size_t>(y)])
        throw std::invalid_argument("tree_path endpoints lie in different trees");
    std::vector<int> path;
    for (int v = y; v != x; v = parent[static_cast<std::size_t>(v)])
        path.push_back(parent_edge[static_cast<std::size_t>(v)]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<EdgeMask> enumerate_simple_circuits(const Graph& g, const EnumLimits& limits) {
    check_vertex_limit(g, limits);
    check_edge_limit(g.edge_count(), limits);
    const int n = g.vertex_count();
    std::set<EdgeMask> found;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::vector<int> path;
    EdgeMask mask = 0;
    // Each circuit is generated from its minimum vertex, walking only
    // through larger vertices; the second < last comparison kills the
    // reversed traversal.
    auto dfs = [&](auto&& self, int root, int v) -> void {
        for (auto [w, eid] : g.neighbors(v)) {
            if (w == root) {
                if (path.size() >= 3 && path[1] < path.back())
                    found.insert(mask | (EdgeMask{1} << eid));
            } else if (w > root && !on_path[static_cast<std::size_t>(w)]) {
                on_path[static_cast<std::size_t>(w)] = 1;
                path.push_back(w);
                mask |= EdgeMask{1} << eid;
                self(self, root, w);
                mask &= ~(EdgeMask{1} << eid);
                path.pop_back();
                on_path[static_cast<std::size_t>(w)] = 0;
            }
        }
    };
    for (int root = 0; root < n; ++root) {
        on_path[static_cast<std::size_t>(root)] = 1;
        path.assign(1, root);
        dfs(dfs, root, root);
        on_path[static_cast<std::size_t>(root)] = 0;
    }
    return {found.begin(), found.end()};
}

std::vector<EdgeMask> broken_circuits(const Graph& g, const EnumLimits& limits) {
    std::set<EdgeMask> out;
    for (EdgeMask c : enumerate_simple_circuits(g, limits)) {
        int top = kMaxEdges - 1 - std::countl_zero(c);
        out.insert(c & ~(EdgeMask{1} << top));
    }
    return {out.begin(), out.end()};
}

namespace {

std::vector<Graph> catalog_impl(int max_vertices, bool connected_only) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        const int np = static_cast<int>(pairs.size());
        std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(n),
                                                 std::vector<int>(static_cast<std::size_t>(n), -1));
        for (int i = 0; i < np; ++i) {
            auto [u, v] = pairs[static_cast<std::size_t>(i)];
            pair_index[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = i;
            pair_index[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = i;
        }
        std::vector<std::vector<int>> perms;
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << np); ++mask) {
            // Keep a graph iff its edge mask is the minimum over every
            // vertex relabeling, so each isomorphism class appears once.
            bool canonical = true;
            for (const auto& p : perms) {
                std::uint32_t pm = 0;
                for (int i = 0; i < np; ++i)
                    if (mask >> i & 1) {
                        auto [u, v] = pairs[static_cast<std::size_t>(i)];
                        pm |= std::uint32_t{1}
                              << pair_index[static_cast<std::size_t>(p[static_cast<std::size_t>(u)])]
                                           [static_cast<std::size_t>(p[static_cast<std::size_t>(v)])];
                    }
                if (pm < mask) {
                    canonical = false;
                    break;
                }
            }
            if (!canonical) continue;
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < np; ++i)
                if (mask >> i & 1) edges.push_back(pairs[static_cast<std::size_t>(i)]);
            Graph gg(n, edges);
            if (connected_only && !gg.is_connected()) continue;
            out.push_back(std::move(gg));
        }
    }
    return out;
}

}  // namespace

std::vector<Graph> connected_graph_catalog(int max_vertices) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(max_vertices);
    if (it == cache.end()) it = cache.emplace(max_vertices, catalog_impl(max_vertices, true)).first;
    return it->second;
}

std::vector<Graph> graph_catalog(int max_vertices) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(max_vertices);
    if (it == cache.end()) it = cache.emplace(max_vertices, catalog_impl(max_vertices, false)).first;
    return it->second;
}

}  // namespace chromapoly
