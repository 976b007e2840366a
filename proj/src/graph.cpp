#include "chromapoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace chromapoly {

EnumLimits EnumLimits::defaults() {
    EnumLimits lim;
    if (const char* s = std::getenv("CHROMAPOLY_ENUM_LIMIT")) lim.max_vertices = std::atoi(s);
    if (const char* s = std::getenv("CHROMAPOLY_EDGE_LIMIT")) lim.max_edges = std::atoi(s);
    if (const char* s = std::getenv("CHROMAPOLY_COLORING_BUDGET")) lim.coloring_budget = std::atof(s);
    return lim;
}

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) : n_(vertex_count) {
    if (n_ < 0) throw ParseError("negative vertex count");
    if (n_ > kMaxVertices)
        throw ParseError("graph too large: " + std::to_string(n_) + " vertices exceeds the representation cap of " +
                         std::to_string(kMaxVertices));
    if (static_cast<int>(edges.size()) > kMaxEdges)
        throw ParseError("graph too large: " + std::to_string(edges.size()) +
                         " edges exceeds the representation cap of " + std::to_string(kMaxEdges));
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw ParseError("edge endpoint out of range: {" + std::to_string(u) + "," + std::to_string(v) + "}");
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u) + ": only simple graphs are supported");
        edges_.push_back(Edge{std::min(u, v), std::max(u, v)});
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1])
            throw ParseError("parallel edge {" + std::to_string(edges_[i].u) + "," + std::to_string(edges_[i].v) +
                             "}: only simple graphs are supported");
    build_tables();
}

Graph Graph::reordered(const std::vector<std::pair<int, int>>& order) const {
    if (order.size() != edges_.size())
        throw ParseError("edge order lists " + std::to_string(order.size()) + " edges, graph has " +
                         std::to_string(edges_.size()));
    Graph g;
    g.n_ = n_;
    std::vector<bool> used(edges_.size(), false);
    for (auto [u, v] : order) {
        int id = edge_id(u, v);
        if (id < 0)
            throw ParseError("edge order mentions {" + std::to_string(u) + "," + std::to_string(v) +
                             "} which is not an edge");
        if (used[static_cast<std::size_t>(id)])
            throw ParseError("edge order repeats {" + std::to_string(u) + "," + std::to_string(v) + "}");
        used[static_cast<std::size_t>(id)] = true;
        g.edges_.push_back(edges_[static_cast<std::size_t>(id)]);
    }
    g.build_tables();
    return g;
}

void Graph::build_tables() {
    adj_.assign(static_cast<std::size_t>(n_), {});
    adj_mask_.assign(static_cast<std::size_t>(n_), 0);
    incident_.assign(static_cast<std::size_t>(n_), 0);
    for (int id = 0; id < edge_count(); ++id) {
        const Edge& e = edges_[static_cast<std::size_t>(id)];
        adj_[static_cast<std::size_t>(e.u)].emplace_back(e.v, id);
        adj_[static_cast<std::size_t>(e.v)].emplace_back(e.u, id);
        adj_mask_[static_cast<std::size_t>(e.u)] |= VertexMask{1} << e.v;
        adj_mask_[static_cast<std::size_t>(e.v)] |= VertexMask{1} << e.u;
        incident_[static_cast<std::size_t>(e.u)] |= EdgeMask{1} << id;
        incident_[static_cast<std::size_t>(e.v)] |= EdgeMask{1} << id;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::edge_id(int u, int v) const {
    for (auto [w, id] : adj_[static_cast<std::size_t>(u)])
        if (w == v) return id;
    return -1;
}

VertexMask Graph::vertex_mask() const {
    return n_ == kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

EdgeMask Graph::edge_mask() const {
    int m = edge_count();
    return m == kMaxEdges ? ~EdgeMask{0} : (EdgeMask{1} << m) - 1;
}

EdgeMask Graph::edges_within(VertexMask r) const {
    EdgeMask out = 0;
    for (int id = 0; id < edge_count(); ++id) {
        const Edge& e = edges_[static_cast<std::size_t>(id)];
        if ((r >> e.u & 1) && (r >> e.v & 1)) out |= EdgeMask{1} << id;
    }
    return out;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return is_connected_within(vertex_mask());
}

bool Graph::is_connected_within(VertexMask r) const {
    if (r == 0) return true;
    VertexMask seen = r & -r;  // lowest vertex
    for (;;) {
        VertexMask frontier = seen;
        VertexMask grown = seen;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            grown |= adj_mask_[static_cast<std::size_t>(v)] & r;
        }
        if (grown == seen) break;
        seen = grown;
    }
    return seen == r;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    // Returns false if x and y were already joined.
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[static_cast<std::size_t>(y)] = x;
        return true;
    }
};

}  // namespace

int component_count(const Graph& g, EdgeMask edges) {
    return component_count_within(g, g.vertex_mask(), edges);
}

int component_count_within(const Graph& g, VertexMask r, EdgeMask edges) {
    Dsu dsu(g.vertex_count());
    int components = std::popcount(r);
    EdgeMask rest = edges & g.edges_within(r);
    while (rest) {
        int id = std::countr_zero(rest);
        rest &= rest - 1;
        const Edge& e = g.edge(id);
        if (dsu.unite(e.u, e.v)) --components;
    }
    return components;
}

Forest make_forest(const Graph& g, EdgeMask edges) {
    Forest f;
    f.edges = edges;
    Dsu dsu(g.vertex_count());
    EdgeMask rest = edges;
    while (rest) {
        int id = std::countr_zero(rest);
        rest &= rest - 1;
        const Edge& e = g.edge(id);
        if (!dsu.unite(e.u, e.v)) throw std::invalid_argument("edge set contains a circuit, not a forest");
    }
    // Group edges and vertices by component root; roots in min-vertex order.
    std::vector<int> root_index(static_cast<std::size_t>(g.vertex_count()), -1);
    rest = edges;
    while (rest) {
        int id = std::countr_zero(rest);
        rest &= rest - 1;
        const Edge& e = g.edge(id);
        int root = dsu.find(e.u);
        if (root_index[static_cast<std::size_t>(root)] < 0) {
            root_index[static_cast<std::size_t>(root)] = static_cast<int>(f.trees.size());
            f.trees.push_back(Tree{});
        }
        Tree& t = f.trees[static_cast<std::size_t>(root_index[static_cast<std::size_t>(root)])];
        t.vertices |= (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
        t.edges |= EdgeMask{1} << id;
    }
    std::sort(f.trees.begin(), f.trees.end(), [](const Tree& a, const Tree& b) {
        return std::countr_zero(a.vertices) < std::countr_zero(b.vertices);
    });
    return f;
}

Graph induced_subgraph(const Graph& g, VertexMask r) {
    if ((r & ~g.vertex_mask()) != 0) throw std::invalid_argument("vertex subset not contained in the graph");
    std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
    int k = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (r >> v & 1) new_id[static_cast<std::size_t>(v)] = k++;
    // Collect induced edges in the parent's edge order, then rebuild with that
    // order explicit so a custom parent order survives restriction.
    std::vector<std::pair<int, int>> in_order;
    for (const Edge& e : g.edges())
        if ((r >> e.u & 1) && (r >> e.v & 1))
            in_order.emplace_back(new_id[static_cast<std::size_t>(e.u)], new_id[static_cast<std::size_t>(e.v)]);
    Graph sub(k, in_order);
    return sub.reordered(in_order);
}

}  // namespace chromapoly
