#include "chromapoly/schemes.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "chromapoly/enumerate.hpp"

namespace chromapoly {

namespace {

Tree checked_spanning_tree(const Graph& g, VertexMask r, EdgeMask tree_edges) {
    Forest f = make_forest(g, tree_edges);  // throws on a circuit
    if (f.trees.size() != 1 || f.trees[0].vertices != r)
        throw std::invalid_argument("tree does not span the restriction");
    return f.trees[0];
}

EdgeMask penrose_oriented(const Graph& g, VertexMask r, EdgeMask tree_edges, bool flipped) {
    checked_spanning_tree(g, r, tree_edges);
    const int n = g.vertex_count();
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    const int root = std::countr_zero(r);
    depth[static_cast<std::size_t>(root)] = 0;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (auto [w, eid] : g.neighbors(v)) {
            if (!(tree_edges >> eid & 1) || depth[static_cast<std::size_t>(w)] >= 0) continue;
            depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
            parent[static_cast<std::size_t>(w)] = v;
            queue.push_back(w);
        }
    }
    EdgeMask result = tree_edges;
    for (EdgeMask rest = g.edges_within(r) & ~tree_edges; rest != 0; rest &= rest - 1) {
        const int id = std::countr_zero(rest);
        const Edge& e = g.edge(id);
        const int dx = depth[static_cast<std::size_t>(e.u)];
        const int dy = depth[static_cast<std::size_t>(e.v)];
        if (dx == dy) {
            result |= EdgeMask{1} << id;
        } else if (dx - dy == 1 || dy - dx == 1) {
            const int deep = dx > dy ? e.u : e.v;
            const int shallow = dx > dy ? e.v : e.u;
            const bool precedes = parent[static_cast<std::size_t>(deep)] < shallow;
            if (precedes != flipped) result |= EdgeMask{1} << id;
        }
    }
    return result;
}

SchemeValidation validate_map(const Graph& g, const Scheme::MapFn& fn, const EnumLimits& limits) {
    if (!g.is_connected()) throw NotConnectedError("scheme validation needs a connected graph");
    SchemeValidation rep;
    auto subgraphs = enumerate_connected_spanning_subgraphs(g, limits);
    rep.subgraph_count = static_cast<int>(subgraphs.size());
    if (g.vertex_count() <= 1) return rep;  // one subgraph, no nontrivial trees
    auto trees = enumerate_spanning_trees(g, limits);
    rep.tree_count = static_cast<int>(trees.size());
    std::unordered_map<EdgeMask, int> cover;
    cover.reserve(subgraphs.size() * 2);
    for (const Tree& t : trees) {
        EdgeMask image = fn(g, g.vertex_mask(), t.edges);
        if ((image & t.edges) != t.edges || (image & ~g.edge_mask()) != 0) {
            rep.valid = false;
            rep.reason = "map image does not contain its tree";
            rep.witness = image;
            return rep;
        }
        // tau <= h <= m(tau) is automatically connected and spanning
        for (EdgeMask extra = image & ~t.edges, sub = extra;; sub = (sub - 1) & extra) {
            ++cover[t.edges | sub];
            if (sub == 0) break;
        }
    }
    for (EdgeMask c : subgraphs) {
        auto it = cover.find(c);
        const int hits = it == cover.end() ? 0 : it->second;
        if (hits != 1) {
            rep.valid = false;
            rep.reason = hits == 0 ? "connected spanning subgraph lies in no interval"
                                   : "connected spanning subgraph lies in several intervals";
            rep.witness = c;
            rep.witness_cover = hits;
            return rep;
        }
    }
    return rep;
}

template <class Fn>
void for_each_labeled_connected(int n, Fn&& fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int np = static_cast<int>(pairs.size());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << np); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < np; ++i)
            if (mask >> i & 1) edges.push_back(pairs[static_cast<std::size_t>(i)]);
        Graph g(n, edges);
        if (g.is_connected()) fn(g);
    }
}

// The depth rule is label-sensitive, so the suite runs every labeling up to
// 5 vertices and one representative per class at 6.
bool depth_rule_suite_passes(bool flipped) {
    auto fn = [flipped](const Graph& g, VertexMask r, EdgeMask te) {
        return penrose_oriented(g, r, te, flipped);
    };
    bool ok = true;
    for (int n = 2; n <= 5 && ok; ++n)
        for_each_labeled_connected(n, [&](const Graph& g) {
            if (ok && !validate_map(g, fn, EnumLimits::defaults()).valid) ok = false;
        });
    if (!ok) return false;
    for (const Graph& g : connected_graph_catalog(6)) {
        if (g.vertex_count() != 6) continue;
        if (!validate_map(g, fn, EnumLimits::defaults()).valid) return false;
    }
    return true;
}

bool penrose_flip() {
    static const bool flip = [] {
        if (depth_rule_suite_passes(false)) return false;
        if (depth_rule_suite_passes(true)) return true;
        throw SchemeInvalidError(
            "neither orientation of the depth-rule map passes partition-scheme validation");
    }();
    return flip;
}

}  // namespace

EdgeMask minimal_tree_map(const Graph& g, VertexMask r, EdgeMask tree_edges) {
    Tree t = checked_spanning_tree(g, r, tree_edges);
    EdgeMask result = tree_edges;
    for (EdgeMask rest = g.edges_within(r) & ~tree_edges; rest != 0; rest &= rest - 1) {
        const int id = std::countr_zero(rest);
        const Edge& e = g.edge(id);
        bool dominates = true;
        for (int pe : tree_path(g, t, e.u, e.v))
            if (pe > id) {
                dominates = false;
                break;
            }
        if (dominates) result |= EdgeMask{1} << id;
    }
    return result;
}

EdgeMask penrose_map(const Graph& g, VertexMask r, EdgeMask tree_edges) {
    return penrose_oriented(g, r, tree_edges, penrose_flip());
}

Scheme::Scheme(std::string name, MapFn fn, bool trusted)
    : name_(std::move(name)), fn_(std::move(fn)), trusted_(trusted) {}

Scheme Scheme::minimal_tree() {
    return Scheme("minimal-tree",
                  [](const Graph& g, VertexMask r, EdgeMask te) { return minimal_tree_map(g, r, te); },
                  true);
}

Scheme Scheme::penrose() {
    const bool flip = penrose_flip();  // throws if self-validation fails
    return Scheme("penrose",
                  [flip](const Graph& g, VertexMask r, EdgeMask te) {
                      return penrose_oriented(g, r, te, flip);
                  },
                  true);
}

Scheme Scheme::identity() {
    return Scheme("identity",
                  [](const Graph& g, VertexMask r, EdgeMask te) {
                      checked_spanning_tree(g, r, te);
                      return te;
                  },
                  false);
}

Scheme Scheme::custom(std::string name, MapFn fn) {
    return Scheme(std::move(name), std::move(fn), false);
}

Scheme Scheme::by_name(const std::string& name) {
    if (name == "minimal-tree") return minimal_tree();
    if (name == "penrose") return penrose();
    if (name == "identity") return identity();
    throw std::invalid_argument("unknown scheme \"" + name +
                                "\" (expected minimal-tree, penrose, or identity)");
}

SchemeValidation validate_scheme(const Graph& g, const Scheme& m, const EnumLimits& limits) {
    return validate_map(
        g, [&m](const Graph& gg, VertexMask r, EdgeMask te) { return m.map(gg, r, te); }, limits);
}

bool is_scheme_closed(const Graph& g, const Tree& t, const Scheme& m) {
    return m.map(g, t.vertices, t.edges) == t.edges;
}

PenroseIdentityResult check_penrose_identity(const Graph& g, const WeightAssignment& w,
                                             const Scheme& m, const EnumLimits& limits) {
    if (g.vertex_count() < 2) throw std::invalid_argument("identity needs at least two vertices");
    if (!g.is_connected()) throw NotConnectedError("identity check needs a connected graph");
    if (static_cast<int>(w.size()) != g.edge_count())
        throw std::invalid_argument("one weight per edge required");
    if (!m.trusted()) {
        SchemeValidation v = validate_scheme(g, m, limits);
        if (!v.valid)
            throw SchemeInvalidError("scheme \"" + m.name() + "\" is invalid here: " + v.reason);
    }
    PenroseIdentityResult out;
    for (EdgeMask c : enumerate_connected_spanning_subgraphs(g, limits)) {
        Rational term = 1;
        for (EdgeMask rest = c; rest != 0; rest &= rest - 1)
            term *= w[static_cast<std::size_t>(std::countr_zero(rest))];
        out.lhs += term;
    }
    for (const Tree& t : enumerate_spanning_trees(g, limits)) {
        Rational term = 1;
        for (EdgeMask rest = t.edges; rest != 0; rest &= rest - 1)
            term *= w[static_cast<std::size_t>(std::countr_zero(rest))];
        EdgeMask image = m.map(g, g.vertex_mask(), t.edges);
        for (EdgeMask rest = image & ~t.edges; rest != 0; rest &= rest - 1)
            term *= 1 + w[static_cast<std::size_t>(std::countr_zero(rest))];
        out.rhs += term;
    }
    out.equal = out.lhs == out.rhs;
    return out;
}

PenroseIdentityApprox check_penrose_identity_approx(const Graph& g, const std::vector<double>& w,
                                                    const Scheme& m, double tolerance,
                                                    const EnumLimits& limits) {
    if (g.vertex_count() < 2) throw std::invalid_argument("identity needs at least two vertices");
    if (!g.is_connected()) throw NotConnectedError("identity check needs a connected graph");
    if (static_cast<int>(w.size()) != g.edge_count())
        throw std::invalid_argument("one weight per edge required");
    if (!m.trusted()) {
        SchemeValidation v = validate_scheme(g, m, limits);
        if (!v.valid)
            throw SchemeInvalidError("scheme \"" + m.name() + "\" is invalid here: " + v.reason);
    }
    PenroseIdentityApprox out;
    for (EdgeMask c : enumerate_connected_spanning_subgraphs(g, limits)) {
        double term = 1;
        for (EdgeMask rest = c; rest != 0; rest &= rest - 1)
            term *= w[static_cast<std::size_t>(std::countr_zero(rest))];
        out.lhs += term;
    }
    for (const Tree& t : enumerate_spanning_trees(g, limits)) {
        double term = 1;
        for (EdgeMask rest = t.edges; rest != 0; rest &= rest - 1)
            term *= w[static_cast<std::size_t>(std::countr_zero(rest))];
        EdgeMask image = m.map(g, g.vertex_mask(), t.edges);
        for (EdgeMask rest = image & ~t.edges; rest != 0; rest &= rest - 1)
            term *= 1 + w[static_cast<std::size_t>(std::countr_zero(rest))];
        out.rhs += term;
    }
    const double scale = std::max({1.0, std::abs(out.lhs), std::abs(out.rhs)});
    out.equal = std::abs(out.lhs - out.rhs) <= tolerance * scale;
    return out;
}

}  // namespace chromapoly
