#include "chromapoly/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "chromapoly/enumerate.hpp"

namespace chromapoly {

namespace {

void check_limits(const Graph& g, const EnumLimits& limits) {
    if (g.vertex_count() > limits.max_vertices)
        throw LimitError("vertex count " + std::to_string(g.vertex_count()) +
                         " exceeds enumeration limit " + std::to_string(limits.max_vertices) +
                         " (set CHROMAPOLY_ENUM_LIMIT to raise)");
    if (g.edge_count() > limits.max_edges)
        throw LimitError("edge count " + std::to_string(g.edge_count()) +
                         " exceeds enumeration limit " + std::to_string(limits.max_edges) +
                         " (set CHROMAPOLY_EDGE_LIMIT to raise)");
    if (g.edge_count() > 62)
        throw LimitError("edge count exceeds the 62-edge accumulator range");
}

// Union-find with rollback (union by size, no path compression) so subset
// recursions can share one structure.
struct UndoDsu {
    std::vector<int> parent;
    std::vector<int> size;
    std::vector<std::pair<int, int>> ops;  // (absorbed root, absorbing root)

    explicit UndoDsu(int n) : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) const {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    }
    bool unite(int a, int b) {
        int ra = find(a);
        int rb = find(b);
        if (ra == rb) return false;
        if (size[static_cast<std::size_t>(ra)] < size[static_cast<std::size_t>(rb)]) std::swap(ra, rb);
        parent[static_cast<std::size_t>(rb)] = ra;
        size[static_cast<std::size_t>(ra)] += size[static_cast<std::size_t>(rb)];
        ops.emplace_back(rb, ra);
        return true;
    }
    void undo() {
        auto [rb, ra] = ops.back();
        ops.pop_back();
        size[static_cast<std::size_t>(ra)] -= size[static_cast<std::size_t>(rb)];
        parent[static_cast<std::size_t>(rb)] = rb;
    }
};

IntPolynomial from_signed_level_counts(int n, const std::vector<long long>& count_by_size) {
    // q^n * sum_k N_k (-1/q)^k, i.e. coefficient of q^(n-k) is (-1)^k N_k.
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k < static_cast<int>(count_by_size.size()); ++k)
        if (k <= n) coeffs[static_cast<std::size_t>(n - k)] = (k % 2 ? -1 : 1) * BigInt(count_by_size[static_cast<std::size_t>(k)]);
    return IntPolynomial(std::move(coeffs));
}

}  // namespace

IntPolynomial chromatic_classical(const Graph& g, const EnumLimits& limits) {
    check_limits(g, limits);
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<long long> acc(static_cast<std::size_t>(n) + 1, 0);
    UndoDsu dsu(n);
    auto rec = [&](auto&& self, int idx, int components, long long sign) -> void {
        if (idx == m) {
            acc[static_cast<std::size_t>(components)] += sign;
            return;
        }
        self(self, idx + 1, components, sign);  // edge excluded
        const Edge& e = g.edge(idx);
        if (dsu.unite(e.u, e.v)) {
            self(self, idx + 1, components - 1, -sign);
            dsu.undo();
        } else {
            self(self, idx + 1, components, -sign);
        }
    };
    rec(rec, 0, n, 1);
    std::vector<BigInt> coeffs(acc.begin(), acc.end());
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial chromatic_whitney(const Graph& g, const EnumLimits& limits) {
    check_limits(g, limits);
    const int n = g.vertex_count();
    const int m = g.edge_count();
    // A forest picks up a broken circuit exactly when it adds the circuit's
    // top-ranked surviving edge after all the others (edges join in
    // ascending rank), so each broken circuit prunes at one place.
    std::vector<std::vector<EdgeMask>> tails_by_top(static_cast<std::size_t>(m));
    for (EdgeMask bc : broken_circuits(g, limits)) {
        const int top = kMaxEdges - 1 - std::countl_zero(bc);
        tails_by_top[static_cast<std::size_t>(top)].push_back(bc & ~(EdgeMask{1} << top));
    }
    std::vector<long long> count_by_size(static_cast<std::size_t>(n) + 1, 0);
    UndoDsu dsu(n);
    EdgeMask current = 0;
    int sz = 0;
    auto rec = [&](auto&& self, int next) -> void {
        ++count_by_size[static_cast<std::size_t>(sz)];
        for (int id = next; id < m; ++id) {
            bool completes = false;
            for (EdgeMask tail : tails_by_top[static_cast<std::size_t>(id)])
                if ((tail & current) == tail) {
                    completes = true;
                    break;
                }
            if (completes) continue;
            const Edge& e = g.edge(id);
            if (!dsu.unite(e.u, e.v)) continue;
            current |= EdgeMask{1} << id;
            ++sz;
            self(self, id + 1);
            --sz;
            current &= ~(EdgeMask{1} << id);
            dsu.undo();
        }
    };
    rec(rec, 0);
    return from_signed_level_counts(n, count_by_size);
}

namespace {

// Number of scheme-fixed spanning trees for every connected vertex subset;
// untrusted schemes get the full partition-property check on each
// restriction first.
std::vector<long long> closed_tree_counts(const Graph& g, const Scheme& m, const EnumLimits& limits) {
    auto subsets = enumerate_connected_subsets(g, limits);  // enforces the vertex limit
    std::vector<long long> counts(std::size_t{1} << g.vertex_count(), 0);
    for (VertexMask r : subsets) {
        if (!m.trusted()) {
            SchemeValidation v = validate_scheme(induced_subgraph(g, r), m, limits);
            if (!v.valid)
                throw SchemeInvalidError("scheme \"" + m.name() +
                                         "\" fails on a restriction: " + v.reason);
        }
        long long c = 0;
        for (EdgeMask t : spanning_trees_within(g, r, limits))
            if (m.map(g, r, t) == t) ++c;
        counts[r] = c;
    }
    return counts;
}

// Packs vertex-disjoint closed trees: level_counts[k] = number of
// scheme-closed forests with k edges.
std::vector<BigInt> closed_forest_levels(const Graph& g, const Scheme& m, const EnumLimits& limits) {
    const int n = g.vertex_count();
    if (n == 0) return {};
    auto counts = closed_tree_counts(g, m, limits);
    std::vector<std::vector<std::pair<VertexMask, long long>>> by_low(static_cast<std::size_t>(n));
    for (VertexMask r = 0; r < counts.size(); ++r)
        if (counts[r] > 0) by_low[static_cast<std::size_t>(std::countr_zero(r))].emplace_back(r, counts[r]);
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<std::vector<BigInt>> f(full + 1);
    f[0] = {BigInt(1)};
    for (std::size_t s = 1; s <= full; ++s) {
        const int low = std::countr_zero(s);
        f[s] = f[s & (s - 1)];  // the lowest vertex stays isolated
        for (auto [r, c] : by_low[static_cast<std::size_t>(low)]) {
            if ((r & s) != r) continue;
            const auto& rest = f[s & ~r];
            const std::size_t shift = static_cast<std::size_t>(std::popcount(r)) - 1;
            auto& dst = f[s];
            if (dst.size() < rest.size() + shift) dst.resize(rest.size() + shift);
            for (std::size_t k = 0; k < rest.size(); ++k) dst[k + shift] += c * rest[k];
        }
    }
    std::vector<BigInt> out = f[full];
    out.resize(static_cast<std::size_t>(n), 0);  // N_k for k = 0..n-1
    return out;
}

}  // namespace

IntPolynomial chromatic_scheme(const Graph& g, const Scheme& m, const EnumLimits& limits) {
    const int n = g.vertex_count();
    if (n == 0) return IntPolynomial({BigInt(1)});  // the empty forest alone
    auto levels = closed_forest_levels(g, m, limits);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k < static_cast<int>(levels.size()); ++k)
        coeffs[static_cast<std::size_t>(n - k)] = (k % 2 ? -levels[static_cast<std::size_t>(k)]
                                                         : levels[static_cast<std::size_t>(k)]);
    return IntPolynomial(std::move(coeffs));
}

std::vector<Forest> enumerate_scheme_forests(const Graph& g, const Scheme& m, const EnumLimits& limits) {
    std::unordered_map<EdgeMask, bool> closed_memo;
    std::set<VertexMask> validated;
    auto tree_closed = [&](const Tree& t) {
        auto it = closed_memo.find(t.edges);
        if (it != closed_memo.end()) return it->second;
        if (!m.trusted() && validated.insert(t.vertices).second) {
            SchemeValidation v = validate_scheme(induced_subgraph(g, t.vertices), m, limits);
            if (!v.valid)
                throw SchemeInvalidError("scheme \"" + m.name() +
                                         "\" fails on a restriction: " + v.reason);
        }
        bool closed = m.map(g, t.vertices, t.edges) == t.edges;
        closed_memo.emplace(t.edges, closed);
        return closed;
    };
    std::vector<Forest> out;
    for (Forest& f : enumerate_forests(g, limits)) {
        bool all = true;
        for (const Tree& t : f.trees)
            if (!tree_closed(t)) {
                all = false;
                break;
            }
        if (all) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(),
              [](const Forest& a, const Forest& b) { return a.edges < b.edges; });
    return out;
}

ForestLevelCounts forest_level_counts(const Graph& g, const Scheme& m, const EnumLimits& limits) {
    return closed_forest_levels(g, m, limits);
}

BigInt count_proper_colorings(const Graph& g, int q, const EnumLimits& limits) {
    if (q < 0) throw std::invalid_argument("negative color count");
    const int n = g.vertex_count();
    if (std::pow(static_cast<double>(q), n) > limits.coloring_budget)
        throw LimitError("q^n = " + std::to_string(q) + "^" + std::to_string(n) +
                         " exceeds the coloring budget (set CHROMAPOLY_COLORING_BUDGET to raise)");
    if (std::pow(static_cast<double>(q), n) > 4e18)
        throw LimitError("q^n exceeds the coloring counter range");
    if (n == 0) return 1;
    if (q == 0) return 0;
    std::vector<std::vector<std::size_t>> earlier(static_cast<std::size_t>(n));
    for (const Edge& e : g.edges())
        earlier[static_cast<std::size_t>(e.v)].push_back(static_cast<std::size_t>(e.u));
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    unsigned long long count = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (int c = 1; c <= q; ++c) {
            bool ok = true;
            for (std::size_t w : earlier[static_cast<std::size_t>(v)])
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[static_cast<std::size_t>(v)] = c;
            self(self, v + 1);
        }
        color[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 0);
    return count;
}

namespace {

// Stable vertex colors under iterated neighborhood refinement; the returned
// classes are isomorphism-invariant.
std::vector<int> refinement_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = std::popcount(g.adjacency_mask(v));
    for (int round = 0; round < n; ++round) {
        std::map<std::vector<int>, int> dense;
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.push_back(color[static_cast<std::size_t>(v)]);
            std::vector<int> nbr;
            for (auto [w, eid] : g.neighbors(v)) {
                (void)eid;
                nbr.push_back(color[static_cast<std::size_t>(w)]);
            }
            std::sort(nbr.begin(), nbr.end());
            s.insert(s.end(), nbr.begin(), nbr.end());
        }
        std::vector<std::vector<int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& s : sorted) dense.emplace(s, static_cast<int>(dense.size()));
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) next[static_cast<std::size_t>(v)] = dense[sig[static_cast<std::size_t>(v)]];
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

std::uint64_t hash_mix(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::uint64_t invariant_hash(const Graph& g, const std::vector<int>& color) {
    std::uint64_t h = hash_mix(0, static_cast<std::uint64_t>(g.vertex_count()));
    h = hash_mix(h, static_cast<std::uint64_t>(g.edge_count()));
    std::vector<int> hist = color;
    std::sort(hist.begin(), hist.end());
    for (int c : hist) h = hash_mix(h, static_cast<std::uint64_t>(c));
    std::vector<std::pair<int, int>> edge_colors;
    for (const Edge& e : g.edges()) {
        int a = color[static_cast<std::size_t>(e.u)];
        int b = color[static_cast<std::size_t>(e.v)];
        edge_colors.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edge_colors.begin(), edge_colors.end());
    for (auto [a, b] : edge_colors) h = hash_mix(hash_mix(h, static_cast<std::uint64_t>(a)), static_cast<std::uint64_t>(b));
    return h;
}

bool extend_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& order,
                        std::vector<int>& map_ab, std::vector<char>& used, std::size_t idx,
                        const std::vector<int>& ca, const std::vector<int>& cb) {
    if (idx == order.size()) return true;
    const int v = order[idx];
    for (int w = 0; w < b.vertex_count(); ++w) {
        if (used[static_cast<std::size_t>(w)]) continue;
        if (ca[static_cast<std::size_t>(v)] != cb[static_cast<std::size_t>(w)]) continue;
        bool ok = true;
        for (std::size_t j = 0; j < idx; ++j) {
            const int u = order[j];
            if (a.adjacent(v, u) != b.adjacent(w, map_ab[static_cast<std::size_t>(u)])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map_ab[static_cast<std::size_t>(v)] = w;
        used[static_cast<std::size_t>(w)] = 1;
        if (extend_isomorphism(a, b, order, map_ab, used, idx + 1, ca, cb)) return true;
        used[static_cast<std::size_t>(w)] = 0;
    }
    return false;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    const int n = a.vertex_count();
    std::vector<int> ca = refinement_colors(a);
    std::vector<int> cb = refinement_colors(b);
    std::vector<int> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    // rarest colors first keeps the search narrow
    std::vector<int> freq(static_cast<std::size_t>(n) + 1, 0);
    for (int c : ca) ++freq[static_cast<std::size_t>(c)];
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        int fx = freq[static_cast<std::size_t>(ca[static_cast<std::size_t>(x)])];
        int fy = freq[static_cast<std::size_t>(ca[static_cast<std::size_t>(y)])];
        if (fx != fy) return fx < fy;
        return x < y;
    });
    std::vector<int> map_ab(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    return extend_isomorphism(a, b, order, map_ab, used, 0, ca, cb);
}

Graph contract_edge(const Graph& g, int edge_id) {
    const Edge& e = g.edge(edge_id);
    std::set<std::pair<int, int>> edges;
    for (int id = 0; id < g.edge_count(); ++id) {
        if (id == edge_id) continue;
        const Edge& f = g.edge(id);
        auto relabel = [&](int v) {
            if (v == e.v) v = e.u;
            return v > e.v ? v - 1 : v;
        };
        int a = relabel(f.u);
        int b = relabel(f.v);
        if (a == b) continue;  // the other edge of a collapsed triangle
        edges.emplace(std::min(a, b), std::max(a, b));
    }
    return Graph(g.vertex_count() - 1, {edges.begin(), edges.end()});
}

IntPolynomial q_power_times_qm1(int c, int m) {
    IntPolynomial p = IntPolynomial::monomial(c);
    IntPolynomial qm1(std::vector<BigInt>{-1, 1});
    for (int i = 0; i < m; ++i) p = p * qm1;
    return p;
}

IntPolynomial delcon_impl(const Graph& g);

IntPolynomial delcon_core(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int c = component_count(g, g.edge_mask());
    if (m == n - c) return q_power_times_qm1(c, m);  // forest: q^c (q-1)^m
    if (m == n * (n - 1) / 2) {                      // complete: falling factorial
        IntPolynomial p = IntPolynomial::monomial(0, 1);
        for (int i = 0; i < n; ++i) p = p * IntPolynomial(std::vector<BigInt>{-i, 1});
        return p;
    }
    // some edge lies on a circuit, so deletion keeps the component count
    int pick = -1;
    for (int id = 0; id < m && pick < 0; ++id)
        if (component_count(g, g.edge_mask() & ~(EdgeMask{1} << id)) == c) pick = id;
    std::vector<std::pair<int, int>> remaining;
    for (int id = 0; id < m; ++id)
        if (id != pick) remaining.emplace_back(g.edge(id).u, g.edge(id).v);
    IntPolynomial deleted = delcon_impl(Graph(n, remaining));
    IntPolynomial contracted = delcon_impl(contract_edge(g, pick));
    return deleted - contracted;
}

IntPolynomial delcon_impl(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int c = component_count(g, g.edge_mask());
    if (m == n - c || m == n * (n - 1) / 2) return delcon_core(g);  // closed forms skip the memo
    static std::mutex mu;
    static std::unordered_map<std::uint64_t, std::vector<std::pair<Graph, IntPolynomial>>> memo;
    const std::uint64_t h = invariant_hash(g, refinement_colors(g));
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(h);
        if (it != memo.end())
            for (const auto& [stored, poly] : it->second)
                if (isomorphic(g, stored)) return poly;
    }
    IntPolynomial result = delcon_core(g);
    std::lock_guard<std::mutex> lock(mu);
    memo[h].emplace_back(g, result);
    return result;
}

}  // namespace

IntPolynomial deletion_contraction(const Graph& g) { return delcon_impl(g); }

IntPolynomial chromatic_brute(const Graph& g, const EnumLimits& limits) {
    const int n = g.vertex_count();
    std::vector<BigInt> diffs;
    for (int q = 0; q <= n; ++q) diffs.push_back(count_proper_colorings(g, q, limits));
    // forward differences at the integer nodes 0..n
    for (int level = 1; level <= n; ++level)
        for (int j = n; j >= level; --j)
            diffs[static_cast<std::size_t>(j)] -= diffs[static_cast<std::size_t>(j) - 1];
    // P(q) = sum_k diffs[k] * q(q-1)...(q-k+1) / k!
    std::vector<Rational> acc(static_cast<std::size_t>(n) + 1, Rational(0));
    std::vector<Rational> falling{Rational(1)};  // coefficients of q(q-1)...(q-k+1)
    BigInt factorial = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            factorial *= k;
            // multiply the falling factorial by (q - (k-1))
            falling.push_back(Rational(0));
            for (std::size_t j = falling.size() - 1; j > 0; --j)
                falling[j] = falling[j - 1] - Rational(k - 1) * falling[j];
            falling[0] = -Rational(k - 1) * falling[0];
        }
        const Rational scale = Rational(diffs[static_cast<std::size_t>(k)]) / Rational(factorial);
        if (scale == 0) continue;
        for (std::size_t j = 0; j < falling.size(); ++j) acc[j] += scale * falling[j];
    }
    std::vector<BigInt> coeffs;
    for (const Rational& r : acc) {
        if (boost::multiprecision::denominator(r) != 1)
            throw std::logic_error("interpolation produced a non-integer coefficient");
        coeffs.push_back(boost::multiprecision::numerator(r));
    }
    return IntPolynomial(std::move(coeffs));
}

}  // namespace chromapoly
