// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Everything here is identity- or oracle-based and exact unless a
// tolerance is stated on the line itself.
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "chromapoly/chromatic.hpp"
#include "chromapoly/enumerate.hpp"
#include "chromapoly/polymer.hpp"
#include "chromapoly/potts.hpp"

namespace {

using namespace chromapoly;

struct Verdict {
    bool ok = true;
    std::string note;

    void fail(const std::string& what) {
        if (ok) note = what;  // keep the first failure
        ok = false;
    }
};

struct Case {
    Graph g;
    IntPolynomial p;  // classical reference, filled by criterion 1
};

std::string signature(const Graph& g) {
    std::string s = std::to_string(g.vertex_count()) + " vertices,";
    for (const Edge& e : g.edges()) s += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
    return s;
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph(n, e);
}

// 200 connected graphs on 7..9 vertices: a random recursive tree plus up to
// 16 - (n-1) extra edges. Fixed seed; rng() % k keeps the stream portable.
std::vector<Graph> random_suite(int count) {
    std::mt19937 rng(20240815);
    std::vector<Graph> out;
    while (static_cast<int>(out.size()) < count) {
        const int n = 7 + static_cast<int>(rng() % 3);
        std::set<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v) edges.emplace(static_cast<int>(rng() % v), v);
        int extra = static_cast<int>(rng() % static_cast<unsigned>(16 - n + 2));
        for (int tries = 0; tries < 128 && extra > 0; ++tries) {
            int u = static_cast<int>(rng() % n);
            int v = static_cast<int>(rng() % n);
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            if (edges.emplace(u, v).second) --extra;
        }
        out.emplace_back(n, std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
    }
    return out;
}

// The largest q <= hi whose q^n stays inside the coloring budget.
int budget_top(int n, int hi) {
    const double budget = EnumLimits::defaults().coloring_budget;
    int q = hi;
    while (q > 0 && std::pow(static_cast<double>(q), n) > budget) --q;
    return q;
}

std::set<EdgeMask> forest_edge_sets(const Graph& g, const Scheme& m) {
    std::set<EdgeMask> out;
    for (const Forest& f : enumerate_scheme_forests(g, m)) out.insert(f.edges);
    return out;
}

// 1. Every representation of the chromatic polynomial agrees coefficient-wise.
Verdict criterion_agreement(std::vector<Case>& catalog, std::vector<Case>& randoms) {
    Verdict v;
    const Scheme minimal = Scheme::minimal_tree();
    const Scheme penrose = Scheme::penrose();
    int sixes = 0;
    for (const Case& c : catalog) sixes += c.g.vertex_count() == 6;
    if (static_cast<int>(catalog.size()) != 143 || sixes != 112)
        v.fail("expected 143 connected representatives (112 on six vertices), got " +
               std::to_string(catalog.size()) + " (" + std::to_string(sixes) + ")");
    auto run = [&](std::vector<Case>& cases) {
        for (Case& c : cases) {
            c.p = chromatic_classical(c.g);
            if (chromatic_whitney(c.g) != c.p) v.fail("whitney disagrees on " + signature(c.g));
            if (chromatic_scheme(c.g, minimal) != c.p)
                v.fail("minimal-tree scheme disagrees on " + signature(c.g));
            if (chromatic_scheme(c.g, penrose) != c.p)
                v.fail("penrose scheme disagrees on " + signature(c.g));
            if (chromatic_via_polymer(c.g) != c.p) v.fail("polymer route disagrees on " + signature(c.g));
            if (deletion_contraction(c.g) != c.p)
                v.fail("deletion-contraction disagrees on " + signature(c.g));
        }
    };
    run(catalog);
    run(randoms);
    if (v.ok)
        v.note = "classical = whitney = scheme (both) = polymer = deletion-contraction on " +
                 std::to_string(catalog.size() + randoms.size()) + " graphs";
    return v;
}

// 2. Polynomial values equal the brute-force coloring count.
Verdict criterion_coloring_oracle(const std::vector<Case>& catalog,
                                  const std::vector<Case>& randoms) {
    Verdict v;
    long long evaluations = 0;
    bool clipped = false;
    auto run = [&](const std::vector<Case>& cases) {
        for (const Case& c : cases) {
            const int n = c.g.vertex_count();
            const int top = budget_top(n, n + 1);
            clipped |= top < n + 1;
            for (int q = 0; q <= top; ++q) {
                ++evaluations;
                if (c.p(BigInt(q)) != count_proper_colorings(c.g, q))
                    v.fail("value at q = " + std::to_string(q) + " wrong on " + signature(c.g));
            }
        }
    };
    run(catalog);
    run(randoms);
    if (v.ok) {
        v.note = "P(q) = proper coloring count at " + std::to_string(evaluations) + " points";
        if (clipped) v.note += " (budget caps q below |V|+1 on nine-vertex graphs)";
    }
    return v;
}

// 3. Minimal-tree closed forests are exactly the broken-circuit-free forests.
Verdict criterion_whitney_sets() {
    Verdict v;
    const Scheme minimal = Scheme::minimal_tree();
    auto catalog = graph_catalog(6);
    long long forests = 0;
    for (const Graph& g : catalog) {
        const auto bcs = broken_circuits(g);
        std::set<EdgeMask> free_sets;
        for (const Forest& f : enumerate_forests(g))
            if (is_broken_circuit_free(f.edges, bcs)) free_sets.insert(f.edges);
        forests += static_cast<long long>(free_sets.size());
        if (forest_edge_sets(g, minimal) != free_sets)
            v.fail("closed and broken-circuit-free forests differ on " + signature(g));
    }
    if (v.ok)
        v.note = "closed forests = broken-circuit-free forests, " + std::to_string(forests) +
                 " forests over " + std::to_string(catalog.size()) + " graphs";
    return v;
}

// 4. Level counts ignore the edge order and the scheme even when the forest
//    sets themselves move.
Verdict criterion_level_counts(const std::vector<Case>& catalog) {
    Verdict v;
    const Scheme minimal = Scheme::minimal_tree();
    const Scheme penrose = Scheme::penrose();
    std::mt19937 rng(7);
    int moved = 0;
    std::string first_witness;
    for (const Case& c : catalog) {
        const auto base = forest_level_counts(c.g, minimal);
        if (forest_level_counts(c.g, penrose) != base)
            v.fail("level counts depend on the scheme on " + signature(c.g));
        std::vector<std::pair<int, int>> order;
        for (const Edge& e : c.g.edges()) order.emplace_back(e.u, e.v);
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            std::shuffle(order.begin(), order.end(), rng);
            if (forest_level_counts(c.g.reordered(order), minimal) != base)
                v.fail("level counts depend on the edge order on " + signature(c.g));
        }
        if (forest_edge_sets(c.g, minimal) != forest_edge_sets(c.g, penrose)) {
            ++moved;
            if (first_witness.empty()) first_witness = signature(c.g);
        }
    }
    if (moved == 0) v.fail("no graph where the schemes produce different forest sets");
    if (v.ok)
        v.note = "N_k stable under 3 random edge orders and both schemes; sets differ on " +
                 std::to_string(moved) + " graphs (first: " + first_witness + ")";
    return v;
}

// 5. The tree-sum identity holds exactly for random rational edge weights.
Verdict criterion_tree_sum(const std::vector<Case>& catalog) {
    Verdict v;
    const Scheme minimal = Scheme::minimal_tree();
    const Scheme penrose = Scheme::penrose();
    std::mt19937 rng(20240815);
    long long checks = 0;
    for (const Case& c : catalog) {
        if (c.g.vertex_count() < 2) continue;
        for (int draw = 0; draw < 50; ++draw) {
            WeightAssignment w(static_cast<std::size_t>(c.g.edge_count()));
            for (Rational& x : w)
                x = Rational(static_cast<int>(rng() % 17) - 8, static_cast<int>(1 + rng() % 4));
            const auto a = check_penrose_identity(c.g, w, minimal);
            const auto b = check_penrose_identity(c.g, w, penrose);
            checks += 2;
            if (!a.equal || !b.equal || a.lhs != b.lhs)
                v.fail("tree sum misses the subgraph sum on " + signature(c.g));
        }
    }
    if (v.ok) v.note = "exact for " + std::to_string(checks) + " random rational weight draws";
    return v;
}

// 6. The partition-property validator accepts minimal-tree everywhere and
//    rejects the identity map with a witness.
Verdict criterion_validator(const std::vector<Case>& catalog) {
    Verdict v;
    const Scheme minimal = Scheme::minimal_tree();
    for (const Case& c : catalog) {
        const auto res = validate_scheme(c.g, minimal);
        if (!res.valid) v.fail("minimal-tree rejected on " + signature(c.g) + ": " + res.reason);
    }
    const auto broken = validate_scheme(complete(3), Scheme::identity());
    if (broken.valid || broken.witness == 0 || broken.reason.empty())
        v.fail("identity map not rejected with a witness on the triangle");
    if (v.ok)
        v.note = "minimal-tree valid on all " + std::to_string(catalog.size()) +
                 " graphs; identity map rejected on the triangle (" + broken.reason + ")";
    return v;
}

// 7. The color sum over a subset reproduces q times its activity, and the
//    scheme route reproduces the direct activity.
Verdict criterion_mayer() {
    Verdict v;
    const Scheme minimal = Scheme::minimal_tree();
    const Scheme penrose = Scheme::penrose();
    long long identities = 0;
    long long activities = 0;
    for (const Graph& g : graph_catalog(5)) {
        const VertexMask full = g.vertex_mask();
        for (VertexMask r = 3; r <= full; ++r) {
            if ((r & full) != r || std::popcount(r) < 2) continue;
            for (int q : {2, 3}) {
                ++identities;
                if (!check_mayer_identity(g, r, q).equal)
                    v.fail("color sum misses q * activity for subset " + std::to_string(r) +
                           " of " + signature(g));
            }
            if (!g.is_connected_within(r)) continue;
            ++activities;
            const Activity direct = activity(g, r);
            if (activity_via_scheme(g, r, minimal) != direct ||
                activity_via_scheme(g, r, penrose) != direct)
                v.fail("scheme activity differs for subset " + std::to_string(r) + " of " +
                       signature(g));
        }
    }
    if (v.ok)
        v.note = "color-sum identity at " + std::to_string(identities) +
                 " subset/q pairs; scheme activity matches at " + std::to_string(activities) +
                 " subsets";
    return v;
}

// 8. Frozen regression values.
Verdict criterion_regressions() {
    Verdict v;
    const Graph k3 = complete(3);
    const Graph c4 = cycle(4);
    if (chromatic_classical(k3) != IntPolynomial({0, 2, -3, 1}))
        v.fail("triangle polynomial moved");
    if (chromatic_classical(c4) != IntPolynomial({0, -3, 6, -4, 1}))
        v.fail("four-cycle polynomial moved");
    for (VertexMask pair : {VertexMask{0b011}, VertexMask{0b101}, VertexMask{0b110}})
        if (activity(k3, pair) != Activity{-1, 1}) v.fail("edge activity is not -1/q");
    if (activity(k3, 0b111) != Activity{2, 2}) v.fail("triangle activity is not 2/q^2");
    if (xi(k3) != XiPolynomial({1, -3, 2})) v.fail("Xi(triangle) moved");
    if (v.ok) v.note = "triangle and four-cycle polynomials, activities, and Xi pinned";
    return v;
}

// 9. Potts: the two-spin partition function and the zero-temperature
//    antiferromagnetic count against the polynomial.
Verdict criterion_potts(const std::vector<Case>& catalog, const std::vector<Case>& randoms) {
    Verdict v;
    const double z = partition_function(complete(2), PottsParameters{2, 1.0, 1.0});
    if (std::abs(z - (2 * std::exp(1.0) + 2)) > 1e-12)
        v.fail("Z(K2, q=2, beta=1, J=1) misses 2e + 2");
    long long points = 0;
    for (const Case& c : catalog) {
        const int top = budget_top(c.g.vertex_count(), c.g.vertex_count() + 1);
        for (int q = 0; q <= top; ++q) {
            ++points;
            if (zero_temperature_antiferromagnetic(c.g, q) != c.p(BigInt(q)))
                v.fail("hard-constraint count misses P(" + std::to_string(q) + ") on " +
                       signature(c.g));
        }
    }
    for (const Case& c : randoms)
        for (int q : {2, 3, 4}) {
            ++points;
            if (zero_temperature_antiferromagnetic(c.g, q) != c.p(BigInt(q)))
                v.fail("hard-constraint count misses P(" + std::to_string(q) + ") on " +
                       signature(c.g));
        }
    if (v.ok)
        v.note = "Z(K2) = 2e + 2 within 1e-12; zero-temperature count = P(q) at " +
                 std::to_string(points) + " points";
    return v;
}

}  // namespace

int main() {
    std::vector<Case> catalog;
    for (Graph& g : connected_graph_catalog(6)) catalog.push_back({std::move(g), {}});
    std::vector<Case> randoms;
    for (Graph& g : random_suite(200)) randoms.push_back({std::move(g), {}});

    std::vector<Verdict> verdicts;
    verdicts.push_back(criterion_agreement(catalog, randoms));
    verdicts.push_back(criterion_coloring_oracle(catalog, randoms));
    verdicts.push_back(criterion_whitney_sets());
    verdicts.push_back(criterion_level_counts(catalog));
    verdicts.push_back(criterion_tree_sum(catalog));
    verdicts.push_back(criterion_validator(catalog));
    verdicts.push_back(criterion_mayer());
    verdicts.push_back(criterion_regressions());
    verdicts.push_back(criterion_potts(catalog, randoms));

    int failed = 0;
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const Verdict& v = verdicts[i];
        failed += !v.ok;
        std::cout << "criterion " << i + 1 << ": " << (v.ok ? "pass" : "FAIL") << "  " << v.note
                  << "\n";
    }
    if (failed) std::cout << failed << " criteria failed\n";
    return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
