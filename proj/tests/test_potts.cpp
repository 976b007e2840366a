#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "chromapoly/chromatic.hpp"
#include "chromapoly/enumerate.hpp"
#include "chromapoly/polymer.hpp"
#include "chromapoly/potts.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace chromapoly;
using namespace chromapoly::testutil;

namespace {

std::vector<int> vertices_of(VertexMask r) {
    std::vector<int> out;
    for (VertexMask rest = r; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
    return out;
}

// The Mayer sum taken literally: over ALL connected graphs h on the vertex
// set r (not only subgraphs of g), each weighted by the product over the
// edges of h of the infinite-coupling factor exp(-J delta) - 1. Pairs outside
// g contribute exp(0) - 1 = 0 and monochromatic edges of g contribute -1, so
// the zero factors are multiplied out explicitly here instead of being
// skipped up front.
long long literal_mayer_sum(const Graph& g, VertexMask r, const SpinConfiguration& s) {
    std::vector<int> verts = vertices_of(r);
    const int k = static_cast<int>(verts.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) pairs.emplace_back(verts[i], verts[j]);
    long long total = 0;
    for (unsigned h = 0; h < (1u << pairs.size()); ++h) {
        // connectivity of h over verts, by label propagation
        std::vector<int> comp(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) comp[static_cast<std::size_t>(i)] = i;
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t e = 0; e < pairs.size(); ++e) {
                if (!(h >> e & 1)) continue;
                int a = 0, b = 0;
                for (int i = 0; i < k; ++i) {
                    if (verts[static_cast<std::size_t>(i)] == pairs[e].first) a = i;
                    if (verts[static_cast<std::size_t>(i)] == pairs[e].second) b = i;
                }
                int lo = std::min(comp[static_cast<std::size_t>(a)], comp[static_cast<std::size_t>(b)]);
                if (comp[static_cast<std::size_t>(a)] != lo || comp[static_cast<std::size_t>(b)] != lo) {
                    comp[static_cast<std::size_t>(a)] = comp[static_cast<std::size_t>(b)] = lo;
                    changed = true;
                }
            }
        }
        bool connected = true;
        for (int c : comp) connected = connected && c == 0;
        if (!connected) continue;
        long long weight = 1;
        for (std::size_t e = 0; e < pairs.size(); ++e) {
            if (!(h >> e & 1)) continue;
            auto [x, y] = pairs[e];
            long long factor = 0;  // pairs outside g: exp(0) - 1
            if (g.edge_id(x, y) >= 0)
                factor = s[static_cast<std::size_t>(x)] == s[static_cast<std::size_t>(y)] ? -1 : 0;
            weight *= factor;
        }
        total += weight;
    }
    return total;
}

}  // namespace

TEST_CASE("energy of configurations") {
    Graph k2 = complete(2);
    CHECK(hamiltonian(k2, {1, 1}, 1.0) == -1.0);
    CHECK(hamiltonian(k2, {1, 2}, 5.0) == 0.0);
    Graph k3 = complete(3);
    CHECK(hamiltonian(k3, {2, 2, 2}, -2.0) == 6.0);
    CHECK(monochromatic_edge_count(k3, {1, 1, 2}) == 1);
    CHECK(hamiltonian(k3, {1, 1, 1}, Rational(-1, 3)) == Rational(1));
    CHECK_THROWS_AS(monochromatic_edge_count(k3, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(monochromatic_edge_count(k3, {1, 1, 0}), std::invalid_argument);
}

TEST_CASE("partition function on knowns") {
    Graph k2 = complete(2);
    double z = partition_function(k2, {2, 1.0, 1.0});
    CHECK(z == doctest::Approx(2 * std::exp(1.0) + 2).epsilon(1e-12));
    CHECK(partition_function(cycle(4), {3, 0.0, -1.0}) == doctest::Approx(81).epsilon(1e-12));
    CHECK(partition_function(k2, {1, 0.7, 1.0}) == doctest::Approx(std::exp(0.7)).epsilon(1e-12));
    CHECK(partition_function(Graph(0, {}), {4, 1.0, 1.0}) == doctest::Approx(1).epsilon(1e-12));

    // antiferromagnetic coupling: raising beta can only suppress weights
    double prev = partition_function(cycle(4), {3, 0.0, -1.0});
    for (double beta : {0.5, 1.0, 2.0}) {
        double next = partition_function(cycle(4), {3, beta, -1.0});
        CHECK(next < prev);
        prev = next;
    }

    CHECK_THROWS_AS(partition_function(k2, {0, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(partition_function(k2, {2, -1.0, 1.0}), std::invalid_argument);
    double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(partition_function(k2, {2, inf, -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(partition_function(petersen(), {9, 1.0, 1.0}), LimitError);
}

TEST_CASE("configuration probabilities normalize") {
    Graph k3 = complete(3);
    PottsParameters p{3, 0.8, -1.3};
    double total = 0;
    SpinConfiguration s(3);
    for (s[0] = 1; s[0] <= 3; ++s[0])
        for (s[1] = 1; s[1] <= 3; ++s[1])
            for (s[2] = 1; s[2] <= 3; ++s[2]) total += configuration_probability(k3, s, p);
    CHECK(total == doctest::Approx(1).epsilon(1e-12));
    CHECK_THROWS_AS(configuration_probability(k3, {1, 2, 4}, p), std::invalid_argument);
}

TEST_CASE("zero-temperature hard constraint") {
    CHECK(zero_temperature_antiferromagnetic(complete(3), 3) == 6);
    CHECK(zero_temperature_antiferromagnetic(complete(2), 2) == 2);
    CHECK(zero_temperature_antiferromagnetic(complete(3), 2) == 0);
    CHECK(zero_temperature_antiferromagnetic(complete(2), 1) == 0);
    CHECK(zero_temperature_antiferromagnetic(Graph(3, {}), 1) == 1);
    CHECK(zero_temperature_antiferromagnetic(Graph(0, {}), 5) == 1);
    CHECK(zero_temperature_antiferromagnetic(cycle(5), 0) == 0);
    for (const Graph& g : graph_catalog(5)) {
        IntPolynomial p = chromatic_classical(g);
        for (int q : {1, 2, 3}) {
            BigInt direct = zero_temperature_antiferromagnetic(g, q);
            CHECK(direct == count_proper_colorings(g, q));
            CHECK(direct == p(BigInt(q)));
        }
    }
    CHECK_THROWS_AS(zero_temperature_antiferromagnetic(cycle(3), -1), std::invalid_argument);
    CHECK_THROWS_AS(zero_temperature_antiferromagnetic(petersen(), 10), LimitError);
}

TEST_CASE("mayer subgraph sum") {
    Graph k2 = complete(2);
    CHECK(rho(k2, 0b11, {1, 1}) == -1);
    CHECK(rho(k2, 0b11, {1, 2}) == 0);
    Graph k3 = complete(3);
    CHECK(rho(k3, 0b111, {2, 2, 2}) == 2);  // three spanning trees minus the triangle
    CHECK(rho(k3, 0b111, {1, 1, 2}) == 0);  // one monochromatic edge cannot span
    CHECK(rho(k3, 0b011, {2, 2, 7}) == -1);  // colors outside r are ignored
    Graph c4 = cycle(4);
    CHECK(rho(c4, c4.vertex_mask(), {3, 3, 3, 3}) == -3);
    CHECK(rho(c4, 0b0101, {1, 1, 1, 1}) == 0);  // disconnected restriction
    CHECK_THROWS_AS(rho(k3, 0b001, {1, 1, 1}), std::invalid_argument);

    // a constant coloring makes every edge monochromatic, so the sum is the
    // activity numerator
    for (const Graph& g : connected_graph_catalog(4)) {
        SpinConfiguration all_one(static_cast<std::size_t>(g.vertex_count()), 1);
        for (VertexMask r : enumerate_connected_subsets(g))
            CHECK(rho(g, r, all_one) == activity(g, r).numerator);
    }
}

TEST_CASE("subgraph sum agrees with the literal weight product") {
    for (const Graph& g : graph_catalog(4)) {
        const int n = g.vertex_count();
        SpinConfiguration s(static_cast<std::size_t>(n), 1);
        for (VertexMask r = 0; r < (VertexMask{1} << n); ++r) {
            if (std::popcount(r) < 2) continue;
            // every coloring of the whole graph with colors {1, 2, 3}
            std::fill(s.begin(), s.end(), 1);
            for (;;) {
                CHECK(rho(g, r, s) == literal_mayer_sum(g, r, s));
                int i = 0;
                for (; i < n; ++i) {
                    if (s[static_cast<std::size_t>(i)] < 3) {
                        ++s[static_cast<std::size_t>(i)];
                        break;
                    }
                    s[static_cast<std::size_t>(i)] = 1;
                }
                if (i == n) break;
            }
        }
    }
}

TEST_CASE("color sum identity") {
    Graph k3 = complete(3);
    MayerIdentityResult tri = check_mayer_identity(k3, 0b111, 3);
    CHECK(tri.lhs == 6);
    CHECK(tri.rhs == 6);
    CHECK(tri.equal);
    MayerIdentityResult pair = check_mayer_identity(k3, 0b011, 2);
    CHECK(pair.lhs == -2);
    CHECK(pair.rhs == -2);
    CHECK(pair.equal);
    Graph c4 = cycle(4);
    MayerIdentityResult split = check_mayer_identity(c4, 0b0101, 5);
    CHECK(split.lhs == 0);
    CHECK(split.rhs == 0);
    CHECK(split.equal);

    for (const Graph& g : graph_catalog(4)) {
        const int n = g.vertex_count();
        for (VertexMask r = 0; r < (VertexMask{1} << n); ++r) {
            if (std::popcount(r) < 2) continue;
            for (int q : {2, 3}) CHECK(check_mayer_identity(g, r, q).equal);
        }
    }

    CHECK_THROWS_AS(check_mayer_identity(k3, 0b111, 0), std::invalid_argument);
    CHECK_THROWS_AS(check_mayer_identity(k3, 0b001, 3), std::invalid_argument);
    CHECK_THROWS_AS(check_mayer_identity(k3, 0b111, 1000), LimitError);
}
