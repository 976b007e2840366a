#include <stdexcept>
#include <vector>

#include "chromapoly/chromatic.hpp"
#include "chromapoly/enumerate.hpp"
#include "chromapoly/polymer.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace chromapoly;
using namespace chromapoly::testutil;

namespace {

XiPolynomial xp(std::vector<BigInt> ascending) { return XiPolynomial(std::move(ascending)); }

IntPolynomial poly(std::vector<BigInt> ascending) { return IntPolynomial(std::move(ascending)); }

}  // namespace

TEST_CASE("activities on knowns") {
    Graph k2 = complete(2);
    Activity edge = activity(k2, k2.vertex_mask());
    CHECK(edge.numerator == -1);  // a single connected spanning subgraph, one edge
    CHECK(edge.inv_q_exponent == 1);

    Graph k3 = complete(3);
    Activity tri = activity(k3, k3.vertex_mask());
    CHECK(tri.numerator == 2);  // three trees minus the full triangle
    CHECK(tri.inv_q_exponent == 2);
    Activity pair = activity(k3, 0b011);
    CHECK(pair.numerator == -1);
    CHECK(pair.inv_q_exponent == 1);

    Graph c4 = cycle(4);
    Activity quad = activity(c4, c4.vertex_mask());
    CHECK(quad.numerator == -3);  // four trees, one full cycle
    CHECK(quad.inv_q_exponent == 3);

    Graph p3 = path(3);
    Activity forced = activity(p3, p3.vertex_mask());
    CHECK(forced.numerator == 1);  // both edges are forced
    CHECK(forced.inv_q_exponent == 2);

    CHECK_THROWS_AS(activity(k3, 0b001), std::invalid_argument);  // one vertex is no polymer
    CHECK_THROWS_AS(activity(k3, 0), std::invalid_argument);
    CHECK_THROWS_AS(activity(c4, 0b0101), NotConnectedError);  // opposite cycle vertices
}

TEST_CASE("scheme route matches direct enumeration") {
    Scheme minimal = Scheme::minimal_tree();
    Graph k3 = complete(3);
    Activity tri = activity_via_scheme(k3, k3.vertex_mask(), minimal);
    CHECK(tri.numerator == 2);  // two fixed trees, even sign
    CHECK(tri.inv_q_exponent == 2);
    CHECK(activity_via_scheme(k3, 0b011, minimal).numerator == -1);

    Graph c4 = cycle(4);
    Activity quad = activity_via_scheme(c4, c4.vertex_mask(), minimal);
    CHECK(quad.numerator == -3);  // trees dropping the top cycle edge stay open

    Scheme penrose = Scheme::penrose();
    for (const Graph& g : connected_graph_catalog(5))
        for (VertexMask r : enumerate_connected_subsets(g)) {
            Activity direct = activity(g, r);
            CHECK(activity_via_scheme(g, r, minimal) == direct);
            CHECK(activity_via_scheme(g, r, penrose) == direct);
        }

    // The identity map is a valid scheme on circuit-free restrictions only.
    Scheme identity = Scheme::identity();
    Graph p3 = path(3);
    CHECK(activity_via_scheme(p3, p3.vertex_mask(), identity) == activity(p3, p3.vertex_mask()));
    CHECK_THROWS_AS(activity_via_scheme(k3, k3.vertex_mask(), identity), SchemeInvalidError);
}

TEST_CASE("inverse-q polynomial basics") {
    XiPolynomial one;
    CHECK(one.max_power() == 0);
    CHECK(one.coeff(0) == 1);
    CHECK(one.to_text() == "1");
    CHECK(xp({1, 0, 0}) == one);  // trailing zeros trim away

    XiPolynomial x = xp({1, -3, 2});
    CHECK(x.max_power() == 2);
    CHECK(x.coeff(2) == 2);
    CHECK(x.coeff(5) == 0);
    CHECK(x.coeff(-1) == 0);
    CHECK(x(Rational(2)) == 0);  // 1 - 3/2 + 2/4
    CHECK(x(Rational(3)) == Rational(2, 9));
    CHECK(x(Rational(-1, 2)) == 15);
    CHECK(x.to_text() == "1 - 3/q + 2/q^2");
    CHECK(xp({1, -2, 1}).to_text() == "1 - 2/q + 1/q^2");
    CHECK(xp({1, 0, 4}).to_text() == "1 + 4/q^2");

    CHECK_THROWS_AS(x(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(xp({}), std::invalid_argument);        // no constant term
    CHECK_THROWS_AS(xp({2, 1}), std::invalid_argument);    // constant term must be 1
    CHECK_THROWS_AS(xp({0, 1}), std::invalid_argument);
}

TEST_CASE("hard-core sum on knowns") {
    CHECK(xi(complete(2)) == xp({1, -1}));
    CHECK(xi(complete(3)) == xp({1, -3, 2}));
    CHECK(xi(cycle(4)) == xp({1, -4, 6, -3}));  // 4 edges, 4 paths, 2 disjoint pairs, the cycle
    CHECK(xi(disjoint_union(complete(2), complete(2))) == xp({1, -2, 1}));
    CHECK(xi(Graph(3, {})) == XiPolynomial());  // no polymers at all
    CHECK(xi(Graph(0, {})) == XiPolynomial());
    CHECK_THROWS_AS(xi(path(21)), LimitError);
    Graph k9 = complete(9);  // 36 edges: over the subgraph-enumeration limit
    CHECK_THROWS_AS(activity(k9, k9.vertex_mask()), LimitError);
}

TEST_CASE("coefficients are signed closed-forest counts") {
    Scheme minimal = Scheme::minimal_tree();
    for (const Graph& g : graph_catalog(5)) {
        const int n = g.vertex_count();
        XiPolynomial x = xi(g);
        CHECK(x.max_power() <= n - component_count(g, g.edge_mask()));
        ForestLevelCounts levels = forest_level_counts(g, minimal);
        for (int k = 0; k < n; ++k)
            CHECK(x.coeff(k) == (k % 2 == 0 ? levels[static_cast<std::size_t>(k)]
                                            : -levels[static_cast<std::size_t>(k)]));
    }
}

TEST_CASE("chromatic reconstruction") {
    CHECK(chromatic_via_polymer(complete(3)) == poly({0, 2, -3, 1}));
    CHECK(chromatic_via_polymer(cycle(4)) == poly({0, -3, 6, -4, 1}));
    CHECK(chromatic_via_polymer(Graph(3, {})) == IntPolynomial::monomial(3));
    CHECK(chromatic_via_polymer(Graph(0, {})) == poly({1}));
    for (const Graph& g : graph_catalog(5))
        CHECK(chromatic_via_polymer(g) == chromatic_classical(g));
    Graph pet = petersen();
    IntPolynomial p = chromatic_classical(pet);
    CHECK(chromatic_via_polymer(pet) == p);

    // q^n * Xi(q) agrees with the polynomial numerically as well.
    XiPolynomial x = xi(pet);
    Rational q(7, 3);
    Rational qn = 1;
    for (int i = 0; i < pet.vertex_count(); ++i) qn *= q;
    CHECK(qn * x(q) == p(q));
}

TEST_CASE("activity table") {
    Graph k3 = complete(3);
    auto table = activity_table(k3);
    REQUIRE(table.size() == 4);  // three edges plus the triangle
    CHECK(table[0].subset == 0b011);
    CHECK(table[1].subset == 0b101);
    CHECK(table[2].subset == 0b110);
    CHECK(table[3].subset == 0b111);
    for (int i = 0; i < 3; ++i) {
        CHECK(table[static_cast<std::size_t>(i)].value.numerator == -1);
        CHECK(table[static_cast<std::size_t>(i)].value.inv_q_exponent == 1);
    }
    CHECK(table[3].value.numerator == 2);
    CHECK(table[3].value.inv_q_exponent == 2);
    CHECK(activity_table(cycle(4)).size() == 9);
    CHECK(activity_table(Graph(2, {})).empty());
}
