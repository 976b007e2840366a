#pragma once

#include <vector>

#include "chromapoly/graph.hpp"
#include "chromapoly/polynomial.hpp"
#include "chromapoly/schemes.hpp"

namespace chromapoly {

// N_k = number of scheme-closed forests with exactly k edges, k = 0..|V|-1.
// Scheme-independent (that is what the cross-order tests exercise).
using ForestLevelCounts = std::vector<BigInt>;

// Alternating sum over all edge subsets: sum of (-1)^|E| q^k(E).
IntPolynomial chromatic_classical(const Graph& g, const EnumLimits& limits = EnumLimits::defaults());

// q^|V| times the signed count of broken-circuit-free forests per size.
IntPolynomial chromatic_whitney(const Graph& g, const EnumLimits& limits = EnumLimits::defaults());

// q^|V| times the signed count of scheme-closed forests per size, computed
// by packing closed trees over vertex subsets. Untrusted schemes are
// validated on every restriction they are applied to (SchemeInvalidError).
IntPolynomial chromatic_scheme(const Graph& g, const Scheme& m,
                               const EnumLimits& limits = EnumLimits::defaults());

// Every forest whose nontrivial trees are all fixed by the scheme, in
// ascending edge-mask order. Exponential; meant for small graphs.
std::vector<Forest> enumerate_scheme_forests(const Graph& g, const Scheme& m,
                                             const EnumLimits& limits = EnumLimits::defaults());

ForestLevelCounts forest_level_counts(const Graph& g, const Scheme& m,
                                      const EnumLimits& limits = EnumLimits::defaults());

// Exhaustive proper-coloring count with colors 1..q. The budget gate is on
// q^|V| (the a-priori configuration count), not on the pruned search size.
BigInt count_proper_colorings(const Graph& g, int q,
                              const EnumLimits& limits = EnumLimits::defaults());

// P(G) = P(G-e) - P(G/e) on a non-bridge edge, with forests and cliques as
// closed forms. Memoized across calls on canonical forms (hash bucket plus
// exact isomorphism check, so collisions cannot corrupt results).
IntPolynomial deletion_contraction(const Graph& g);

// Lagrange interpolation through count_proper_colorings(g, 0..|V|). An
// oracle that shares no code with the expansion-based routes.
IntPolynomial chromatic_brute(const Graph& g, const EnumLimits& limits = EnumLimits::defaults());

}  // namespace chromapoly
