#pragma once

#include <vector>

#include "chromapoly/graph.hpp"

namespace chromapoly {

// One color per vertex, colors drawn from {1, ..., q}.
using SpinConfiguration = std::vector<int>;

struct PottsParameters {
    int q = 2;        // number of states, >= 1
    double beta = 0;  // inverse temperature, finite and >= 0
    double J = 1;     // coupling: J > 0 ferromagnetic, J < 0 antiferromagnetic
};

// Edges whose endpoints carry the same color. Throws std::invalid_argument
// unless s assigns every vertex a color >= 1.
int monochromatic_edge_count(const Graph& g, const SpinConfiguration& s);

// H = -J * monochromatic_edge_count. The double overload is exact whenever J
// is; the Rational overload is exact always.
double hamiltonian(const Graph& g, const SpinConfiguration& s, double J);
Rational hamiltonian(const Graph& g, const SpinConfiguration& s, const Rational& J);

// Z = sum of exp(-beta H) over all q^{#vertices} configurations, by direct
// enumeration. Requires finite beta >= 0, q >= 1, and q^{#vertices} within
// the coloring budget.
double partition_function(const Graph& g, const PottsParameters& p,
                          const EnumLimits& limits = EnumLimits::defaults());

// exp(-beta H(s)) / Z. Validates the colors of s against p.q.
double configuration_probability(const Graph& g, const SpinConfiguration& s,
                                 const PottsParameters& p,
                                 const EnumLimits& limits = EnumLimits::defaults());

// The beta -> +infinity limit at J < 0, taken as a hard constraint: a
// configuration counts iff no edge is monochromatic (a 0 * infinity edge term
// means a weight of zero, never NaN). Plain sweep over all q^{#vertices}
// configurations; equals count_proper_colorings by construction, not by
// shared code.
BigInt zero_temperature_antiferromagnetic(const Graph& g, int q,
                                          const EnumLimits& limits = EnumLimits::defaults());

// Signed subgraph sum of the Mayer expansion: over connected spanning
// subgraphs of g|_r whose edges are all monochromatic under s, of
// (-1)^{#edges}. Only the entries of s at vertices of r are read. Zero when
// g|_r is disconnected. Requires |r| >= 2.
BigInt rho(const Graph& g, VertexMask r, const SpinConfiguration& s,
           const EnumLimits& limits = EnumLimits::defaults());

struct MayerIdentityResult {
    BigInt lhs;  // rho summed over all q^{|r|} colorings of r
    BigInt rhs;  // q times the activity numerator, or 0 for a disconnected restriction
    bool equal = false;
};

// Checks the color-sum identity behind the polymer activities. Requires
// |r| >= 2, q >= 1, and q^{|r|} within the coloring budget.
MayerIdentityResult check_mayer_identity(const Graph& g, VertexMask r, int q,
                                         const EnumLimits& limits = EnumLimits::defaults());

}  // namespace chromapoly
