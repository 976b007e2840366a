#pragma once

#include <string>
#include <vector>

#include "chromapoly/graph.hpp"
#include "chromapoly/polynomial.hpp"
#include "chromapoly/schemes.hpp"

namespace chromapoly {

// The weight z(R, q) = a_R / q^{|R|-1} carried by a polymer: a connected
// vertex subset R with at least two vertices.
struct Activity {
    BigInt numerator;        // a_R: signed count over connected spanning subgraphs
    int inv_q_exponent = 0;  // |R| - 1

    friend bool operator==(const Activity&, const Activity&) = default;
};

// a_R = sum of (-1)^{#edges} over the connected spanning subgraphs of g|_r.
// Requires |r| >= 2 and g|_r connected.
Activity activity(const Graph& g, VertexMask r, const EnumLimits& limits = EnumLimits::defaults());

// a_R = (-1)^{|R|-1} * (number of spanning trees of g|_r that m fixes).
// Agrees with activity() for every partition scheme. Untrusted schemes get
// the full partition-property check on the restriction first.
Activity activity_via_scheme(const Graph& g, VertexMask r, const Scheme& m,
                             const EnumLimits& limits = EnumLimits::defaults());

// A polynomial in 1/q with integer coefficients and constant term 1.
class XiPolynomial {
  public:
    XiPolynomial() : coeffs_{BigInt(1)} {}
    // Coefficients by ascending power of 1/q. Trailing zeros are dropped;
    // anything but a leading 1 throws std::invalid_argument.
    explicit XiPolynomial(std::vector<BigInt> coeffs);

    int max_power() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(int power) const;  // zero outside the stored range
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    // Numeric value at q != 0 (std::invalid_argument otherwise).
    Rational operator()(const Rational& q) const;

    // e.g. "1 - 3/q + 2/q^2"
    std::string to_text() const;

    friend bool operator==(const XiPolynomial&, const XiPolynomial&) = default;

  private:
    std::vector<BigInt> coeffs_;
};

// The hard-core gas sum: 1 plus, for every nonempty collection of pairwise
// vertex-disjoint polymers, the product of the polymer activities. Defined
// for any graph; the edgeless graph gives exactly 1.
XiPolynomial xi(const Graph& g, const EnumLimits& limits = EnumLimits::defaults());

// q^{#vertices} * xi(g), expanded. Equals the chromatic polynomial.
IntPolynomial chromatic_via_polymer(const Graph& g, const EnumLimits& limits = EnumLimits::defaults());

struct ActivityEntry {
    VertexMask subset = 0;
    Activity value;
};

// Activities of all polymers of g, ascending by subset mask.
std::vector<ActivityEntry> activity_table(const Graph& g,
                                          const EnumLimits& limits = EnumLimits::defaults());

}  // namespace chromapoly
