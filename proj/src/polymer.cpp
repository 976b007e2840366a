#include "chromapoly/polymer.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "chromapoly/enumerate.hpp"

namespace chromapoly {

namespace {

int polymer_size(const Graph& g, VertexMask r) {
    const int size = std::popcount(r);
    if (size < 2) throw std::invalid_argument("a polymer needs at least two vertices");
    if (!g.is_connected_within(r)) throw NotConnectedError("a polymer must induce a connected graph");
    return size;
}

}  // namespace

Activity activity(const Graph& g, VertexMask r, const EnumLimits& limits) {
    const int size = polymer_size(g, r);
    BigInt a = 0;
    for (EdgeMask sub : connected_spanning_subgraphs_within(g, r, limits))
        a += std::popcount(sub) % 2 == 0 ? 1 : -1;
    return Activity{std::move(a), size - 1};
}

Activity activity_via_scheme(const Graph& g, VertexMask r, const Scheme& m,
                             const EnumLimits& limits) {
    const int size = polymer_size(g, r);
    if (!m.trusted()) {
        SchemeValidation v = validate_scheme(induced_subgraph(g, r), m, limits);
        if (!v.valid)
            throw SchemeInvalidError("scheme \"" + m.name() + "\" fails on a restriction: " + v.reason);
    }
    BigInt closed = 0;
    for (EdgeMask t : spanning_trees_within(g, r, limits))
        if (m.map(g, r, t) == t) ++closed;
    if (size % 2 == 0) closed = -closed;  // (-1)^{|R|-1}
    return Activity{std::move(closed), size - 1};
}

XiPolynomial::XiPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty() || coeffs_.front() != 1)
        throw std::invalid_argument("constant term must be 1");
}

const BigInt& XiPolynomial::coeff(int power) const {
    static const BigInt zero = 0;
    if (power < 0 || power > max_power()) return zero;
    return coeffs_[static_cast<std::size_t>(power)];
}

Rational XiPolynomial::operator()(const Rational& q) const {
    if (q == 0) throw std::invalid_argument("cannot evaluate at q = 0");
    const Rational inv = Rational(1) / q;
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inv + Rational(*it);
    return acc;
}

std::string XiPolynomial::to_text() const {
    std::ostringstream out;
    out << coeffs_.front();
    for (int k = 1; k <= max_power(); ++k) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        out << (c < 0 ? " - " : " + ") << boost::multiprecision::abs(c) << "/q";
        if (k > 1) out << "^" << k;
    }
    return out.str();
}

XiPolynomial xi(const Graph& g, const EnumLimits& limits) {
    const int n = g.vertex_count();
    if (n == 0) return XiPolynomial();
    // One activity per polymer, grouped by lowest vertex for the
    // disjoint-collection recursion below.
    auto subsets = enumerate_connected_subsets(g, limits);  // enforces the vertex limit
    std::vector<std::vector<std::pair<VertexMask, BigInt>>> by_low(static_cast<std::size_t>(n));
    for (VertexMask r : subsets) {
        Activity a = activity(g, r, limits);
        if (a.numerator != 0)
            by_low[static_cast<std::size_t>(std::countr_zero(r))].emplace_back(r, std::move(a.numerator));
    }
    // f[s][k]: coefficient of (1/q)^k summed over collections of disjoint
    // polymers inside the vertex set s. Branching on the lowest vertex of s
    // counts each unordered collection exactly once.
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<std::vector<BigInt>> f(full + 1);
    f[0] = {BigInt(1)};
    for (std::size_t s = 1; s <= full; ++s) {
        const int low = std::countr_zero(s);
        f[s] = f[s & (s - 1)];  // the lowest vertex joins no polymer
        for (const auto& [r, a] : by_low[static_cast<std::size_t>(low)]) {
            if ((r & s) != r) continue;
            const auto& rest = f[s & ~r];
            const std::size_t shift = static_cast<std::size_t>(std::popcount(r)) - 1;
            if (f[s].size() < rest.size() + shift) f[s].resize(rest.size() + shift);
            for (std::size_t k = 0; k < rest.size(); ++k)
                if (rest[k] != 0) f[s][k + shift] += a * rest[k];
        }
    }
    return XiPolynomial(std::move(f[full]));
}

IntPolynomial chromatic_via_polymer(const Graph& g, const EnumLimits& limits) {
    const int n = g.vertex_count();
    XiPolynomial x = xi(g, limits);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= x.max_power(); ++k) coeffs[static_cast<std::size_t>(n - k)] = x.coeff(k);
    return IntPolynomial(std::move(coeffs));
}

std::vector<ActivityEntry> activity_table(const Graph& g, const EnumLimits& limits) {
    std::vector<ActivityEntry> out;
    for (VertexMask r : enumerate_connected_subsets(g, limits))
        out.push_back(ActivityEntry{r, activity(g, r, limits)});
    return out;
}

}  // namespace chromapoly
