#include "chromapoly/potts.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromapoly/polymer.hpp"

namespace chromapoly {

namespace {

void check_spins(const Graph& g, const SpinConfiguration& s, int q = 0) {
    if (static_cast<int>(s.size()) != g.vertex_count())
        throw std::invalid_argument("configuration must assign every vertex a color");
    for (int c : s) {
        if (c < 1) throw std::invalid_argument("colors start at 1");
        if (q > 0 && c > q) throw std::invalid_argument("color exceeds q");
    }
}

void check_parameters(const PottsParameters& p) {
    if (p.q < 1) throw std::invalid_argument("q must be at least 1");
    if (!(p.beta >= 0) || !std::isfinite(p.beta))
        throw std::invalid_argument("beta must be finite and nonnegative");
}

void check_budget(int q, int n, const EnumLimits& limits) {
    if (std::pow(static_cast<double>(q), n) > limits.coloring_budget)
        throw LimitError("q^n = " + std::to_string(q) + "^" + std::to_string(n) +
                         " exceeds the coloring budget (set CHROMAPOLY_COLORING_BUDGET to raise)");
}

// Runs fn over every assignment of colors {1..q} to the given vertex slots.
template <class Fn>
void for_each_coloring(SpinConfiguration& s, const std::vector<int>& slots, int q, Fn&& fn) {
    for (int v : slots) s[static_cast<std::size_t>(v)] = 1;
    for (;;) {
        fn();
        std::size_t i = 0;
        for (; i < slots.size(); ++i) {
            int& c = s[static_cast<std::size_t>(slots[i])];
            if (c < q) {
                ++c;
                break;
            }
            c = 1;
        }
        if (i == slots.size()) return;
    }
}

std::vector<int> mask_vertices(VertexMask r) {
    std::vector<int> out;
    for (VertexMask rest = r; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
    return out;
}

}  // namespace

int monochromatic_edge_count(const Graph& g, const SpinConfiguration& s) {
    check_spins(g, s);
    int count = 0;
    for (const Edge& e : g.edges())
        if (s[static_cast<std::size_t>(e.u)] == s[static_cast<std::size_t>(e.v)]) ++count;
    return count;
}

double hamiltonian(const Graph& g, const SpinConfiguration& s, double J) {
    return -J * monochromatic_edge_count(g, s);
}

Rational hamiltonian(const Graph& g, const SpinConfiguration& s, const Rational& J) {
    return -J * monochromatic_edge_count(g, s);
}

double partition_function(const Graph& g, const PottsParameters& p, const EnumLimits& limits) {
    check_parameters(p);
    const int n = g.vertex_count();
    check_budget(p.q, n, limits);
    std::vector<int> slots(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) slots[static_cast<std::size_t>(v)] = v;
    SpinConfiguration s(static_cast<std::size_t>(n), 1);
    double z = 0;
    for_each_coloring(s, slots, p.q, [&] {
        z += std::exp(p.beta * p.J * monochromatic_edge_count(g, s));
    });
    return z;
}

double configuration_probability(const Graph& g, const SpinConfiguration& s,
                                 const PottsParameters& p, const EnumLimits& limits) {
    check_parameters(p);
    check_spins(g, s, p.q);
    const double weight = std::exp(p.beta * p.J * monochromatic_edge_count(g, s));
    return weight / partition_function(g, p, limits);
}

BigInt zero_temperature_antiferromagnetic(const Graph& g, int q, const EnumLimits& limits) {
    if (q < 0) throw std::invalid_argument("negative color count");
    const int n = g.vertex_count();
    check_budget(q, n, limits);
    if (n == 0) return 1;
    if (q == 0) return 0;
    std::vector<int> slots(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) slots[static_cast<std::size_t>(v)] = v;
    SpinConfiguration s(static_cast<std::size_t>(n), 1);
    long long count = 0;
    for_each_coloring(s, slots, q, [&] {
        if (monochromatic_edge_count(g, s) == 0) ++count;
    });
    return count;
}

BigInt rho(const Graph& g, VertexMask r, const SpinConfiguration& s, const EnumLimits& limits) {
    if (std::popcount(r) < 2) throw std::invalid_argument("rho needs at least two vertices");
    check_spins(g, s);
    if (!g.is_connected_within(r)) return 0;
    EdgeMask mono = 0;
    for (EdgeMask rest = g.edges_within(r); rest != 0; rest &= rest - 1) {
        const int id = std::countr_zero(rest);
        const Edge& e = g.edge(id);
        if (s[static_cast<std::size_t>(e.u)] == s[static_cast<std::size_t>(e.v)])
            mono |= EdgeMask{1} << id;
    }
    if (std::popcount(mono) > limits.max_edges)
        throw LimitError("edge count " + std::to_string(std::popcount(mono)) +
                         " exceeds enumeration limit " + std::to_string(limits.max_edges) +
                         " (set CHROMAPOLY_EDGE_LIMIT to raise)");
    BigInt total = 0;
    for (EdgeMask sub = mono;; sub = (sub - 1) & mono) {
        if (component_count_within(g, r, sub) == 1)
            total += std::popcount(sub) % 2 == 0 ? 1 : -1;
        if (sub == 0) break;
    }
    return total;
}

MayerIdentityResult check_mayer_identity(const Graph& g, VertexMask r, int q,
                                         const EnumLimits& limits) {
    if (std::popcount(r) < 2) throw std::invalid_argument("the subset needs at least two vertices");
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    check_budget(q, std::popcount(r), limits);
    MayerIdentityResult out;
    std::vector<int> slots = mask_vertices(r);
    SpinConfiguration s(static_cast<std::size_t>(g.vertex_count()), 1);
    for_each_coloring(s, slots, q, [&] { out.lhs += rho(g, r, s, limits); });
    out.rhs = g.is_connected_within(r) ? BigInt(q) * activity(g, r, limits).numerator : BigInt(0);
    out.equal = out.lhs == out.rhs;
    return out;
}

}  // namespace chromapoly
