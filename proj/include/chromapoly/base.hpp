#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chromapoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Vertex and edge subsets are bit masks. Bit i of a VertexMask is vertex i;
// bit i of an EdgeMask is the edge with rank i in the graph's edge order.
using VertexMask = std::uint64_t;
using EdgeMask = std::uint64_t;

// Hard representation caps (mask width). The configurable enumeration limits
// below are always at least this strict in practice.
inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxEdges = 64;

// Malformed input files or graph descriptions.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or coloring budget was exceeded. Every algorithm here is
// exponential; we fail loudly instead of truncating.
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

struct NotConnectedError : std::runtime_error {
    explicit NotConnectedError(const std::string& what) : std::runtime_error(what) {}
};

// A map claimed to be a partition scheme failed validation.
struct SchemeInvalidError : std::runtime_error {
    explicit SchemeInvalidError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration limits. `max_vertices` gates vertex-subset enumerations,
// `max_edges` gates edge-subset enumerations (2^m loops), and
// `coloring_budget` gates q^n configuration sweeps.
struct EnumLimits {
    int max_vertices = 20;
    int max_edges = 30;
    double coloring_budget = 1e8;

    // Defaults, with environment overrides:
    //   CHROMAPOLY_ENUM_LIMIT       max_vertices
    //   CHROMAPOLY_EDGE_LIMIT       max_edges
    //   CHROMAPOLY_COLORING_BUDGET  coloring_budget
    static EnumLimits defaults();
};

}  // namespace chromapoly
