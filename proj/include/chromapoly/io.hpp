#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chromapoly/graph.hpp"
#include "chromapoly/polymer.hpp"
#include "chromapoly/polynomial.hpp"
#include "chromapoly/potts.hpp"

namespace chromapoly {

// A graph plus the original vertex names, indexed by dense vertex id.
struct LoadedGraph {
    Graph graph;
    std::vector<std::string> labels;
};

enum class GraphFormat { edge_list, dimacs };

// "edgelist" or "dimacs"; throws std::invalid_argument otherwise.
GraphFormat graph_format_from_name(const std::string& name);

// One "u v" pair per line; '#' starts a comment; blank lines are skipped.
// Labels are arbitrary tokens. Vertex ids follow numeric order when every
// label is a nonnegative integer and lexicographic order otherwise; edge
// ranks follow input order. Isolated vertices cannot be expressed here.
LoadedGraph parse_edge_list(std::istream& in);

// DIMACS: "c" comments, one "p edge <n> <m>" line, then m lines "e <u> <v>"
// with 1-based endpoints. The declared edge count must match. Labels are
// "1".."n"; edge ranks follow the e-line order.
LoadedGraph parse_dimacs(std::istream& in);

LoadedGraph load_graph(const std::string& path, GraphFormat format);

// Re-ranks the edges of lg to the order listed in `in` (same line format as
// an edge list, labels resolved through lg.labels). The list must mention
// every edge exactly once.
LoadedGraph reorder_edges(const LoadedGraph& lg, std::istream& in);

// "K5", "C4", "P3", ...: complete / cycle / path graphs for quick runs.
// Cycles need >= 3 vertices. Labels are "0".."n-1".
LoadedGraph demo_graph(const std::string& name);

// "[0, 2, -3, 1]": coefficients ascending, every term explicit.
std::string coefficient_list_text(const IntPolynomial& p);

// {"degree": 3, "coefficients": ["0", "2", "-3", "1"]} -- decimal strings,
// ascending. The zero polynomial has degree -1 and no coefficients.
std::string polynomial_to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const std::string& text);  // ParseError on bad input

// {"inv_q_coefficients": ["1", "-3", "2"]}
std::string xi_to_json(const XiPolynomial& x);
XiPolynomial xi_from_json(const std::string& text);

// {"q": 2, "beta": 1.0, "J": 1.0, "Z": 7.43...}
std::string potts_to_json(const PottsParameters& p, double z);

}  // namespace chromapoly
