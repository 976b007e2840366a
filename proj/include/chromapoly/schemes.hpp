#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chromapoly/graph.hpp"

namespace chromapoly {

// Per-edge weights, indexed by the edge rank of the graph in use.
using WeightAssignment = std::vector<Rational>;

// A partition scheme: for each spanning tree tau of a connected restriction
// g|_r, a connected spanning supergraph m(tau) of g|_r such that the
// intervals [tau, m(tau)] partition the connected spanning subgraphs of g|_r.
// Maps work in parent coordinates: `r` selects the restriction and edge masks
// are over g's edge ranks. (Edge ranks and vertex labels restrict without
// renumbering, so this is the same map the restricted graph would produce.)
class Scheme {
  public:
    using MapFn = std::function<EdgeMask(const Graph& g, VertexMask r, EdgeMask tree_edges)>;

    // Adds every non-tree edge that outranks all edges on its tree path.
    static Scheme minimal_tree();
    // Depth-rule map (see penrose_map); self-validates on all connected
    // graphs up to 6 vertices once per process and throws SchemeInvalidError
    // if no orientation of the depth rule passes.
    static Scheme penrose();
    // m(tau) = tau. Deliberately NOT a partition scheme on any graph with a
    // circuit; kept for exercising the validator and the failure paths.
    static Scheme identity();
    static Scheme custom(std::string name, MapFn fn);
    // "minimal-tree" | "penrose" | "identity"; throws std::invalid_argument
    // otherwise.
    static Scheme by_name(const std::string& name);

    const std::string& name() const { return name_; }
    // Built-in schemes skip per-use validation; custom ones must be run
    // through validate_scheme by whoever consumes them.
    bool trusted() const { return trusted_; }
    EdgeMask map(const Graph& g, VertexMask r, EdgeMask tree_edges) const {
        return fn_(g, r, tree_edges);
    }

  private:
    Scheme(std::string name, MapFn fn, bool trusted);

    std::string name_;
    MapFn fn_;
    bool trusted_;
};

// The minimal-tree map itself: tree_edges plus every edge {x,y} within r
// whose rank beats every edge on the tree path from x to y. Throws
// std::invalid_argument if tree_edges is not a spanning tree of g|_r.
EdgeMask minimal_tree_map(const Graph& g, VertexMask r, EdgeMask tree_edges);

// The depth-rule map: root the tree at the smallest vertex of r, compute
// depths, then add every non-tree edge within r joining equal depths, plus
// those joining adjacent depths that pass a parent/vertex-order comparison
// (orientation fixed once by self-validation). Same preconditions as above.
EdgeMask penrose_map(const Graph& g, VertexMask r, EdgeMask tree_edges);

struct SchemeValidation {
    bool valid = true;
    std::string reason;    // empty when valid
    EdgeMask witness = 0;  // offending subgraph or map image
    int witness_cover = 0; // how many intervals hit the witness (when relevant)
    int tree_count = 0;
    int subgraph_count = 0;
};

// Exhaustively checks the partition property on connected g: every connected
// spanning subgraph must lie in exactly one interval [tau, m(tau)]. A single
// vertex is vacuously valid. Throws NotConnectedError / LimitError.
SchemeValidation validate_scheme(const Graph& g, const Scheme& m,
                                 const EnumLimits& limits = EnumLimits::defaults());

// True iff m maps t to itself, computed on the restriction to t's vertices.
bool is_scheme_closed(const Graph& g, const Tree& t, const Scheme& m);

struct PenroseIdentityResult {
    Rational lhs;  // sum over connected spanning subgraphs of the edge-weight products
    Rational rhs;  // tree sum with the (1 + w_e) factors over m(tau) \ tau
    bool equal = false;
};

// Evaluates both sides of the tree-sum identity on connected g (>= 2
// vertices) with exact rational weights, one per edge. Untrusted schemes are
// validated first; SchemeInvalidError carries the validator's reason.
PenroseIdentityResult check_penrose_identity(const Graph& g, const WeightAssignment& w,
                                             const Scheme& m,
                                             const EnumLimits& limits = EnumLimits::defaults());

struct PenroseIdentityApprox {
    double lhs = 0;
    double rhs = 0;
    bool equal = false;
};

// Floating-point variant for quick numeric sweeps (tolerance is relative for
// large values). Not used by any exact check.
PenroseIdentityApprox check_penrose_identity_approx(const Graph& g, const std::vector<double>& w,
                                                    const Scheme& m, double tolerance = 1e-9,
                                                    const EnumLimits& limits = EnumLimits::defaults());

}  // namespace chromapoly
