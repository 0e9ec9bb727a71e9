#pragma once

#include <optional>
#include <set>

#include "gthick/config.hpp"
#include "gthick/drawing.hpp"

namespace gthick {

// An extension instance: the target graph plus a predrawn subgraph whose
// drawing must extend to all of `graph` with `predrawn.layers` layers.
struct GteInstance {
    Graph graph;
    LayeredDrawing predrawn;

    int layers() const { return predrawn.layers; }
    std::vector<Edge> missing_edges() const;
    std::vector<VertexId> missing_vertices() const;
};

// Structural check: H is a subgraph of G and (Gamma_H, chi_H) validates.
void check_instance(const GteInstance& inst);

// Colors c such that drawing e with color c crosses no c-colored predrawn
// edge. Requires both endpoints drawn. Throws DegenerateGeometryError when
// e overlaps a predrawn edge collinearly or passes through a vertex.
std::set<int> feasible_colors(const GteInstance& inst, const Edge& e);

// The branching solver for instances with only edges missing: edges with
// fewer than k feasible colors are branched over exhaustively, the rest are
// inserted greedily. Complete. Throws VerticesMissingError when a vertex of
// G is undrawn.
std::optional<std::map<Edge, int>> solve_gte_edges(const GteInstance& inst);

// Certifying oracle: enumerate all layers^k colorings of the missing edges
// and validate each. Throws OracleBudgetExceededError beyond the budget.
std::optional<std::map<Edge, int>> brute_force_gte_edges(
    const GteInstance& inst, uint64_t budget = 1000000);

enum class Verdict { Sat, Unsat, Unknown };

struct DecisionResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<LayeredDrawing> witness;
};

// Small-instance decision for plain geometric thickness: placement search
// (random rational placements, then perturbed convex positions) certifies
// SAT; planarity decides layers == 1 exactly; an external solver, when
// configured, refutes via the specialized formula. Otherwise Unknown.
DecisionResult decide_gt_small(const Graph& g, int layers,
                               const RunConfig& config, uint64_t seed);

// Exact planarity (the single-layer case of the decision driver).
bool graph_is_planar(const Graph& g);

// A straight-line crossing-free drawing of a planar graph on an integer
// grid; nothing when g is not planar.
std::optional<std::map<VertexId, Point>> planar_straight_line_positions(
    const Graph& g);

}  // namespace gthick
