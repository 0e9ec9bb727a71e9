#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "gthick/geometry.hpp"
#include "gthick/graph.hpp"

namespace gthick {

// A straight-line drawing together with an edge coloring into `layers`
// planar layers. gamma must be total on the graph's vertices with pairwise
// distinct points, chi total on its edges with colors in [1..layers].
struct LayeredDrawing {
    Graph graph;
    std::map<VertexId, Point> gamma;
    std::map<Edge, int> chi;
    int layers = 1;
};

// Every monochromatic proper crossing, ordered lexicographically by the two
// edge ids (and with the lexicographically smaller edge first in each pair).
struct CrossingReport {
    std::vector<std::tuple<Edge, Edge, int>> crossings;
    bool empty() const { return crossings.empty(); }
};

// Structural invariant check (totality, distinctness, color range). Throws
// ParameterOutOfRangeError on violation.
void check_drawing_invariants(const LayeredDrawing& d);

// Empty report iff d is a geometric layered drawing. Throws
// DegenerateGeometryError if an edge passes through a non-endpoint vertex or
// two same-colored edges overlap collinearly.
CrossingReport validate(const LayeredDrawing& d);

bool drawing_in_general_position(const LayeredDrawing& d);

// Half the minimum distance from gamma[v] to any other vertex and to any
// segment not incident to v, squared. Positive for valid drawings.
Rational clearance_radius_sq(const LayeredDrawing& d, VertexId v);

// Moves vertices by less than their clearance radius until no three are
// collinear; the output still validates. Deterministic given the seed;
// returns the input unchanged when it is already in general position.
// Requires validate(d) empty.
LayeredDrawing perturb_to_general_position(const LayeredDrawing& d,
                                           uint64_t seed);

// Minimum number of layers admitting a valid coloring for the fixed
// positions, with a witness coloring; computed by exact backtracking on the
// segment-crossing conflict graph. Throws TooLargeError beyond the edge
// budget and DegenerateGeometryError on degenerate input.
std::pair<int, std::map<Edge, int>> min_layers_fixed_drawing(
    const Graph& g, const std::map<VertexId, Point>& gamma,
    size_t edge_budget = 64);

// Decision variant: a coloring with at most `layers` colors, if one exists.
std::optional<std::map<Edge, int>> color_fixed_drawing(
    const Graph& g, const std::map<VertexId, Point>& gamma, int layers,
    size_t edge_budget = 64);

// ceil(k/2): search ceiling for the layer count of a graph whose vertex
// cover has size k.
int gt_upper_bound_from_vc(int k);

}  // namespace gthick
