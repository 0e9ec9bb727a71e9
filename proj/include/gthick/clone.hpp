#pragma once

#include "gthick/angular.hpp"
#include "gthick/drawing.hpp"

namespace gthick {

// Intersection of the tie-shapes T(v, a, b) over all unordered neighbor
// pairs a != b with chi(va) == chi(vb), as an angular domain at gamma[v].
// No such pair yields the full punctured plane.
AngularDomain admissible_region(const LayeredDrawing& d, VertexId v);

// True iff the admissible region of v is nonempty, i.e. a clone of v can be
// placed inside the cell of v with respect to S.
bool can_clone_in_cell(const LayeredDrawing& d, const std::set<VertexId>& S,
                       VertexId v);

// Adds a clone w of v (same neighborhood, same edge colors), placed inside
// cell(v, S) intersected with the admissible region, close enough to v that
// the result validates and is in general position. Throws NotCloneableError
// when the admissible region is empty.
LayeredDrawing insert_clone(const LayeredDrawing& d,
                            const std::set<VertexId>& S, VertexId v,
                            VertexId clone_id);

}  // namespace gthick
