#pragma once

#include <map>
#include <set>
#include <vector>

#include "gthick/geometry.hpp"
#include "gthick/graph.hpp"

namespace gthick {

// Open half-plane bounded by the line through a and b, on the side away
// from the witness point. The three points must not be collinear.
struct HalfPlane {
    Point a;
    Point b;
    Point witness;  // excluded side

    bool contains(const Point& p) const;
};

// The double-wedge at `apex` spanned by the two directions and their
// negations: the pair of opposite open cones containing d1+d2 and its
// antipode. Directions must not be parallel.
struct TieShape {
    Point apex;
    Direction d1;
    Direction d2;
};

// Throws ApexQueryError when p equals the apex.
bool tie_contains(const TieShape& t, const Point& p);

// Open arc of directions, counterclockwise from lo to hi, angular extent
// strictly between 0 and 2*pi.
struct DirectionInterval {
    Direction lo;
    Direction hi;
};

// An antipode-symmetric set of open direction intervals at an apex,
// canonically stored as disjoint arcs sorted by start angle. Represents
// intersections of tie-shapes: either the full punctured plane, or a
// (possibly empty) union of arcs.
class AngularDomain {
public:
    static AngularDomain full(const Point& apex);
    static AngularDomain empty_at(const Point& apex);
    static AngularDomain of_tie(const TieShape& t);

    bool is_full() const { return full_; }
    bool is_empty() const { return !full_ && arcs_.empty(); }
    const Point& apex() const { return apex_; }
    const std::vector<DirectionInterval>& arcs() const { return arcs_; }

    bool contains_direction(const Direction& d) const;
    bool contains_point(const Point& p) const;

    AngularDomain intersect(const AngularDomain& other) const;

    // An exact rational direction strictly inside the first arc. Throws
    // ParameterOutOfRangeError when the domain is empty.
    Direction interior_direction() const;

    bool antipode_symmetric() const;

private:
    explicit AngularDomain(const Point& apex) : apex_(apex) {}
    void canonicalize();

    Point apex_;
    bool full_ = false;
    std::vector<DirectionInterval> arcs_;
};

// A rational direction strictly inside the open CCW arc (lo, hi).
Direction arc_interior_direction(const Direction& lo, const Direction& hi);

// True iff d lies strictly inside the open CCW arc (lo, hi).
bool arc_contains(const DirectionInterval& arc, const Direction& d);

// The cell of v with respect to the drawn set S: complement of the union of
// all half-planes H(v, a, b) over distinct a, b in S. The cell is closed and
// contains v's own position.
struct CellDescriptor {
    VertexId owner;
    std::vector<HalfPlane> constraints;
};

CellDescriptor cell_of(const std::map<VertexId, Point>& gamma,
                       const std::set<VertexId>& S, VertexId v);

bool cell_contains(const CellDescriptor& cell, const Point& p);

}  // namespace gthick
