#pragma once

#include <compare>
#include <vector>

#include "gthick/rational.hpp"

namespace gthick {

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

inline Point operator+(const Point& p, const Point& q) {
    return {p.x + q.x, p.y + q.y};
}

inline Point operator-(const Point& p, const Point& q) {
    return {p.x - q.x, p.y - q.y};
}

inline Point operator*(const Rational& s, const Point& p) {
    return {s * p.x, s * p.y};
}

// A nonzero vector, compared by counterclockwise angle from the positive
// x-axis. Two directions are equal iff they span the same ray.
struct Direction {
    Rational dx;
    Rational dy;
};

inline Direction operator-(const Direction& d) { return {-d.dx, -d.dy}; }

inline Rational cross(const Direction& a, const Direction& b) {
    return a.dx * b.dy - a.dy * b.dx;
}

inline Rational dot(const Direction& a, const Direction& b) {
    return a.dx * b.dx + a.dy * b.dy;
}

inline Direction direction_between(const Point& from, const Point& to) {
    return {to.x - from.x, to.y - from.y};
}

// Sign of the determinant |q-p, r-p|: +1 when r lies strictly left of the
// directed line p->q, 0 iff collinear, -1 otherwise.
int orient(const Point& p, const Point& q, const Point& r);

// True iff the open segments ab and cd share a point and the four endpoints
// are pairwise distinct. Segments sharing an endpoint report false; an
// endpoint lying in the interior of the other segment is not a crossing.
// Throws CollinearOverlapError when the segments overlap in more than one
// point.
bool segments_cross(const Point& a, const Point& b, const Point& c,
                    const Point& d);

// True iff no three of the (pairwise distinct) points are collinear.
// Throws DuplicatePointError when two points coincide.
bool in_general_position(const std::vector<Point>& points);

// Total order of directions by counterclockwise angle from the positive
// x-axis, decided with sign tests only.
std::strong_ordering compare_directions_ccw(const Direction& a,
                                            const Direction& b);

inline bool same_ray(const Direction& a, const Direction& b) {
    return compare_directions_ccw(a, b) == std::strong_ordering::equal;
}

// Squared Euclidean distances (exact; no square roots anywhere).
Rational distance_sq(const Point& p, const Point& q);
Rational point_segment_distance_sq(const Point& p, const Point& a,
                                   const Point& b);

// Strictly inside the open segment (a, b).
bool strictly_inside_segment(const Point& p, const Point& a, const Point& b);

}  // namespace gthick
