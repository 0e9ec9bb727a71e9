#include "gthick/geometry.hpp"

#include <algorithm>

#include "gthick/errors.hpp"

namespace gthick {

int orient(const Point& p, const Point& q, const Point& r) {
    Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    if (det > 0) return 1;
    if (det < 0) return -1;
    return 0;
}

namespace {

// 1D interval overlap length sign for collinear segments, projected on the
// dominant axis of ab.
bool collinear_open_overlap(const Point& a, const Point& b, const Point& c,
                            const Point& d) {
    const bool use_x = a.x != b.x;
    auto coord = [&](const Point& p) { return use_x ? p.x : p.y; };
    Rational lo1 = std::min(coord(a), coord(b));
    Rational hi1 = std::max(coord(a), coord(b));
    Rational lo2 = std::min(coord(c), coord(d));
    Rational hi2 = std::max(coord(c), coord(d));
    return std::max(lo1, lo2) < std::min(hi1, hi2);
}

}  // namespace

bool segments_cross(const Point& a, const Point& b, const Point& c,
                    const Point& d) {
    if (a == c || a == d || b == c || b == d) return false;

    int o1 = orient(a, b, c);
    int o2 = orient(a, b, d);
    int o3 = orient(c, d, a);
    int o4 = orient(c, d, b);

    if (o1 == 0 && o2 == 0) {
        // All four points on one line; an overlap of positive length is a
        // degenerate drawing the caller must perturb.
        if (collinear_open_overlap(a, b, c, d))
            throw CollinearOverlapError("segments overlap collinearly");
        return false;
    }
    return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

bool in_general_position(const std::vector<Point>& points) {
    const size_t n = points.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                throw DuplicatePointError("coincident points at indices " +
                                          std::to_string(i) + ", " +
                                          std::to_string(j));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k)
                if (orient(points[i], points[j], points[k]) == 0) return false;
    return true;
}

std::strong_ordering compare_directions_ccw(const Direction& a,
                                            const Direction& b) {
    // Half 0 covers angles in [0, pi), half 1 covers [pi, 2pi).
    auto half = [](const Direction& d) {
        if (d.dy > 0 || (d.dy == 0 && d.dx > 0)) return 0;
        return 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha <=> hb;
    Rational c = cross(a, b);
    if (c > 0) return std::strong_ordering::less;
    if (c < 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational distance_sq(const Point& p, const Point& q) {
    Rational dx = p.x - q.x;
    Rational dy = p.y - q.y;
    return dx * dx + dy * dy;
}

Rational point_segment_distance_sq(const Point& p, const Point& a,
                                   const Point& b) {
    Direction ab = direction_between(a, b);
    Direction ap = direction_between(a, p);
    Rational len_sq = dot(ab, ab);
    if (len_sq == 0) return distance_sq(p, a);
    Rational t = dot(ap, ab) / len_sq;
    if (t <= 0) return distance_sq(p, a);
    if (t >= 1) return distance_sq(p, b);
    Rational c = cross(ab, ap);
    return c * c / len_sq;
}

bool strictly_inside_segment(const Point& p, const Point& a, const Point& b) {
    if (p == a || p == b) return false;
    if (orient(a, b, p) != 0) return false;
    const bool use_x = a.x != b.x;
    auto coord = [&](const Point& q) { return use_x ? q.x : q.y; };
    Rational lo = std::min(coord(a), coord(b));
    Rational hi = std::max(coord(a), coord(b));
    return lo < coord(p) && coord(p) < hi;
}

}  // namespace gthick
