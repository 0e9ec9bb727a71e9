#include "gthick/angular.hpp"

#include <algorithm>

#include "gthick/errors.hpp"

namespace gthick {

bool HalfPlane::contains(const Point& p) const {
    int side_witness = orient(a, b, witness);
    if (side_witness == 0)
        throw ParameterOutOfRangeError("half-plane witness on boundary line");
    int side_p = orient(a, b, p);
    return side_p != 0 && side_p != side_witness;
}

bool tie_contains(const TieShape& t, const Point& p) {
    if (p == t.apex) throw ApexQueryError("tie membership query at the apex");
    Direction u = direction_between(t.apex, p);
    // Orient the defining pair so (a, b) spans the sector of extent < pi.
    Direction a = t.d1, b = t.d2;
    Rational c = cross(a, b);
    if (c == 0)
        throw ParameterOutOfRangeError("tie directions are parallel");
    if (c < 0) std::swap(a, b);
    auto in_sector = [&](const Direction& d) {
        return cross(a, d) > 0 && cross(d, b) > 0;
    };
    return in_sector(u) || in_sector(Direction{-u.dx, -u.dy});
}

bool arc_contains(const DirectionInterval& arc, const Direction& d) {
    if (same_ray(d, arc.lo) || same_ray(d, arc.hi)) return false;
    auto lo_d = compare_directions_ccw(arc.lo, d) == std::strong_ordering::less;
    auto d_hi = compare_directions_ccw(d, arc.hi) == std::strong_ordering::less;
    if (compare_directions_ccw(arc.lo, arc.hi) == std::strong_ordering::less)
        return lo_d && d_hi;
    return lo_d || d_hi;  // arc wraps past the positive x-axis
}

Direction arc_interior_direction(const Direction& lo, const Direction& hi) {
    Rational c = cross(lo, hi);
    if (c == 0) {
        if (dot(lo, hi) > 0)
            throw ParameterOutOfRangeError("empty arc has no interior");
        // Antipodal endpoints: extent is exactly pi; a quarter turn works.
        return Direction{-lo.dy, lo.dx};
    }
    Direction sum{lo.dx + hi.dx, lo.dy + hi.dy};
    if (c > 0) return sum;                       // extent < pi
    return Direction{-sum.dx, -sum.dy};          // extent > pi
}

AngularDomain AngularDomain::full(const Point& apex) {
    AngularDomain d(apex);
    d.full_ = true;
    return d;
}

AngularDomain AngularDomain::empty_at(const Point& apex) {
    return AngularDomain(apex);
}

AngularDomain AngularDomain::of_tie(const TieShape& t) {
    Direction a = t.d1, b = t.d2;
    Rational c = cross(a, b);
    if (c == 0)
        throw ParameterOutOfRangeError("tie directions are parallel");
    if (c < 0) std::swap(a, b);
    AngularDomain d(t.apex);
    d.arcs_.push_back({a, b});
    d.arcs_.push_back({Direction{-a.dx, -a.dy}, Direction{-b.dx, -b.dy}});
    d.canonicalize();
    return d;
}

void AngularDomain::canonicalize() {
    std::sort(arcs_.begin(), arcs_.end(),
              [](const DirectionInterval& x, const DirectionInterval& y) {
                  return compare_directions_ccw(x.lo, y.lo) ==
                         std::strong_ordering::less;
              });
}

bool AngularDomain::contains_direction(const Direction& d) const {
    if (full_) return true;
    for (const auto& arc : arcs_)
        if (arc_contains(arc, d)) return true;
    return false;
}

bool AngularDomain::contains_point(const Point& p) const {
    if (p == apex_)
        throw ApexQueryError("angular domain query at the apex");
    return contains_direction(direction_between(apex_, p));
}

AngularDomain AngularDomain::intersect(const AngularDomain& other) const {
    if (apex_ != other.apex_)
        throw ParameterOutOfRangeError(
            "intersecting angular domains at different apexes");
    if (full_) return other;
    if (other.full_) return *this;

    AngularDomain out(apex_);
    for (const auto& arc_a : arcs_) {
        for (const auto& arc_b : other.arcs_) {
            // Split the circle at all four endpoints; an elementary arc
            // belongs to the intersection iff its interior does.
            std::vector<Direction> cuts{arc_a.lo, arc_a.hi, arc_b.lo,
                                        arc_b.hi};
            std::sort(cuts.begin(), cuts.end(),
                      [](const Direction& x, const Direction& y) {
                          return compare_directions_ccw(x, y) ==
                                 std::strong_ordering::less;
                      });
            cuts.erase(std::unique(cuts.begin(), cuts.end(),
                                   [](const Direction& x, const Direction& y) {
                                       return same_ray(x, y);
                                   }),
                       cuts.end());
            for (size_t i = 0; i < cuts.size(); ++i) {
                const Direction& lo = cuts[i];
                const Direction& hi = cuts[(i + 1) % cuts.size()];
                if (cuts.size() == 1) break;  // cannot happen: arcs nonempty
                Direction probe = arc_interior_direction(lo, hi);
                if (arc_contains(arc_a, probe) && arc_contains(arc_b, probe))
                    out.arcs_.push_back({lo, hi});
            }
        }
    }
    out.canonicalize();
    return out;
}

Direction AngularDomain::interior_direction() const {
    if (full_) return Direction{1, 0};
    if (arcs_.empty())
        throw ParameterOutOfRangeError("empty angular domain has no interior");
    return arc_interior_direction(arcs_.front().lo, arcs_.front().hi);
}

bool AngularDomain::antipode_symmetric() const {
    if (full_) return true;
    for (const auto& arc : arcs_) {
        Direction nlo{-arc.lo.dx, -arc.lo.dy};
        Direction nhi{-arc.hi.dx, -arc.hi.dy};
        bool found = false;
        for (const auto& other : arcs_)
            if (same_ray(other.lo, nlo) && same_ray(other.hi, nhi))
                found = true;
        if (!found) return false;
    }
    return true;
}

CellDescriptor cell_of(const std::map<VertexId, Point>& gamma,
                       const std::set<VertexId>& S, VertexId v) {
    if (S.count(v))
        throw ParameterOutOfRangeError("cell owner must lie outside S");
    if (S.size() < 2)
        throw ParameterOutOfRangeError("cell requires at least two vertices");
    CellDescriptor cell{v, {}};
    const Point& pv = gamma.at(v);
    for (auto a = S.begin(); a != S.end(); ++a) {
        auto b = a;
        for (++b; b != S.end(); ++b) {
            const Point& pa = gamma.at(*a);
            const Point& pb = gamma.at(*b);
            if (orient(pa, pb, pv) == 0)
                throw ParameterOutOfRangeError(
                    "cell owner collinear with a pair from S (drawing not in "
                    "general position)");
            cell.constraints.push_back(HalfPlane{pa, pb, pv});
        }
    }
    return cell;
}

bool cell_contains(const CellDescriptor& cell, const Point& p) {
    for (const HalfPlane& h : cell.constraints)
        if (h.contains(p)) return false;  // p in an excluded half-plane
    return true;
}

}  // namespace gthick
