#include "gthick/clone.hpp"

#include <algorithm>

#include "gthick/errors.hpp"

namespace gthick {

AngularDomain admissible_region(const LayeredDrawing& d, VertexId v) {
    const Point& apex = d.gamma.at(v);
    std::vector<VertexId> nbrs = d.graph.neighbors(v);
    std::sort(nbrs.begin(), nbrs.end());
    AngularDomain region = AngularDomain::full(apex);
    for (size_t i = 0; i < nbrs.size(); ++i) {
        for (size_t j = i + 1; j < nbrs.size(); ++j) {
            if (d.chi.at(make_edge(v, nbrs[i])) !=
                d.chi.at(make_edge(v, nbrs[j])))
                continue;
            TieShape tie{apex, direction_between(apex, d.gamma.at(nbrs[i])),
                         direction_between(apex, d.gamma.at(nbrs[j]))};
            region = region.intersect(AngularDomain::of_tie(tie));
            if (region.is_empty()) return region;
        }
    }
    return region;
}

bool can_clone_in_cell(const LayeredDrawing& d, const std::set<VertexId>& S,
                       VertexId v) {
    if (S.count(v))
        throw ParameterOutOfRangeError("clone target must lie outside S");
    return !admissible_region(d, v).is_empty();
}

namespace {

// Largest step along `dir` from `apex` before leaving the cell: for each
// constraint line the critical parameter solves a linear equation exactly.
Rational cell_step_bound(const CellDescriptor& cell, const Point& apex,
                         const Direction& dir, const Rational& fallback) {
    Rational bound = fallback;
    for (const HalfPlane& h : cell.constraints) {
        // orient(a, b, apex + t*dir) is linear in t: base + t * slope.
        Rational base = (h.b.x - h.a.x) * (apex.y - h.a.y) -
                        (h.b.y - h.a.y) * (apex.x - h.a.x);
        Rational slope = (h.b.x - h.a.x) * dir.dy - (h.b.y - h.a.y) * dir.dx;
        if (slope == 0) continue;
        Rational t_hit = -base / slope;
        if (t_hit > 0 && t_hit < bound) bound = t_hit;
    }
    return bound;
}

}  // namespace

LayeredDrawing insert_clone(const LayeredDrawing& d,
                            const std::set<VertexId>& S, VertexId v,
                            VertexId clone_id) {
    if (d.graph.has_vertex(clone_id))
        throw ParameterOutOfRangeError("clone id already present");
    AngularDomain region = admissible_region(d, v);
    if (region.is_empty())
        throw NotCloneableError("vertex " + std::to_string(v) +
                                " has an empty admissible region");

    const Point& apex = d.gamma.at(v);
    CellDescriptor cell = cell_of(d.gamma, S, v);
    Rational clearance_sq = clearance_radius_sq(d, v);
    std::vector<VertexId> nbrs = d.graph.neighbors(v);

    // Candidate directions: breadth-first mediant subdivision of the
    // admissible arcs. Every emitted direction is strictly interior, and
    // repeated insertions at one apex always find a fresh slope.
    std::vector<DirectionInterval> queue;
    if (region.is_full()) {
        queue = {{{1, 0}, {0, 1}},
                 {{0, 1}, {-1, 0}},
                 {{-1, 0}, {0, -1}},
                 {{0, -1}, {1, 0}}};
    } else {
        queue.assign(region.arcs().begin(), region.arcs().end());
    }
    std::vector<Direction> candidates;
    for (size_t head = 0; candidates.size() < 256 && head < queue.size();
         ++head) {
        DirectionInterval arc = queue[head];
        Direction mid = arc_interior_direction(arc.lo, arc.hi);
        candidates.push_back(mid);
        queue.push_back({arc.lo, mid});
        queue.push_back({mid, arc.hi});
    }

    for (const Direction& dir : candidates) {
        // A direction aiming along apex->u is collinear with u at every
        // step size; skip it outright.
        bool dead = false;
        for (const auto& [u, p] : d.gamma) {
            if (u == v) continue;
            if (cross(dir, direction_between(apex, p)) == 0) dead = true;
        }
        if (dead) continue;

        Rational dir_sq = dir.dx * dir.dx + dir.dy * dir.dy;
        // |t*dir| below the clearance radius and below every cell line;
        // power-of-two steps keep coordinate bit growth linear across
        // repeated insertions.
        Rational t0 = pow2_step_below(clearance_sq / (4 * dir_sq));
        Rational cell_bound = cell_step_bound(cell, apex, dir, t0 * 4);
        if (cell_bound / 2 < t0)
            t0 = pow2_step_below(cell_bound * cell_bound / 4);
        if (t0 <= 0) continue;
        Rational t = t0;
        for (int attempt = 0; attempt < 24; ++attempt, t /= 2) {
            Point pos{apex.x + t * dir.dx, apex.y + t * dir.dy};
            if (!cell_contains(cell, pos)) continue;
            if (!region.contains_point(pos)) continue;

            LayeredDrawing out = d;
            out.graph.add_vertex(clone_id);
            out.gamma[clone_id] = pos;
            bool clash = false;
            for (const auto& [u, p] : d.gamma)
                if (p == pos) clash = true;
            if (clash) continue;
            for (VertexId u : nbrs) {
                out.graph.add_edge(clone_id, u);
                out.chi[make_edge(clone_id, u)] = d.chi.at(make_edge(v, u));
            }
            try {
                if (validate(out).empty() && drawing_in_general_position(out))
                    return out;
            } catch (const DegenerateGeometryError&) {
            }
        }
    }
    throw NotCloneableError(
        "no valid clone placement found for vertex " + std::to_string(v) +
        " (nonempty admissible region but placement search exhausted)");
}

}  // namespace gthick
