#include <algorithm>

#include "gthick/errors.hpp"
#include "gthick/reductions.hpp"

namespace gthick {

namespace {

// Intersection of two non-parallel lines, each given by a point and a
// direction.
Point line_intersection(const Point& p1, const Direction& d1, const Point& p2,
                        const Direction& d2) {
    Rational denom = cross(d1, d2);
    if (denom == 0)
        throw ParameterOutOfRangeError("parallel lines do not intersect");
    Direction delta = direction_between(p1, p2);
    Rational t = cross(delta, d2) / denom;
    return Point{p1.x + t * d1.dx, p1.y + t * d1.dy};
}

Cone make_cone(const Point& apex, Direction a, Direction b) {
    Rational c = cross(a, b);
    if (c == 0) throw ParameterOutOfRangeError("degenerate cone");
    if (c < 0) std::swap(a, b);
    return Cone{apex, a, b};
}

}  // namespace

std::vector<Point> region_corners(const GadgetRegion& region) {
    // Boundary lines: two per cone, through the apex along each direction.
    struct Line {
        Point base;
        Direction dir;
    };
    std::vector<Line> lines;
    for (const Cone& c : region.cones) {
        lines.push_back({c.apex, c.lo});
        lines.push_back({c.apex, c.hi});
    }
    auto inside_closed = [&](const Point& p) {
        for (const Cone& c : region.cones) {
            if (p == c.apex) continue;
            Direction u = direction_between(c.apex, p);
            if (cross(c.lo, u) < 0 || cross(u, c.hi) < 0) return false;
        }
        return true;
    };
    std::vector<Point> corners;
    for (size_t i = 0; i < lines.size(); ++i) {
        for (size_t j = i + 1; j < lines.size(); ++j) {
            if (cross(lines[i].dir, lines[j].dir) == 0) continue;
            Point p = line_intersection(lines[i].base, lines[i].dir,
                                        lines[j].base, lines[j].dir);
            if (!inside_closed(p)) continue;
            bool dup = false;
            for (const Point& q : corners)
                if (q == p) dup = true;
            if (!dup) corners.push_back(p);
        }
    }
    // Order counterclockwise around the middle point.
    std::sort(corners.begin(), corners.end(),
              [&](const Point& a, const Point& b) {
                  Direction da = direction_between(region.middle, a);
                  Direction db = direction_between(region.middle, b);
                  return compare_directions_ccw(da, db) ==
                         std::strong_ordering::less;
              });
    return corners;
}

std::vector<std::pair<Point, Point>> ChoiceGadget::red_edges() const {
    std::vector<std::pair<Point, Point>> out;
    auto chain = [&](const std::vector<Point>& fence) {
        for (size_t i = 0; i + 1 < fence.size(); ++i)
            out.emplace_back(fence[i], fence[i + 1]);
    };
    chain(left_fence);
    chain(right_fence);
    chain(down_fence);
    for (const auto& e : down_barrier_edges) out.push_back(e);
    return out;
}

ChoiceGadget build_choice_gadget(int index, const std::vector<int>& sizes,
                                 const Rational& scale,
                                 const Rational& epsilon, const Frame& frame) {
    if (index < 0 || index >= static_cast<int>(sizes.size()))
        throw ParameterOutOfRangeError("gadget index out of range");
    const int t = sizes[index];
    if (t < 1) throw ParameterOutOfRangeError("gadget needs one choice");
    if (scale < 1) throw ParameterOutOfRangeError("scale must be at least 1");
    for (int size : sizes)
        if (size >= 1 && epsilon > Rational(3, 2 * size))
            throw ParameterOutOfRangeError("epsilon exceeds its bound");
    if (epsilon <= 0) throw ParameterOutOfRangeError("epsilon not positive");

    const Rational& s = scale;
    const Rational& eps = epsilon;
    ChoiceGadget g;
    g.index = index;
    g.choices = t;
    g.scale = s;
    g.epsilon = eps;
    g.frame = frame;

    auto world = [&](const Rational& x, const Rational& y) {
        return frame.apply(Point{x, y});
    };

    g.anchor_left = world(-4 * s, 0);
    g.anchor_down = world(0, -2 * s);
    g.anchor_right = world(4 * s, 0);

    // Left and right fences; the barrier gap spans +-eps/16 where the rays
    // from the anchor through (0, +-eps/4) meet the vertical fence side.
    g.left_fence = {world(-3 * s, eps / 16), world(-3 * s, 3 * s / 4),
                    world(-19 * s / 4, 0), world(-3 * s, -3 * s / 4),
                    world(-3 * s, -eps / 16)};
    g.right_fence = {world(3 * s, eps / 16), world(3 * s, 3 * s / 4),
                     world(19 * s / 4, 0), world(3 * s, -3 * s / 4),
                     world(3 * s, -eps / 16)};

    // Middle points, evenly spaced on [-2s, 2s].
    std::vector<Rational> middle_x;
    if (t == 1) {
        middle_x.push_back(0);
    } else {
        for (int j = 1; j <= t; ++j)
            middle_x.push_back(s * (Rational(4 * (j - 1), t - 1) - 2));
    }
    for (const Rational& x : middle_x) g.middles.push_back(world(x, 0));

    // Downward fence: barrier holes on the line y = -eps/4 aimed at the
    // middle points, with widths bounded through a rational lower estimate
    // of sqrt(2).
    const Rational sqrt2_low(239, 169);
    const Rational lambda = (8 * s - eps) / (8 * s + eps);
    std::vector<Rational> barrier_x;  // 2t points, ascending
    for (int j = 0; j < t; ++j) {
        const Rational& mx = middle_x[j];
        Rational zeta;
        if (mx == 0) {
            zeta = Rational(9, 10) * sqrt2_low * eps / 2;
        } else {
            Rational tan_alpha = 2 * s / (mx < 0 ? -mx : mx);
            zeta = Rational(9, 10) * (sqrt2_low * eps * tan_alpha - eps) /
                   (2 * tan_alpha);
        }
        if (zeta <= 0)
            throw ParameterOutOfRangeError("barrier width not positive");
        Rational star_x = mx * (1 + eps / (8 * s));
        barrier_x.push_back(lambda * (star_x - zeta / 2));
        barrier_x.push_back(lambda * (star_x + zeta / 2));
    }
    for (size_t i = 0; i + 1 < barrier_x.size(); ++i)
        if (barrier_x[i] >= barrier_x[i + 1])
            throw ParameterOutOfRangeError("barrier holes overlap");

    g.down_fence = {world(barrier_x.front(), -eps / 4), world(-3 * s / 2, -s),
                    world(0, -3 * s), world(3 * s / 2, -s),
                    world(barrier_x.back(), -eps / 4)};
    for (int j = 0; j + 1 < t; ++j)
        g.down_barrier_edges.emplace_back(
            world(barrier_x[2 * j + 1], -eps / 4),
            world(barrier_x[2 * j + 2], -eps / 4));

    g.boundary_left = world(-5 * s, 0);
    g.boundary_right = world(5 * s, 0);
    g.boundary_down = world(0, -13 * s / 4);
    g.boundary_up = world(0, 5 * s);

    // Regions: left cone, right cone, and the per-choice downward cone.
    Point a_l = g.anchor_left, a_r = g.anchor_right, a_d = g.anchor_down;
    Cone cone_l = make_cone(
        a_l, direction_between(a_l, world(-3 * s, -eps / 16)),
        direction_between(a_l, world(-3 * s, eps / 16)));
    Cone cone_r = make_cone(
        a_r, direction_between(a_r, world(3 * s, -eps / 16)),
        direction_between(a_r, world(3 * s, eps / 16)));
    for (int j = 0; j < t; ++j) {
        GadgetRegion region;
        region.middle = g.middles[j];
        region.cones.push_back(cone_l);
        region.cones.push_back(cone_r);
        region.cones.push_back(make_cone(
            a_d,
            direction_between(a_d, world(barrier_x[2 * j], -eps / 4)),
            direction_between(a_d, world(barrier_x[2 * j + 1], -eps / 4))));
        g.regions.push_back(std::move(region));
    }
    return g;
}

bool MccInstance::has_edge(int i, int j, int i2, int j2) const {
    auto a = std::make_pair(i, j);
    auto b = std::make_pair(i2, j2);
    if (b < a) std::swap(a, b);
    return edges.count({a, b}) > 0;
}

bool MccInstance::has_multicolored_clique() const {
    // Exhaustive search over one representative per part.
    std::vector<int> choice(k, 1);
    while (true) {
        bool clique = true;
        for (int i = 0; i < k && clique; ++i)
            for (int j = i + 1; j < k; ++j)
                if (!has_edge(i + 1, choice[i], j + 1, choice[j])) {
                    clique = false;
                    break;
                }
        if (clique) return true;
        int pos = 0;
        while (pos < k && choice[pos] == sizes[pos]) choice[pos++] = 1;
        if (pos == k) return false;
        ++choice[pos];
    }
}

std::optional<std::vector<bool>> Cnf::satisfying_assignment() const {
    if (num_variables > 24)
        throw OracleBudgetExceededError("CNF too large for exhaustive search");
    for (uint64_t mask = 0; mask < (uint64_t(1) << num_variables); ++mask) {
        bool ok = true;
        for (const auto& clause : clauses) {
            bool sat = false;
            for (int lit : clause) {
                int var = lit > 0 ? lit : -lit;
                bool value = (mask >> (var - 1)) & 1;
                if ((lit > 0) == value) sat = true;
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<bool> assignment(num_variables);
            for (int v = 0; v < num_variables; ++v)
                assignment[v] = (mask >> v) & 1;
            return assignment;
        }
    }
    return std::nullopt;
}

}  // namespace gthick
