#include <algorithm>
#include <cmath>

#include "gthick/errors.hpp"
#include "gthick/reductions.hpp"

namespace gthick {

namespace {

// ---------------------------------------------------------------------
// Instance assembly
// ---------------------------------------------------------------------

struct Builder {
    GteInstance inst;
    int next_id = 0;

    VertexId add_drawn(const Point& p) {
        VertexId v = next_id++;
        inst.graph.add_vertex(v);
        inst.predrawn.graph.add_vertex(v);
        inst.predrawn.gamma[v] = p;
        return v;
    }
    void add_drawn_edge(VertexId u, VertexId v, int color) {
        inst.graph.add_edge(u, v);
        inst.predrawn.graph.add_edge(u, v);
        inst.predrawn.chi[make_edge(u, v)] = color;
    }
    VertexId add_missing_vertex() {
        VertexId v = next_id++;
        inst.graph.add_vertex(v);
        return v;
    }
    void add_missing_edge(VertexId u, VertexId v) { inst.graph.add_edge(u, v); }

    // Fence polyline in red (color 1).
    std::vector<VertexId> add_fence(const std::vector<Point>& points) {
        std::vector<VertexId> ids;
        for (const Point& p : points) ids.push_back(add_drawn(p));
        for (size_t i = 0; i + 1 < ids.size(); ++i)
            add_drawn_edge(ids[i], ids[i + 1], 1);
        return ids;
    }

    void add_gadget(const ChoiceGadget& g,
                    std::map<std::pair<Point, Point>, Edge>* barrier_edges) {
        add_fence(g.left_fence);
        add_fence(g.right_fence);
        std::vector<VertexId> down = add_fence(g.down_fence);
        (void)down;
        for (const auto& [a, b] : g.down_barrier_edges) {
            VertexId u = add_drawn(a);
            VertexId v = add_drawn(b);
            add_drawn_edge(u, v, 1);
            if (barrier_edges) (*barrier_edges)[{a, b}] = make_edge(u, v);
        }
    }

    // Nested triangles centered strictly around `center`, one per color.
    void add_color_fences(const Point& center, const Rational& radius,
                          const std::vector<int>& colors) {
        int rank = 1;
        for (int color : colors) {
            Rational rho =
                radius * Rational(rank, 2 * static_cast<int>(colors.size()) +
                                            2);
            Point p1{center.x + rho, center.y};
            Point p2{center.x - rho, center.y + rho};
            Point p3{center.x - rho, center.y - rho};
            VertexId a = add_drawn(p1);
            VertexId b = add_drawn(p2);
            VertexId c = add_drawn(p3);
            add_drawn_edge(a, b, color);
            add_drawn_edge(b, c, color);
            add_drawn_edge(c, a, color);
            ++rank;
        }
    }
};

// ---------------------------------------------------------------------
// Interval bookkeeping along a tunnel axis
// ---------------------------------------------------------------------

struct IntervalSet {
    // Sorted, disjoint, closed intervals.
    std::vector<std::pair<Rational, Rational>> parts;

    static IntervalSet whole(const Rational& lo, const Rational& hi) {
        IntervalSet s;
        if (lo < hi) s.parts.emplace_back(lo, hi);
        return s;
    }

    void subtract(const Rational& lo, const Rational& hi) {
        if (lo >= hi) return;
        std::vector<std::pair<Rational, Rational>> out;
        for (auto& [a, b] : parts) {
            if (hi <= a || b <= lo) {
                out.emplace_back(a, b);
                continue;
            }
            if (a < lo) out.emplace_back(a, lo);
            if (hi < b) out.emplace_back(hi, b);
        }
        parts = std::move(out);
    }

    void intersect(const Rational& lo, const Rational& hi) {
        std::vector<std::pair<Rational, Rational>> out;
        for (auto& [a, b] : parts) {
            Rational na = std::max(a, lo);
            Rational nb = std::min(b, hi);
            if (na < nb) out.emplace_back(na, nb);
        }
        parts = std::move(out);
    }

    // Keep the region where g0 + g1*t > 0.
    void intersect_linear(const Rational& g0, const Rational& g1) {
        if (g1 == 0) {
            if (g0 <= 0) parts.clear();
            return;
        }
        Rational root = -g0 / g1;
        if (g1 > 0)
            intersect(root, Rational(1) << 30);
        else
            intersect(Rational(-1) << 30, root);
    }
};

Direction rot90(const Direction& d) { return Direction{-d.dy, d.dx}; }

// Rational point on the unit circle close to the given angle.
Direction rational_unit_near(double angle) {
    double t = std::tan(angle / 2);
    Rational tr = rationalize(t, Rational(1, 1 << 24));
    Rational denom = 1 + tr * tr;
    Direction d{(1 - tr * tr) / denom, 2 * tr / denom};
    if (d.dx * d.dx + d.dy * d.dy != 1)
        throw ParameterOutOfRangeError("unit direction construction failed");
    return d;
}

// ---------------------------------------------------------------------
// Near-regular polygon from an exact rational rotation
// ---------------------------------------------------------------------

struct PolygonLayout {
    std::vector<Point> vertices;   // counterclockwise
    std::vector<Frame> frames;     // per side, origin at the side midpoint
    std::vector<Rational> scales;  // per side, side length / 10
    Point center{Rational(0), Rational(0)};

    bool side_inside(const Point& p) const {
        // Strictly inside the convex polygon.
        size_t k = vertices.size();
        for (size_t i = 0; i < k; ++i) {
            const Point& a = vertices[i];
            const Point& b = vertices[(i + 1) % k];
            if (orient(a, b, p) <= 0) return false;
        }
        return true;
    }
};

PolygonLayout near_regular_polygon(int k, const Rational& radius) {
    // Half-angle unit vector (cos, sin) ~ (cos(pi/k), sin(pi/k)); rotating
    // by its double angle is an exact rational isometry, and both the k-1
    // rotation chords and the closing chord have rational length.
    Direction half = rational_unit_near(M_PI / k);
    const Rational q = half.dx, p = half.dy;
    const Rational c = q * q - p * p, s = 2 * p * q;

    PolygonLayout layout;
    Point v{radius, Rational(0)};
    for (int i = 0; i < k; ++i) {
        layout.vertices.push_back(v);
        v = Point{c * v.x - s * v.y, s * v.x + c * v.y};
    }
    // Convexity and consistent orientation.
    for (int i = 0; i < k; ++i) {
        const Point& a = layout.vertices[i];
        const Point& b = layout.vertices[(i + 1) % k];
        const Point& cc = layout.vertices[(i + 2) % k];
        if (orient(a, b, cc) <= 0)
            throw DegenerateScalingError("polygon is not convex");
    }

    // cos/sin of j*phi by exact angle addition, for the closing chord.
    Rational cos_j = 1, sin_j = 0;
    for (int j = 0; j < k - 1; ++j) {
        Rational nc = cos_j * q - sin_j * p;
        Rational ns = sin_j * q + cos_j * p;
        cos_j = nc;
        sin_j = ns;
    }

    for (int i = 0; i < k; ++i) {
        const Point& a = layout.vertices[i];
        const Point& b = layout.vertices[(i + 1) % k];
        Rational length = i + 1 < k ? 2 * radius * p : 2 * radius * sin_j;
        if (length <= 0)
            throw DegenerateScalingError("polygon side degenerate");
        if (distance_sq(a, b) != length * length)
            throw DegenerateScalingError("side length mismatch");
        Frame frame;
        frame.origin = Point{(a.x + b.x) / 2, (a.y + b.y) / 2};
        frame.ux = Direction{(b.x - a.x) / length, (b.y - a.y) / length};
        frame.uy = rot90(frame.ux);
        layout.frames.push_back(frame);
        layout.scales.push_back(length / 10);
    }
    return layout;
}

// ---------------------------------------------------------------------
// Exact distance helpers for fence sizing
// ---------------------------------------------------------------------

Rational segment_pair_distance_sq(const Point& a, const Point& b,
                                  const Point& c, const Point& d) {
    try {
        if (segments_cross(a, b, c, d)) return 0;
    } catch (const CollinearOverlapError&) {
        return 0;
    }
    Rational best = point_segment_distance_sq(a, c, d);
    best = std::min(best, point_segment_distance_sq(b, c, d));
    best = std::min(best, point_segment_distance_sq(c, a, b));
    best = std::min(best, point_segment_distance_sq(d, a, b));
    return best;
}

// Convex hull (counterclockwise) of a small point set.
std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Point> hull;
    for (int pass = 0; pass < 2; ++pass) {
        size_t start = hull.size();
        for (const Point& p : pts) {
            while (hull.size() >= start + 2 &&
                   orient(hull[hull.size() - 2], hull.back(), p) <= 0)
                hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();
        std::reverse(pts.begin(), pts.end());
    }
    return hull;
}

bool inside_convex(const std::vector<Point>& hull, const Point& p) {
    if (hull.size() < 3) return false;
    for (size_t i = 0; i < hull.size(); ++i)
        if (orient(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
    return true;
}

Rational point_hull_distance_sq(const std::vector<Point>& hull,
                                const Point& p) {
    if (hull.empty()) throw ParameterOutOfRangeError("empty hull");
    if (hull.size() == 1) return distance_sq(hull[0], p);
    if (inside_convex(hull, p)) return 0;
    Rational best = distance_sq(hull[0], p);
    for (size_t i = 0; i < hull.size(); ++i)
        best = std::min(best,
                        point_segment_distance_sq(
                            p, hull[i], hull[(i + 1) % hull.size()]));
    return best;
}

// Axis-aligned square slightly larger than the disk of radius r around c.
std::vector<Point> disk_box(const Point& c, const Rational& r) {
    Rational rr = r * Rational(65, 64);
    return {Point{c.x - rr, c.y - rr}, Point{c.x + rr, c.y - rr},
            Point{c.x + rr, c.y + rr}, Point{c.x - rr, c.y + rr}};
}

}  // namespace

// ---------------------------------------------------------------------
// The multicolored-clique reduction
// ---------------------------------------------------------------------

namespace {

HardnessInstance trivial_instance(bool positive, const std::string& source) {
    HardnessInstance out;
    out.source = source;
    out.expected = positive ? Verdict::Sat : Verdict::Unsat;
    out.certified = positive;
    if (positive) {
        // One missing vertex, nothing drawn: always extendable.
        Builder b;
        VertexId v = b.add_missing_vertex();
        b.inst.predrawn.layers = 1;
        out.instance = b.inst;
        out.missing = {v};
        WitnessRecipe recipe;
        recipe.positions[v] = Point{Rational(0), Rational(0)};
        out.witness = recipe;
    } else {
        // Convex K4 with three boundary edges and one diagonal in a single
        // layer; the missing diagonal is forced to cross it.
        Builder b;
        VertexId a = b.add_drawn(Point{Rational(0), Rational(0)});
        VertexId c = b.add_drawn(Point{Rational(4), Rational(0)});
        VertexId d = b.add_drawn(Point{Rational(4), Rational(4)});
        VertexId e = b.add_drawn(Point{Rational(0), Rational(4)});
        for (auto [u, w] : {std::pair{a, c}, {c, d}, {d, e}, {e, a}, {a, d}})
            b.add_drawn_edge(u, w, 1);
        b.add_missing_edge(c, e);
        b.inst.predrawn.layers = 1;
        out.instance = b.inst;
    }
    check_instance(out.instance);
    return out;
}

}  // namespace

HardnessInstance gen_w1_instance(const MccInstance& x) {
    if (x.k != static_cast<int>(x.sizes.size()))
        throw ParameterOutOfRangeError("part count mismatch");
    for (int size : x.sizes)
        if (size < 1)
            throw ParameterOutOfRangeError("every part needs a vertex");
    if (x.k < 3) return trivial_instance(x.has_multicolored_clique(), "mcc");

    const int k = x.k;
    const int layers = k * (k - 1) / 2 + 1;
    Rational epsilon(3, 2);
    for (int size : x.sizes)
        epsilon = std::min(epsilon, Rational(3, 2 * size));

    int max_size = *std::max_element(x.sizes.begin(), x.sizes.end());
    Rational radius = Rational(64) * k * k * max_size;
    for (int attempt = 0;; ++attempt, radius *= 2) {
        if (attempt > 10)
            throw DegenerateScalingError(
                "no scaling factor made the blocking placement feasible");
        try {
            PolygonLayout layout = near_regular_polygon(k, radius);
            for (const Rational& s : layout.scales)
                if (s < 1) throw DegenerateScalingError("side too short");

            Builder b;
            HardnessInstance out;
            out.source = "mcc";

            std::vector<ChoiceGadget> gadgets;
            for (int i = 0; i < k; ++i) {
                ChoiceGadget g =
                    build_choice_gadget(i, x.sizes, layout.scales[i], epsilon,
                                        layout.frames[i]);
                b.add_gadget(g, nullptr);
                gadgets.push_back(std::move(g));
            }

            // Visibility tunnels: all cross-gadget middle pairs.
            struct Tunnel {
                std::pair<int, int> a, b;  // (gadget, choice), 0-based
                Point m1, m2;
                bool is_edge;
            };
            std::vector<Tunnel> tunnels;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < x.sizes[i]; ++j)
                    for (int i2 = i + 1; i2 < k; ++i2)
                        for (int j2 = 0; j2 < x.sizes[i2]; ++j2)
                            tunnels.push_back(
                                {{i, j},
                                 {i2, j2},
                                 gadgets[i].middles[j],
                                 gadgets[i2].middles[j2],
                                 x.has_edge(i + 1, j + 1, i2 + 1, j2 + 1)});

            const Rational strip_width = epsilon * Rational(33, 32);
            const Rational strip_width_sq = strip_width * strip_width;

            for (const Tunnel& tunnel : tunnels) {
                if (tunnel.is_edge) continue;
                const Point& A = tunnel.m1;
                const Point& B = tunnel.m2;
                Direction axis = direction_between(A, B);
                Rational axis_sq = dot(axis, axis);
                Direction normal = rot90(axis);
                // Chord half-length just above epsilon.
                Rational tau = sqrt_upper(epsilon * epsilon *
                                          Rational(65 * 65, 64 * 64) /
                                          axis_sq);
                Rational chord_reach_sq = tau * tau * axis_sq;
                if (chord_reach_sq <= epsilon * epsilon ||
                    chord_reach_sq > strip_width_sq)
                    throw DegenerateScalingError("chord width out of range");

                // Free parameter range along the axis.
                Rational lam_eps =
                    sqrt_upper(epsilon * epsilon *
                               Rational(65 * 65, 64 * 64) / axis_sq);
                IntervalSet free =
                    IntervalSet::whole(lam_eps, Rational(1) - lam_eps);

                // Stay inside the polygon: both chord tips, every side.
                for (size_t side = 0; side < layout.vertices.size(); ++side) {
                    const Point& va = layout.vertices[side];
                    const Point& vb =
                        layout.vertices[(side + 1) % layout.vertices.size()];
                    Direction sd = direction_between(va, vb);
                    for (int sign : {1, -1}) {
                        // cross(sd, P(lam) - va) > 0 with
                        // P(lam) = A + lam*axis + sign*tau*normal.
                        Point base{A.x + sign * tau * normal.dx,
                                   A.y + sign * tau * normal.dy};
                        Rational g0 = cross(sd, direction_between(va, base));
                        Rational g1 = cross(sd, axis);
                        free.intersect_linear(g0, g1);
                    }
                }

                // Other tunnels' strips: forbid |c0 + c1*lam| <= W + C2.
                for (const Tunnel& other : tunnels) {
                    if (&other == &tunnel) continue;
                    Direction d2 = direction_between(other.m1, other.m2);
                    Rational d2_sq = dot(d2, d2);
                    Rational W =
                        sqrt_upper(strip_width_sq * d2_sq);
                    Rational c0 =
                        cross(d2, direction_between(other.m1, A));
                    Rational c1 = cross(d2, axis);
                    Rational c2 = tau * cross(d2, normal);
                    if (c2 < 0) c2 = -c2;
                    Rational bound = W + c2;
                    if (c1 == 0) {
                        if (c0 < 0) c0 = -c0;
                        if (c0 <= bound)
                            throw DegenerateScalingError(
                                "parallel overlapping tunnels");
                        continue;
                    }
                    Rational lo = (-bound - c0) / c1;
                    Rational hi = (bound - c0) / c1;
                    if (lo > hi) std::swap(lo, hi);
                    free.subtract(lo, hi);
                }

                // Already-drawn segments: subtract the sweep preimage.
                Rational inv = cross(axis, normal) * tau;  // == tau*|axis|^2
                for (const Edge& e : b.inst.predrawn.graph.edges()) {
                    const Point& E0 = b.inst.predrawn.gamma.at(e.first);
                    const Point& E1 = b.inst.predrawn.gamma.at(e.second);
                    auto decompose = [&](const Point& E) {
                        Direction rel = direction_between(A, E);
                        Rational lam =
                            cross(rel, Direction{tau * normal.dx,
                                                 tau * normal.dy}) /
                            inv * -1;
                        Rational sig = cross(axis, rel) / inv;
                        return std::pair{lam, sig};
                    };
                    auto [l0, s0] = decompose(E0);
                    auto [l1, s1] = decompose(E1);
                    // Clip the (lam, sigma) segment to sigma in [-1, 1].
                    Rational lo_s = std::min(s0, s1), hi_s = std::max(s0, s1);
                    if (hi_s < -1 || lo_s > 1) continue;
                    Rational la = l0, lb = l1;
                    if (s0 != s1) {
                        auto lam_at = [&](const Rational& sig) {
                            return l0 + (l1 - l0) * (sig - s0) / (s1 - s0);
                        };
                        Rational cl0 = std::clamp(s0, Rational(-1),
                                                  Rational(1));
                        Rational cl1 = std::clamp(s1, Rational(-1),
                                                  Rational(1));
                        la = lam_at(cl0);
                        lb = lam_at(cl1);
                    }
                    if (la > lb) std::swap(la, lb);
                    free.subtract(la, lb);
                }

                if (free.parts.empty())
                    throw DegenerateScalingError(
                        "forbidden segments cover the tunnel");
                // Earliest admissible subsegment, blocking edges evenly
                // spaced inside it.
                auto [lo, hi] = free.parts.front();
                int count = layers - 1;
                std::vector<Edge> block;
                for (int c = 1; c <= count; ++c) {
                    Rational lam =
                        lo + (hi - lo) * Rational(c, count + 1);
                    Point mid{A.x + lam * axis.dx, A.y + lam * axis.dy};
                    Point p1{mid.x + tau * normal.dx, mid.y + tau * normal.dy};
                    Point p2{mid.x - tau * normal.dx, mid.y - tau * normal.dy};
                    VertexId u = b.add_drawn(p1);
                    VertexId v = b.add_drawn(p2);
                    b.add_drawn_edge(u, v, 1 + c);
                    block.push_back(make_edge(u, v));
                }
                auto key = std::make_pair(
                    std::make_pair(tunnel.a.first + 1, tunnel.a.second + 1),
                    std::make_pair(tunnel.b.first + 1, tunnel.b.second + 1));
                out.blocking_edges[key] = block;
            }

            // Local blocking fences around the anchors: every non-red color.
            std::vector<int> fence_colors;
            for (int c = 2; c <= layers; ++c) fence_colors.push_back(c);
            for (const ChoiceGadget& g : gadgets) {
                for (const Point& anchor :
                     {g.anchor_left, g.anchor_down, g.anchor_right}) {
                    Rational bound_sq;
                    bool first = true;
                    auto consider = [&](const Rational& sq) {
                        if (first || sq < bound_sq) bound_sq = sq;
                        first = false;
                    };
                    for (const auto& [v, p] : b.inst.predrawn.gamma)
                        if (!(p == anchor)) consider(distance_sq(anchor, p));
                    for (const Edge& e : b.inst.predrawn.graph.edges()) {
                        const Point& ea = b.inst.predrawn.gamma.at(e.first);
                        const Point& eb = b.inst.predrawn.gamma.at(e.second);
                        if (ea == anchor || eb == anchor) continue;
                        consider(point_segment_distance_sq(anchor, ea, eb));
                    }
                    Rational radius_a = sqrt_lower(bound_sq) / 2;
                    // Keep clear of every visibility tunnel.
                    for (const Tunnel& tunnel : tunnels) {
                        Rational d_sq = point_segment_distance_sq(
                            anchor, tunnel.m1, tunnel.m2);
                        Rational margin =
                            sqrt_lower(d_sq) - strip_width;
                        if (margin <= 0)
                            throw DegenerateScalingError(
                                "anchor too close to a tunnel");
                        radius_a = std::min(radius_a, margin / 2);
                    }
                    if (radius_a <= 0)
                        throw DegenerateScalingError("anchor fence radius");
                    b.add_color_fences(anchor, radius_a, fence_colors);
                }
            }

            // Missing part: the clique vertices, their anchor edges, and
            // the clique edges.
            std::vector<VertexId> clique;
            std::map<Point, VertexId> anchor_ids;
            // Anchors are drawn vertices; find their ids by position.
            for (const auto& [v, p] : b.inst.predrawn.gamma)
                anchor_ids[p] = v;
            // Anchors were never added as vertices: add them now.
            std::vector<std::array<VertexId, 3>> gadget_anchor_ids;
            for (const ChoiceGadget& g : gadgets) {
                std::array<VertexId, 3> ids{};
                int slot = 0;
                for (const Point& anchor :
                     {g.anchor_left, g.anchor_down, g.anchor_right})
                    ids[slot++] = b.add_drawn(anchor);
                gadget_anchor_ids.push_back(ids);
            }
            for (int i = 0; i < k; ++i) {
                VertexId c = b.add_missing_vertex();
                clique.push_back(c);
                for (VertexId a : gadget_anchor_ids[i])
                    b.add_missing_edge(c, a);
            }
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    b.add_missing_edge(clique[i], clique[j]);

            b.inst.predrawn.layers = layers;
            check_instance(b.inst);

            out.instance = b.inst;
            out.gadgets = gadgets;
            out.missing = clique;

            // Expected verdict and, when positive, the concrete witness.
            if (x.has_multicolored_clique()) {
                out.expected = Verdict::Sat;
                // Find one clique by the same exhaustive scan.
                std::vector<int> choice(k, 1);
                bool found = false;
                while (!found) {
                    bool clique_ok = true;
                    for (int i = 0; i < k && clique_ok; ++i)
                        for (int j = i + 1; j < k; ++j)
                            if (!x.has_edge(i + 1, choice[i], j + 1,
                                            choice[j])) {
                                clique_ok = false;
                                break;
                            }
                    if (clique_ok) {
                        found = true;
                        break;
                    }
                    int pos = 0;
                    while (pos < k && choice[pos] == x.sizes[pos])
                        choice[pos++] = 1;
                    if (pos == k) break;
                    ++choice[pos];
                }
                if (!found)
                    throw ParameterOutOfRangeError(
                        "clique scan disagrees with the decision");
                WitnessRecipe recipe;
                for (int i = 0; i < k; ++i)
                    recipe.positions[clique[i]] =
                        gadgets[i].middles[choice[i] - 1];
                for (int i = 0; i < k; ++i)
                    for (VertexId a : gadget_anchor_ids[i])
                        recipe.colors[make_edge(clique[i], a)] = 1;
                int next_color = 2;
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j)
                        recipe.colors[make_edge(clique[i], clique[j])] =
                            next_color++;
                // The witness must validate as an extension.
                LayeredDrawing full = b.inst.predrawn;
                full.graph = b.inst.graph;
                for (const auto& [v, p] : recipe.positions) full.gamma[v] = p;
                for (const auto& [e, c] : recipe.colors) full.chi[e] = c;
                if (!validate(full).empty())
                    throw DegenerateScalingError(
                        "constructed witness fails validation");
                out.witness = recipe;
                out.certified = true;
            } else {
                out.expected = Verdict::Unsat;
                out.certified = false;  // asserted by the reduction
            }
            return out;
        } catch (const DegenerateScalingError&) {
            if (attempt == 10) throw;
        }
    }
}

// ---------------------------------------------------------------------
// The 3-SAT reduction
// ---------------------------------------------------------------------

HardnessInstance gen_np_instance(const Cnf& cnf) {
    if (cnf.num_variables < 1)
        throw MalformedClauseError("formula needs at least one variable");
    for (const auto& clause : cnf.clauses) {
        std::set<int> vars;
        for (int lit : clause) {
            if (lit == 0 || std::abs(lit) > cnf.num_variables)
                throw MalformedClauseError("literal out of range");
            vars.insert(std::abs(lit));
        }
        if (vars.size() != 3)
            throw MalformedClauseError(
                "clauses need three distinct variables");
    }

    const int n = cnf.num_variables;
    const int m = static_cast<int>(cnf.clauses.size());
    const int layers = 2 * n + 1;
    // Colors: red = 1; positive literal x_i -> 2i, negated -> 2i + 1.
    auto literal_color = [&](int lit) {
        int var = std::abs(lit);
        return lit > 0 ? 2 * var : 2 * var + 1;
    };

    Builder b;
    HardnessInstance out;
    out.source = "3sat";

    // Square of side 10; the truth gadget sits on the top side, the
    // verification gadget on the right side, fences pointing outward.
    const Rational side(10);
    Frame top;
    top.origin = Point{Rational(5), Rational(10)};
    top.ux = Direction{-1, 0};
    top.uy = Direction{0, -1};
    Frame right;
    right.origin = Point{Rational(10), Rational(5)};
    right.ux = Direction{0, 1};
    right.uy = Direction{-1, 0};

    std::vector<int> ones{1, 1};
    ChoiceGadget top_gadget =
        build_choice_gadget(0, ones, Rational(1), Rational(1, 2), top);
    ChoiceGadget right_gadget =
        build_choice_gadget(1, ones, Rational(1), Rational(1, 2), right);
    b.add_gadget(top_gadget, nullptr);
    b.add_gadget(right_gadget, nullptr);

    const Point m_t = top_gadget.middles[0];    // (5, 10)
    const Point m_v = right_gadget.middles[0];  // (10, 5)
    const Rational eps(1, 2);

    // Variable and clause vertices, evenly spaced on the bottom and left
    // sides (isolated in the predrawn part).
    std::vector<VertexId> var_ids, clause_ids;
    std::vector<Point> var_points, clause_points;
    for (int i = 1; i <= n; ++i) {
        Point p{side * Rational(i, n + 1), Rational(0)};
        var_points.push_back(p);
        var_ids.push_back(b.add_drawn(p));
    }
    for (int j = 1; j <= m; ++j) {
        Point p{Rational(0), side * Rational(j, m + 1)};
        clause_points.push_back(p);
        clause_ids.push_back(b.add_drawn(p));
    }

    // Anchors as drawn vertices.
    std::vector<Point> top_anchors{top_gadget.anchor_left,
                                   top_gadget.anchor_down,
                                   top_gadget.anchor_right};
    std::vector<Point> right_anchors{right_gadget.anchor_left,
                                     right_gadget.anchor_down,
                                     right_gadget.anchor_right};
    std::vector<VertexId> top_anchor_ids, right_anchor_ids;
    for (const Point& p : top_anchors) top_anchor_ids.push_back(b.add_drawn(p));
    for (const Point& p : right_anchors)
        right_anchor_ids.push_back(b.add_drawn(p));

    // Fence radius for a vertex: clear of other vertices and edges, of the
    // two target disks, and of every other fenced vertex's visibility cone
    // toward both disks.
    std::vector<Point> fence_centers = var_points;
    fence_centers.insert(fence_centers.end(), clause_points.begin(),
                         clause_points.end());
    fence_centers.insert(fence_centers.end(), top_anchors.begin(),
                         top_anchors.end());
    fence_centers.insert(fence_centers.end(), right_anchors.begin(),
                         right_anchors.end());

    auto cone_hull = [&](const Point& apex, const Point& center) {
        std::vector<Point> pts = disk_box(center, eps);
        pts.push_back(apex);
        return convex_hull(pts);
    };

    auto fence_radius = [&](const Point& w) {
        Rational bound_sq;
        bool first = true;
        auto consider = [&](const Rational& sq) {
            if (sq <= 0)
                throw DegenerateScalingError("fence constraint collapses");
            if (first || sq < bound_sq) bound_sq = sq;
            first = false;
        };
        for (const auto& [v, p] : b.inst.predrawn.gamma)
            if (!(p == w)) consider(distance_sq(w, p));
        for (const Edge& e : b.inst.predrawn.graph.edges()) {
            const Point& ea = b.inst.predrawn.gamma.at(e.first);
            const Point& eb = b.inst.predrawn.gamma.at(e.second);
            if (ea == w || eb == w) continue;
            consider(point_segment_distance_sq(w, ea, eb));
        }
        for (const Point& disk_center : {m_t, m_v}) {
            Rational d = sqrt_lower(distance_sq(w, disk_center)) - eps;
            consider(d * d);
        }
        for (const Point& other : fence_centers) {
            if (other == w) continue;
            for (const Point& disk_center : {m_t, m_v}) {
                std::vector<Point> hull = cone_hull(other, disk_center);
                Rational d_sq = point_hull_distance_sq(hull, w);
                consider(d_sq);
            }
        }
        return sqrt_lower(bound_sq) / 2;
    };

    // Allowed-color fences. Around anchors: everything but red. Around a
    // variable x: complement of {x, not-x}. Around a clause: complement of
    // the negated satisfied literals.
    std::vector<int> all_but_red;
    for (int c = 2; c <= layers; ++c) all_but_red.push_back(c);
    for (const Point& anchor : top_anchors)
        b.add_color_fences(anchor, fence_radius(anchor), all_but_red);
    for (const Point& anchor : right_anchors)
        b.add_color_fences(anchor, fence_radius(anchor), all_but_red);

    VertexId t = b.add_missing_vertex();
    VertexId v = b.add_missing_vertex();

    for (int i = 0; i < n; ++i) {
        std::set<int> allowed{literal_color(i + 1), literal_color(-(i + 1))};
        std::vector<int> fence;
        for (int c = 1; c <= layers; ++c)
            if (!allowed.count(c)) fence.push_back(c);
        b.add_color_fences(var_points[i], fence_radius(var_points[i]), fence);
        b.add_missing_edge(t, var_ids[i]);
        out.allowed_colors[make_edge(t, var_ids[i])] = allowed;
    }
    for (int j = 0; j < m; ++j) {
        std::set<int> allowed;
        for (int lit : cnf.clauses[j]) allowed.insert(literal_color(-lit));
        std::vector<int> fence;
        for (int c = 1; c <= layers; ++c)
            if (!allowed.count(c)) fence.push_back(c);
        b.add_color_fences(clause_points[j], fence_radius(clause_points[j]),
                           fence);
        b.add_missing_edge(v, clause_ids[j]);
        out.allowed_colors[make_edge(v, clause_ids[j])] = allowed;
    }
    for (VertexId a : top_anchor_ids) b.add_missing_edge(t, a);
    for (VertexId a : right_anchor_ids) b.add_missing_edge(v, a);

    b.inst.predrawn.layers = layers;
    check_instance(b.inst);

    out.instance = b.inst;
    out.gadgets = {top_gadget, right_gadget};
    out.missing = {t, v};

    auto assignment = cnf.satisfying_assignment();
    if (assignment) {
        out.expected = Verdict::Sat;
        WitnessRecipe recipe;
        recipe.positions[t] = m_t;
        recipe.positions[v] = m_v;
        for (VertexId a : top_anchor_ids) recipe.colors[make_edge(t, a)] = 1;
        for (VertexId a : right_anchor_ids) recipe.colors[make_edge(v, a)] = 1;
        for (int i = 0; i < n; ++i)
            recipe.colors[make_edge(t, var_ids[i])] =
                literal_color((*assignment)[i] ? (i + 1) : -(i + 1));
        for (int j = 0; j < m; ++j) {
            int satisfied = 0;
            for (int lit : cnf.clauses[j]) {
                int var = std::abs(lit);
                bool value = (*assignment)[var - 1];
                if ((lit > 0) == value) {
                    satisfied = lit;
                    break;
                }
            }
            if (satisfied == 0)
                throw ParameterOutOfRangeError("assignment check failed");
            recipe.colors[make_edge(v, clause_ids[j])] =
                literal_color(-satisfied);
        }
        LayeredDrawing full = b.inst.predrawn;
        full.graph = b.inst.graph;
        for (const auto& [vert, p] : recipe.positions) full.gamma[vert] = p;
        for (const auto& [e, c] : recipe.colors) full.chi[e] = c;
        if (!validate(full).empty())
            throw DegenerateScalingError(
                "constructed witness fails validation");
        out.witness = recipe;
        out.certified = true;
    } else {
        out.expected = Verdict::Unsat;
        out.certified = false;
    }
    return out;
}

// ---------------------------------------------------------------------
// Gadget lemma verification
// ---------------------------------------------------------------------

GadgetLemmaReport verify_gadget_lemmas(const HardnessInstance& inst,
                                       int samples, uint64_t seed) {
    GadgetLemmaReport report;
    const auto& predrawn = inst.instance.predrawn;

    // Red segments of the whole predrawn part.
    std::vector<std::pair<Point, Point>> red;
    for (const Edge& e : predrawn.graph.edges())
        if (predrawn.chi.at(e) == 1)
            red.emplace_back(predrawn.gamma.at(e.first),
                             predrawn.gamma.at(e.second));

    auto crosses_red = [&](const Point& from, const Point& to) {
        for (const auto& [a, bpt] : red) {
            try {
                if (segments_cross(from, to, a, bpt)) return true;
            } catch (const CollinearOverlapError&) {
                return true;
            }
        }
        return false;
    };

    // (a) Region corners inside the middle disks; disks pairwise disjoint.
    report.disks_contain_regions = true;
    for (const ChoiceGadget& g : inst.gadgets) {
        for (int j = 0; j < g.choices; ++j) {
            std::vector<Point> corners = region_corners(g.regions[j]);
            if (corners.size() < 3) {
                report.failures.push_back("region has no corners");
                report.disks_contain_regions = false;
                continue;
            }
            for (const Point& c : corners) {
                if (distance_sq(c, g.middles[j]) > g.epsilon * g.epsilon) {
                    report.disks_contain_regions = false;
                    report.failures.push_back(
                        "region corner escapes its disk");
                }
            }
        }
    }
    report.disks_disjoint = true;
    std::vector<std::pair<Point, Rational>> disks;
    for (const ChoiceGadget& g : inst.gadgets)
        for (const Point& mid : g.middles) disks.emplace_back(mid, g.epsilon);
    for (size_t i = 0; i < disks.size(); ++i)
        for (size_t j = i + 1; j < disks.size(); ++j) {
            Rational reach = disks[i].second + disks[j].second;
            if (distance_sq(disks[i].first, disks[j].first) <= reach * reach) {
                report.disks_disjoint = false;
                report.failures.push_back("middle disks intersect");
            }
        }

    // (c) Middle points see all three anchors without red crossings.
    report.middles_unblocked = true;
    for (const ChoiceGadget& g : inst.gadgets) {
        for (const Point& mid : g.middles) {
            for (const Point& anchor :
                 {g.anchor_left, g.anchor_down, g.anchor_right}) {
                if (crosses_red(mid, anchor)) {
                    report.middles_unblocked = false;
                    report.failures.push_back(
                        "anchor segment from a middle point crosses red");
                }
            }
        }
    }

    // (b) Sampled points outside every region have a blocked anchor view.
    std::mt19937_64 rng(seed);
    for (const ChoiceGadget& g : inst.gadgets) {
        int done = 0;
        int guard = 0;
        while (done < samples && ++guard < samples * 200 + 1000) {
            // Sample inside the gadget's bounding box, local coordinates.
            std::uniform_int_distribution<long long> num(-5000, 5000);
            Rational lx = g.scale * Rational(num(rng), 1000);
            Rational ly = g.scale * Rational(num(rng), 2000);
            Point p = g.frame.apply(Point{lx, ly});
            bool in_region = false;
            for (const GadgetRegion& r : g.regions)
                if (r.contains(p)) in_region = true;
            if (in_region) continue;
            bool coincides = false;
            for (const auto& [vv, q] : predrawn.gamma)
                if (q == p) coincides = true;
            if (coincides || p == g.anchor_left || p == g.anchor_down ||
                p == g.anchor_right)
                continue;
            bool blocked = crosses_red(p, g.anchor_left) ||
                           crosses_red(p, g.anchor_down) ||
                           crosses_red(p, g.anchor_right);
            ++report.outside_samples_checked;
            if (blocked)
                ++report.outside_samples_blocked;
            else
                report.failures.push_back(
                    "outside sample sees all anchors unblocked");
            ++done;
        }
    }
    return report;
}

}  // namespace gthick
