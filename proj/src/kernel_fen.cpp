#include "gthick/kernel_fen.hpp"

#include <algorithm>
#include <map>

#include "gthick/errors.hpp"

namespace gthick {

std::pair<Graph, std::vector<std::pair<VertexId, std::optional<VertexId>>>>
prune_degree_le1(const Graph& g) {
    Graph pruned = g;
    std::vector<std::pair<VertexId, std::optional<VertexId>>> removed;
    while (true) {
        std::optional<VertexId> victim;
        for (VertexId v : pruned.vertices()) {
            if (pruned.degree(v) <= 1) {
                victim = v;
                break;
            }
        }
        if (!victim) break;
        auto nbrs = pruned.neighbors(*victim);
        removed.emplace_back(*victim, nbrs.empty()
                                          ? std::nullopt
                                          : std::optional<VertexId>(nbrs[0]));
        pruned.remove_vertex(*victim);
    }
    return {pruned, removed};
}

FenDecomposition decompose(const Graph& g) {
    for (VertexId v : g.vertices())
        if (g.degree(v) < 2)
            throw ParameterOutOfRangeError(
                "decomposition requires minimum degree 2");

    FenDecomposition out;

    // Kruskal over the sorted edge set; non-tree edges form F.
    std::map<VertexId, VertexId> parent;
    for (VertexId v : g.vertices()) parent[v] = v;
    auto find = [&](VertexId v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    Graph forest;
    for (VertexId v : g.vertices()) forest.add_vertex(v);
    for (const Edge& e : g.edges()) {
        VertexId a = find(e.first), b = find(e.second);
        if (a == b) {
            out.feedback.push_back(e);
        } else {
            parent[a] = b;
            forest.add_edge(e.first, e.second);
        }
    }

    for (const Edge& e : out.feedback) {
        out.branch.insert(e.first);
        out.branch.insert(e.second);
    }
    for (VertexId v : forest.vertices())
        if (forest.degree(v) >= 3) out.branch.insert(v);

    // Walk from each branch vertex along unvisited tree edges; interior
    // vertices are degree-2 non-branch, so the decomposition is unique.
    std::set<Edge> visited;
    for (VertexId c : out.branch) {
        std::vector<VertexId> nbrs = forest.neighbors(c);
        std::sort(nbrs.begin(), nbrs.end());
        for (VertexId first : nbrs) {
            Edge start = make_edge(c, first);
            if (visited.count(start)) continue;
            std::vector<VertexId> path{c, first};
            visited.insert(start);
            VertexId prev = c, here = first;
            while (!out.branch.count(here)) {
                std::vector<VertexId> next = forest.neighbors(here);
                VertexId step = next[0] == prev ? next[1] : next[0];
                visited.insert(make_edge(here, step));
                path.push_back(step);
                prev = here;
                here = step;
            }
            // Canonical orientation: smaller endpoint first, ties by the
            // lexicographically smaller sequence.
            std::vector<VertexId> reversed(path.rbegin(), path.rend());
            if (reversed < path) path = reversed;
            out.paths.push_back(std::move(path));
        }
    }
    std::sort(out.paths.begin(), out.paths.end(),
              [](const std::vector<VertexId>& a,
                 const std::vector<VertexId>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });

    size_t k = out.feedback.size();
    if (out.branch.size() > 4 * k || out.paths.size() > 4 * k)
        throw ParameterOutOfRangeError(
            "decomposition exceeds its structural bounds");
    return out;
}

std::pair<Graph, FenTrace> kernelize_fen(const Graph& g, int layers) {
    if (layers < 2)
        throw ParameterOutOfRangeError(
            "kernelization requires layers >= 2 (a single layer reduces to "
            "planarity)");

    FenTrace trace;
    auto [pruned, removed] = prune_degree_le1(g);
    trace.pruned = removed;

    FenDecomposition dec = pruned.vertex_count() ? decompose(pruned)
                                                 : FenDecomposition{};
    trace.k = static_cast<int>(dec.feedback.size());
    trace.feedback = dec.feedback;
    trace.branch_vertices = dec.branch;

    Graph kernel;
    for (VertexId v : dec.branch) kernel.add_vertex(v);
    for (const Edge& e : dec.feedback) kernel.add_edge(e.first, e.second);

    const size_t x = dec.paths.size();
    size_t j = 0;
    for (; j < x; ++j) {
        size_t path_edges = dec.paths[j].size() - 1;
        if (path_edges > 2 * (kernel.edge_count() + x)) break;
        for (size_t i = 0; i + 1 < dec.paths[j].size(); ++i)
            kernel.add_edge(dec.paths[j][i], dec.paths[j][i + 1]);
    }
    for (size_t i = j; i < x; ++i)
        trace.removed_paths.push_back(dec.paths[i]);

    // Kernel size bound from the recursive growth of the G_i.
    Integer bound = 10 * Integer(trace.k);
    for (int i = 0; i < trace.k; ++i) bound *= 81;
    if (Integer(kernel.vertex_count()) > bound)
        throw ParameterOutOfRangeError("kernel exceeds its size bound");

    return {kernel, trace};
}

namespace {

struct ChordEvent {
    Rational t;      // parameter along the working chord, in (0,1)
    Edge edge;
    int color;
};

Point chord_point(const Point& a, const Point& b, const Rational& t) {
    return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

// Proper crossing parameter of the open chord a->b with segment c->d, if
// any. Degenerate contact (collinearity, endpoint touching the interior)
// reports failure through the `degenerate` flag.
std::optional<Rational> crossing_parameter(const Point& a, const Point& b,
                                           const Point& c, const Point& d,
                                           bool& degenerate) {
    try {
        if (!segments_cross(a, b, c, d)) {
            // Endpoint contact in the chord's interior still breaks the
            // subdivision scheme.
            if (strictly_inside_segment(c, a, b) ||
                strictly_inside_segment(d, a, b))
                degenerate = true;
            return std::nullopt;
        }
    } catch (const CollinearOverlapError&) {
        degenerate = true;
        return std::nullopt;
    }
    Direction ab = direction_between(a, b);
    Direction cd = direction_between(c, d);
    Rational denom = cross(ab, cd);
    Direction ac = direction_between(a, c);
    Rational t = cross(ac, cd) / denom;
    return t;
}

// The working chord for one path insertion: either the straight segment
// between the endpoint positions, or a two-piece polyline bowed through
// the first internal vertex when the straight chord is degenerate.
struct WorkingChord {
    std::optional<Point> bow;  // first internal vertex, off the chord
    Point from;                // == bow when bowed, else the endpoint
    Point to;
};

bool chord_is_degenerate(const LayeredDrawing& d, VertexId u, VertexId w) {
    const Point& a = d.gamma.at(u);
    const Point& b = d.gamma.at(w);
    if (d.graph.has_edge(u, w)) return true;  // chord coincides with an edge
    for (const auto& [v, p] : d.gamma) {
        if (v == u || v == w) continue;
        if (strictly_inside_segment(p, a, b)) return true;
    }
    for (const Edge& e : d.graph.edges()) {
        const Point& c = d.gamma.at(e.first);
        const Point& dd = d.gamma.at(e.second);
        if (orient(a, b, c) == 0 && orient(a, b, dd) == 0) {
            // Same line: any overlap is degenerate.
            try {
                if (segments_cross(a, b, c, dd)) return true;
            } catch (const CollinearOverlapError&) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace

LayeredDrawing lift_fen(const LayeredDrawing& kernel_drawing,
                        const FenTrace& trace) {
    if (!validate(kernel_drawing).empty())
        throw ParameterOutOfRangeError("lift requires a valid kernel drawing");
    if (!trace.removed_paths.empty() && kernel_drawing.layers < 2)
        throw ParameterOutOfRangeError(
            "path re-insertion requires at least two layers");

    LayeredDrawing d = kernel_drawing;
    const int layers = d.layers;
    const size_t x_total = trace.removed_paths.size();
    const size_t kernel_edges = kernel_drawing.graph.edge_count();

    for (const std::vector<VertexId>& path : trace.removed_paths) {
        const VertexId u = path.front();
        const VertexId w = path.back();
        const size_t internal = path.size() - 2;
        if (!d.graph.has_vertex(u) || !d.graph.has_vertex(w))
            throw LiftFailedError("path endpoints missing from the drawing");

        // Build the working chord, bowing deterministically while the
        // straight chord is degenerate.
        WorkingChord chord{std::nullopt, d.gamma.at(u), d.gamma.at(w)};
        std::vector<ChordEvent> events;
        bool ok = false;
        for (int attempt = 0; attempt < 48 && !ok; ++attempt) {
            events.clear();
            if (attempt > 0 || chord_is_degenerate(d, u, w)) {
                // Bow through a point near u: a small step toward w plus a
                // smaller perpendicular offset, inside u's clearance.
                Direction to_w = direction_between(d.gamma.at(u),
                                                   d.gamma.at(w));
                Rational dir_sq = dot(to_w, to_w);
                Rational base = pow2_step_below(
                    clearance_radius_sq(d, u) / (8 * dir_sq));
                Rational lambda = base / (Integer(1) << (attempt / 4));
                Rational delta = lambda / (2 + attempt % 4);
                if (internal == 0)
                    throw LiftFailedError(
                        "degenerate chord with no internal vertices");
                Point q{d.gamma.at(u).x + lambda * to_w.dx -
                            delta * to_w.dy,
                        d.gamma.at(u).y + lambda * to_w.dy +
                            delta * to_w.dx};
                chord.bow = q;
                chord.from = q;
            }
            bool degenerate = false;
            bool clash = false;
            for (const auto& [v, p] : d.gamma)
                if (chord.bow && p == *chord.bow) clash = true;
            if (!clash && chord.bow) {
                // The bow segment [u, q] and [q, w] must stay clean.
                if (strictly_inside_segment(*chord.bow, d.gamma.at(u),
                                            d.gamma.at(w)))
                    degenerate = true;
                for (const auto& [v, p] : d.gamma) {
                    if (v == u) continue;
                    if (strictly_inside_segment(p, d.gamma.at(u), *chord.bow))
                        degenerate = true;
                    if (v != w &&
                        strictly_inside_segment(p, *chord.bow, d.gamma.at(w)))
                        degenerate = true;
                }
                for (const Edge& e : d.graph.edges()) {
                    if (e.first == u || e.second == u) continue;
                    bool deg2 = false;
                    if (crossing_parameter(d.gamma.at(u), *chord.bow,
                                           d.gamma.at(e.first),
                                           d.gamma.at(e.second), deg2))
                        degenerate = true;  // bow segment must cross nothing
                    if (deg2) degenerate = true;
                }
            }
            if (clash || degenerate) continue;

            for (const Edge& e : d.graph.edges()) {
                if (e.first == w || e.second == w) continue;
                if (!chord.bow && (e.first == u || e.second == u)) continue;
                bool deg = false;
                auto t = crossing_parameter(chord.from, chord.to,
                                            d.gamma.at(e.first),
                                            d.gamma.at(e.second), deg);
                if (deg) {
                    degenerate = true;
                    break;
                }
                if (t) events.push_back({*t, e, d.chi.at(e)});
            }
            if (degenerate) continue;
            std::sort(events.begin(), events.end(),
                      [](const ChordEvent& a, const ChordEvent& b) {
                          return a.t < b.t;
                      });
            // Coincident events collapse the isolation windows.
            bool collision = false;
            for (size_t i = 0; i + 1 < events.size(); ++i)
                if (events[i].t == events[i + 1].t) collision = true;
            if (!collision) ok = true;
        }
        if (!ok)
            throw LiftFailedError("no usable chord found for a removed path");

        // Resolve monochromatic crossings: two subdivision vertices around
        // each, middle subsegment recolored to the smallest color that
        // differs from the crossed edge.
        std::vector<ChordEvent> conflicts;
        for (const ChordEvent& e : events)
            if (e.color == 1) conflicts.push_back(e);
        size_t needed = (chord.bow ? 1 : 0) + 2 * conflicts.size();
        if (needed > internal)
            throw LiftFailedError(
                "removed path is too short for its crossing resolution");
        if (conflicts.size() > kernel_edges + x_total + x_total)
            throw LiftFailedError(
                "monochromatic crossings exceed the construction bound");

        // Subdivision points along the working chord, in (0,1) parameters.
        // Each conflict gets an isolation window spanning thirds of the
        // gaps to its neighboring events, so the windows of consecutive
        // conflicts never touch and each middle subsegment crosses exactly
        // its own edge.
        std::vector<std::pair<Rational, int>> points;  // (t, color after t)
        for (size_t i = 0; i < events.size(); ++i) {
            if (events[i].color != 1) continue;
            Rational prev = i == 0 ? Rational(0) : events[i - 1].t;
            Rational next =
                i + 1 == events.size() ? Rational(1) : events[i + 1].t;
            Rational before = prev + 2 * (events[i].t - prev) / 3;
            Rational after = events[i].t + (next - events[i].t) / 3;
            int recolor = 1;
            while (recolor == events[i].color) ++recolor;
            if (recolor > layers)
                throw LiftFailedError("no spare color for a recolored piece");
            points.emplace_back(before, recolor);
            points.emplace_back(after, 1);
        }

        // Distribute spare internal vertices along the crossing-free
        // leading subsegment, inheriting color 1.
        size_t spare = internal - needed;
        if (spare > 0) {
            Rational lead = 1;
            if (!events.empty()) lead = std::min(lead, events.front().t);
            if (!points.empty()) lead = std::min(lead, points.front().first);
            for (size_t s = 1; s <= spare; ++s)
                points.emplace_back(lead * Rational(static_cast<int>(s),
                                                    static_cast<int>(spare) +
                                                        1),
                                    1);
        }
        std::sort(points.begin(), points.end());
        for (size_t i = 0; i + 1 < points.size(); ++i)
            if (points[i].first == points[i + 1].first)
                throw LiftFailedError("subdivision points collide");

        // Materialize the path: endpoint, optional bow vertex, subdivision
        // vertices in chord order, endpoint.
        std::vector<VertexId> ids(path.begin() + 1, path.end() - 1);
        std::vector<Point> positions;
        if (chord.bow) positions.push_back(*chord.bow);
        for (const auto& [t, color] : points)
            positions.push_back(chord_point(chord.from, chord.to, t));
        if (positions.size() != ids.size())
            throw LiftFailedError("internal vertex count mismatch");

        // Segment colors: 1 from the start (and across the bow), switching
        // at each subdivision point to its tag; the tail returns to 1.
        std::vector<int> colors;
        if (chord.bow) colors.push_back(1);  // [u, bow]
        colors.push_back(1);                 // [start, first point or w]
        for (const auto& [t, color] : points) colors.push_back(color);

        for (VertexId v : ids)
            if (d.graph.has_vertex(v))
                throw LiftFailedError("internal vertex id already present");

        std::vector<VertexId> chain;
        chain.push_back(u);
        for (VertexId v : ids) chain.push_back(v);
        chain.push_back(w);
        for (size_t i = 0; i < ids.size(); ++i) {
            d.graph.add_vertex(ids[i]);
            d.gamma[ids[i]] = positions[i];
        }
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            d.graph.add_edge(chain[i], chain[i + 1]);
            d.chi[make_edge(chain[i], chain[i + 1])] = colors[i];
        }
        if (!validate(d).empty())
            throw LiftFailedError("path re-insertion produced a crossing");
    }

    // Re-attach pruned vertices in reverse: short pendant segments inside
    // the neighbor's clearance radius, color 1.
    for (auto it = trace.pruned.rbegin(); it != trace.pruned.rend(); ++it) {
        const auto& [v, neighbor] = *it;
        if (d.graph.has_vertex(v))
            throw LiftFailedError("pruned vertex already present");
        if (!neighbor) {
            // Isolated at prune time: park it past the bounding box.
            Rational max_x = 0, max_y = 0;
            for (const auto& [id, p] : d.gamma) {
                max_x = std::max(max_x, p.x);
                max_y = std::max(max_y, p.y);
            }
            d.graph.add_vertex(v);
            d.gamma[v] = Point{max_x + 1, max_y + 1};
            continue;
        }
        if (!d.graph.has_vertex(*neighbor))
            throw LiftFailedError("prune neighbor missing from the drawing");
        const Point& base = d.gamma.at(*neighbor);
        Rational r_sq = clearance_radius_sq(d, *neighbor);
        bool placed = false;
        std::vector<Direction> dirs{{1, 0}, {0, 1},  {-1, 0}, {0, -1},
                                    {1, 1}, {-1, 1}, {1, -1}, {-1, -1},
                                    {2, 1}, {1, 2},  {-2, 1}, {-1, 2}};
        for (const Direction& dir : dirs) {
            Rational dir_sq = dot(dir, dir);
            Rational t = pow2_step_below(r_sq / (4 * dir_sq));
            for (int attempt = 0; attempt < 8 && !placed; ++attempt, t /= 2) {
                Point p{base.x + t * dir.dx, base.y + t * dir.dy};
                bool clash = false;
                for (const auto& [id, q] : d.gamma)
                    if (q == p) clash = true;
                if (clash) continue;
                LayeredDrawing trial = d;
                trial.graph.add_vertex(v);
                trial.gamma[v] = p;
                trial.graph.add_edge(v, *neighbor);
                trial.chi[make_edge(v, *neighbor)] = 1;
                try {
                    if (validate(trial).empty()) {
                        d = std::move(trial);
                        placed = true;
                    }
                } catch (const DegenerateGeometryError&) {
                }
            }
            if (placed) break;
        }
        if (!placed)
            throw LiftFailedError("could not re-attach pruned vertex " +
                                  std::to_string(v));
    }

    if (!validate(d).empty())
        throw LiftFailedError("lifted drawing fails validation");
    return d;
}

}  // namespace gthick
