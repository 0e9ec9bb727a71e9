#include "gthick/drawing.hpp"

#include <algorithm>
#include <random>

#include "gthick/errors.hpp"

namespace gthick {

void check_drawing_invariants(const LayeredDrawing& d) {
    if (d.layers < 0)
        throw ParameterOutOfRangeError("layer count must be nonnegative");
    for (VertexId v : d.graph.vertices())
        if (!d.gamma.count(v))
            throw ParameterOutOfRangeError("vertex " + std::to_string(v) +
                                           " has no position");
    for (const Edge& e : d.graph.edges()) {
        auto it = d.chi.find(e);
        if (it == d.chi.end())
            throw ParameterOutOfRangeError("edge (" +
                                           std::to_string(e.first) + "," +
                                           std::to_string(e.second) +
                                           ") has no color");
        if (it->second < 1 || it->second > d.layers)
            throw ParameterOutOfRangeError("edge color out of range [1.." +
                                           std::to_string(d.layers) + "]");
    }
    for (auto i = d.gamma.begin(); i != d.gamma.end(); ++i) {
        if (!d.graph.has_vertex(i->first))
            throw ParameterOutOfRangeError("position for unknown vertex " +
                                           std::to_string(i->first));
        auto j = i;
        for (++j; j != d.gamma.end(); ++j)
            if (i->second == j->second)
                throw ParameterOutOfRangeError(
                    "vertices " + std::to_string(i->first) + " and " +
                    std::to_string(j->first) + " share a position");
    }
}

CrossingReport validate(const LayeredDrawing& d) {
    check_drawing_invariants(d);

    // An edge through a non-endpoint vertex makes the cell machinery
    // downstream meaningless, so it is an error even across colors.
    for (const Edge& e : d.graph.edges()) {
        const Point& a = d.gamma.at(e.first);
        const Point& b = d.gamma.at(e.second);
        for (const auto& [v, p] : d.gamma) {
            if (v == e.first || v == e.second) continue;
            if (strictly_inside_segment(p, a, b))
                throw DegenerateGeometryError(
                    "edge (" + std::to_string(e.first) + "," +
                    std::to_string(e.second) + ") passes through vertex " +
                    std::to_string(v));
        }
    }

    CrossingReport report;
    const auto& edges = d.graph.edges();
    for (auto i = edges.begin(); i != edges.end(); ++i) {
        auto j = i;
        for (++j; j != edges.end(); ++j) {
            const Edge& e1 = *i;
            const Edge& e2 = *j;
            if (e1.first == e2.first || e1.first == e2.second ||
                e1.second == e2.first || e1.second == e2.second)
                continue;
            int c1 = d.chi.at(e1);
            int c2 = d.chi.at(e2);
            try {
                if (segments_cross(d.gamma.at(e1.first), d.gamma.at(e1.second),
                                   d.gamma.at(e2.first),
                                   d.gamma.at(e2.second))) {
                    if (c1 == c2) report.crossings.emplace_back(e1, e2, c1);
                }
            } catch (const CollinearOverlapError&) {
                if (c1 == c2)
                    throw DegenerateGeometryError(
                        "same-colored edges overlap collinearly");
                // Cross-colored collinear overlap is tolerated by the model.
            }
        }
    }
    return report;
}

bool drawing_in_general_position(const LayeredDrawing& d) {
    std::vector<Point> points;
    points.reserve(d.gamma.size());
    for (const auto& [v, p] : d.gamma) points.push_back(p);
    return in_general_position(points);
}

Rational clearance_radius_sq(const LayeredDrawing& d, VertexId v) {
    const Point& p = d.gamma.at(v);
    std::optional<Rational> min_sq;
    auto consider = [&](const Rational& value) {
        if (!min_sq || value < *min_sq) min_sq = value;
    };
    for (const auto& [u, q] : d.gamma)
        if (u != v) consider(distance_sq(p, q));
    for (const Edge& e : d.graph.edges()) {
        if (e.first == v || e.second == v) continue;
        consider(point_segment_distance_sq(p, d.gamma.at(e.first),
                                           d.gamma.at(e.second)));
    }
    if (!min_sq) return Rational(1);  // lone vertex: any radius works
    return *min_sq / 4;
}

namespace {

// Vertices of d that participate in some collinear triple.
std::optional<VertexId> worst_collinear_vertex(const LayeredDrawing& d) {
    std::vector<std::pair<VertexId, Point>> pts(d.gamma.begin(),
                                                d.gamma.end());
    std::optional<VertexId> worst;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            for (size_t k = j + 1; k < pts.size(); ++k)
                if (orient(pts[i].second, pts[j].second, pts[k].second) == 0) {
                    VertexId top = std::max(
                        {pts[i].first, pts[j].first, pts[k].first});
                    if (!worst || top > *worst) worst = top;
                }
    return worst;
}

bool vertex_in_collinear_triple(const LayeredDrawing& d, VertexId v) {
    std::vector<Point> others;
    for (const auto& [u, p] : d.gamma)
        if (u != v) others.push_back(p);
    const Point& pv = d.gamma.at(v);
    for (size_t i = 0; i < others.size(); ++i)
        for (size_t j = i + 1; j < others.size(); ++j)
            if (orient(others[i], others[j], pv) == 0) return true;
    return false;
}

}  // namespace

LayeredDrawing perturb_to_general_position(const LayeredDrawing& d,
                                           uint64_t seed) {
    if (!validate(d).empty())
        throw ParameterOutOfRangeError(
            "perturbation requires a crossing-free drawing");
    LayeredDrawing out = d;
    if (drawing_in_general_position(out)) return out;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-8, 8);

    int moves = 0;
    while (auto v = worst_collinear_vertex(out)) {
        if (++moves > 1024)
            throw ParameterOutOfRangeError("perturbation failed to converge");
        Rational r_sq = clearance_radius_sq(out, *v);
        Point original = out.gamma.at(*v);
        for (int attempt = 0;; ++attempt) {
            if (attempt > 4096)
                throw ParameterOutOfRangeError(
                    "perturbation failed to converge");
            int dx = coord(rng);
            int dy = coord(rng);
            if (dx == 0 && dy == 0) continue;
            Rational dir_sq = Rational(dx) * dx + Rational(dy) * dy;
            Rational t = pow2_step_below(r_sq / (4 * dir_sq)) /
                         (Integer(1) << std::min(attempt, 40));
            if (t == 0) continue;
            Point candidate{original.x + t * dx, original.y + t * dy};
            out.gamma[*v] = candidate;
            bool duplicate = false;
            for (const auto& [u, p] : out.gamma)
                if (u != *v && p == candidate) duplicate = true;
            if (duplicate || vertex_in_collinear_triple(out, *v)) {
                out.gamma[*v] = original;
                continue;
            }
            try {
                if (validate(out).empty()) break;
            } catch (const DegenerateGeometryError&) {
            }
            out.gamma[*v] = original;
        }
    }
    return out;
}

namespace {

// Exact graph coloring on the crossing conflict graph, DSATUR-ordered
// backtracking with no cutoff other than the color bound.
struct ConflictColoring {
    const std::vector<std::vector<int>>& adj;
    int max_colors;
    std::vector<int> color;  // 0 = uncolored

    bool feasible(int node, int c) const {
        for (int nb : adj[node])
            if (color[nb] == c) return false;
        return true;
    }

    int pick_next() const {
        int best = -1;
        size_t best_sat = 0;
        size_t best_deg = 0;
        for (size_t i = 0; i < adj.size(); ++i) {
            if (color[i] != 0) continue;
            std::set<int> sat;
            for (int nb : adj[i])
                if (color[nb] != 0) sat.insert(color[nb]);
            size_t deg = adj[i].size();
            if (best < 0 || sat.size() > best_sat ||
                (sat.size() == best_sat && deg > best_deg)) {
                best = static_cast<int>(i);
                best_sat = sat.size();
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve(int colored, int used) {
        if (colored == static_cast<int>(adj.size())) return true;
        int node = pick_next();
        int limit = std::min(max_colors, used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (!feasible(node, c)) continue;
            color[node] = c;
            if (solve(colored + 1, std::max(used, c))) return true;
            color[node] = 0;
        }
        return false;
    }
};

std::vector<std::vector<int>> build_conflict_graph(
    const Graph& g, const std::map<VertexId, Point>& gamma,
    std::vector<Edge>& edge_list) {
    edge_list.assign(g.edges().begin(), g.edges().end());
    std::vector<std::vector<int>> adj(edge_list.size());
    for (size_t i = 0; i < edge_list.size(); ++i) {
        for (size_t j = i + 1; j < edge_list.size(); ++j) {
            const Edge& e1 = edge_list[i];
            const Edge& e2 = edge_list[j];
            if (e1.first == e2.first || e1.first == e2.second ||
                e1.second == e2.first || e1.second == e2.second)
                continue;
            bool crossing;
            try {
                crossing = segments_cross(gamma.at(e1.first),
                                          gamma.at(e1.second),
                                          gamma.at(e2.first),
                                          gamma.at(e2.second));
            } catch (const CollinearOverlapError&) {
                throw DegenerateGeometryError(
                    "collinear edge overlap in fixed drawing");
            }
            if (crossing) {
                adj[i].push_back(static_cast<int>(j));
                adj[j].push_back(static_cast<int>(i));
            }
        }
    }
    return adj;
}

}  // namespace

std::optional<std::map<Edge, int>> color_fixed_drawing(
    const Graph& g, const std::map<VertexId, Point>& gamma, int layers,
    size_t edge_budget) {
    if (g.edge_count() > edge_budget)
        throw TooLargeError("conflict graph exceeds the configured bound of " +
                            std::to_string(edge_budget) + " edges");
    std::vector<Edge> edge_list;
    auto adj = build_conflict_graph(g, gamma, edge_list);
    if (edge_list.empty()) return std::map<Edge, int>{};
    if (layers < 1) return std::nullopt;

    ConflictColoring search{adj, layers, std::vector<int>(adj.size(), 0)};
    if (!search.solve(0, 0)) return std::nullopt;
    std::map<Edge, int> chi;
    for (size_t i = 0; i < edge_list.size(); ++i)
        chi[edge_list[i]] = search.color[i];
    return chi;
}

std::pair<int, std::map<Edge, int>> min_layers_fixed_drawing(
    const Graph& g, const std::map<VertexId, Point>& gamma,
    size_t edge_budget) {
    if (g.edge_count() == 0) return {0, {}};
    for (int k = 1;; ++k) {
        auto chi = color_fixed_drawing(g, gamma, k, edge_budget);
        if (chi) return {k, std::move(*chi)};
    }
}

int gt_upper_bound_from_vc(int k) {
    if (k < 0) throw ParameterOutOfRangeError("vertex cover size negative");
    return (k + 1) / 2;
}

}  // namespace gthick
