#pragma once

#include <random>
#include <vector>

#include "gthick/drawing.hpp"
#include "gthick/graph.hpp"

namespace gthick::testing {

inline Point pt(long long x, long long y) {
    return Point{Rational(x), Rational(y)};
}

inline Point pt(const Rational& x, const Rational& y) { return Point{x, y}; }

inline Rational random_rational(std::mt19937_64& rng, int lo, int hi,
                                int max_den = 7) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

// Random positions in general position inside [lo, hi]^2.
inline std::map<VertexId, Point> random_positions(const Graph& g,
                                                  std::mt19937_64& rng,
                                                  int lo = 0, int hi = 40) {
    for (int tries = 0; tries < 10000; ++tries) {
        std::map<VertexId, Point> gamma;
        std::vector<Point> pts;
        for (VertexId v : g.vertices()) {
            Point p = pt(random_rational(rng, lo, hi),
                         random_rational(rng, lo, hi));
            gamma[v] = p;
            pts.push_back(p);
        }
        try {
            if (in_general_position(pts)) return gamma;
        } catch (const Error&) {
        }
    }
    throw std::runtime_error("random_positions failed to converge");
}

inline Graph random_graph(std::mt19937_64& rng, int max_vertices,
                          double edge_prob) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int n = nv(rng);
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < edge_prob) g.add_edge(i, j);
    return g;
}

// A drawing with random general-position points and a coloring produced by
// the exact conflict-graph colorer with exactly `layers` available layers;
// returns nothing if the placement needs more layers.
inline std::optional<LayeredDrawing> random_valid_drawing(
    const Graph& g, std::mt19937_64& rng, int layers) {
    auto gamma = random_positions(g, rng);
    auto chi = color_fixed_drawing(g, gamma, layers);
    if (!chi) return std::nullopt;
    return LayeredDrawing{g, gamma, *chi, layers};
}

}  // namespace gthick::testing
