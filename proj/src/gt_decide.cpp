#include <algorithm>
#include <random>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <boost/graph/make_maximal_planar.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>

#include "gthick/errors.hpp"
#include "gthick/etr.hpp"
#include "gthick/gte.hpp"

namespace gthick {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Graph& g, std::vector<VertexId>& index_to_id) {
    index_to_id.assign(g.vertices().begin(), g.vertices().end());
    std::map<VertexId, int> id_to_index;
    for (size_t i = 0; i < index_to_id.size(); ++i)
        id_to_index[index_to_id[i]] = static_cast<int>(i);
    BoostGraph bg(index_to_id.size());
    for (const Edge& e : g.edges())
        boost::add_edge(id_to_index[e.first], id_to_index[e.second], bg);
    return bg;
}

void reindex_edges(BoostGraph& bg) {
    auto edge_index = boost::get(boost::edge_index, bg);
    int next = 0;
    for (auto [ei, eend] = boost::edges(bg); ei != eend; ++ei)
        boost::put(edge_index, *ei, next++);
}

}  // namespace

bool graph_is_planar(const Graph& g) {
    std::vector<VertexId> ids;
    BoostGraph bg = to_boost(g, ids);
    return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<std::map<VertexId, Point>> planar_straight_line_positions(
    const Graph& g) {
    if (!graph_is_planar(g)) return std::nullopt;

    std::map<VertexId, Point> out;
    if (g.vertex_count() <= 2) {
        int i = 0;
        for (VertexId v : g.vertices()) out[v] = Point{Rational(i++), 0};
        return out;
    }

    std::vector<VertexId> ids;
    BoostGraph bg = to_boost(g, ids);
    reindex_edges(bg);

    using Embedding =
        std::vector<std::vector<boost::graph_traits<BoostGraph>::edge_descriptor>>;
    auto embed = [&](BoostGraph& graph, Embedding& storage) {
        storage.assign(boost::num_vertices(graph), {});
        auto map = boost::make_iterator_property_map(
            storage.begin(), boost::get(boost::vertex_index, graph));
        bool planar = boost::boyer_myrvold_planarity_test(
            boost::boyer_myrvold_params::graph = graph,
            boost::boyer_myrvold_params::embedding = map);
        return std::make_pair(planar, map);
    };

    Embedding storage;
    boost::make_connected(bg);
    reindex_edges(bg);
    {
        auto [planar, map] = embed(bg, storage);
        if (!planar) return std::nullopt;
        boost::make_biconnected_planar(bg, map);
    }
    reindex_edges(bg);
    {
        auto [planar, map] = embed(bg, storage);
        if (!planar) return std::nullopt;
        boost::make_maximal_planar(bg, map);
    }
    reindex_edges(bg);

    auto [planar, map] = embed(bg, storage);
    if (!planar) return std::nullopt;

    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> ordering;
    boost::planar_canonical_ordering(bg, map, std::back_inserter(ordering));

    struct Coord {
        size_t x = 0, y = 0;
    };
    std::vector<Coord> coords(boost::num_vertices(bg));
    auto drawing = boost::make_iterator_property_map(
        coords.begin(), boost::get(boost::vertex_index, bg));
    boost::chrobak_payne_straight_line_drawing(bg, map, ordering.begin(),
                                               ordering.end(), drawing);

    for (size_t i = 0; i < ids.size(); ++i)
        out[ids[i]] = Point{Rational(static_cast<long long>(coords[i].x)),
                            Rational(static_cast<long long>(coords[i].y))};
    return out;
}

namespace {

LayeredDrawing trivial_drawing(const Graph& g, int layers) {
    LayeredDrawing d;
    d.graph = g;
    d.layers = std::max(layers, 1);
    long long i = 0;
    for (VertexId v : g.vertices()) {
        d.gamma[v] = Point{Rational(i), Rational(i) * i};  // parabola
        ++i;
    }
    return d;
}

std::optional<LayeredDrawing> try_placement(
    const Graph& g, const std::map<VertexId, Point>& gamma, int layers,
    size_t coloring_budget) {
    std::vector<Point> pts;
    for (const auto& [v, p] : gamma) pts.push_back(p);
    try {
        if (!in_general_position(pts)) return std::nullopt;
    } catch (const DuplicatePointError&) {
        return std::nullopt;
    }
    std::optional<std::map<Edge, int>> chi;
    try {
        chi = color_fixed_drawing(g, gamma, layers, coloring_budget);
    } catch (const TooLargeError&) {
        return std::nullopt;
    }
    if (!chi) return std::nullopt;
    LayeredDrawing d{g, gamma, *chi, layers};
    if (!validate(d).empty()) return std::nullopt;
    return d;
}

}  // namespace

DecisionResult decide_gt_small(const Graph& g, int layers,
                               const RunConfig& config, uint64_t seed) {
    const size_t m = g.edge_count();
    if (m == 0) return {Verdict::Sat, trivial_drawing(g, layers)};
    if (layers < 1) return {Verdict::Unsat, std::nullopt};

    if (static_cast<size_t>(layers) >= m) {
        // Give every edge its own layer in any general-position placement.
        LayeredDrawing d = trivial_drawing(g, layers);
        int c = 1;
        for (const Edge& e : g.edges()) d.chi[e] = c++;
        return {Verdict::Sat, d};
    }

    if (layers == 1) {
        auto positions = planar_straight_line_positions(g);
        if (!positions) return {Verdict::Unsat, std::nullopt};
        LayeredDrawing d{g, *positions, {}, 1};
        for (const Edge& e : g.edges()) d.chi[e] = 1;
        if (validate(d).empty()) return {Verdict::Sat, d};
        // The grid embedding should always validate; fall through to the
        // searches if it somehow does not.
    }

    std::mt19937_64 rng(seed ^ 0xc6a4a7935bd1e995ull);
    const long long n = static_cast<long long>(g.vertex_count());
    const long long box = std::max<long long>(4 * n * n, 16);
    std::uniform_int_distribution<long long> coord(0, box);

    for (int round = 0; round < config.placement_tries; ++round) {
        std::map<VertexId, Point> gamma;
        for (VertexId v : g.vertices())
            gamma[v] = Point{Rational(coord(rng)), Rational(coord(rng))};
        if (auto d = try_placement(g, gamma, layers, config.coloring_budget))
            return {Verdict::Sat, *d};
    }

    // Perturbed convex positions: parabola points plus a small jitter.
    std::uniform_int_distribution<long long> jitter(-2 * n, 2 * n);
    for (int round = 0; round < config.placement_tries / 4 + 4; ++round) {
        std::map<VertexId, Point> gamma;
        long long i = 0;
        for (VertexId v : g.vertices()) {
            gamma[v] = Point{Rational(4 * n * i) + Rational(jitter(rng)),
                             Rational(4 * i * i) + Rational(jitter(rng))};
            ++i;
        }
        if (auto d = try_placement(g, gamma, layers, config.coloring_budget))
            return {Verdict::Sat, *d};
    }

    if (!config.solver_command.empty()) {
        Formula formula = build_formula(g, layers);
        SolverOutcome outcome =
            solve_external(emit_smtlib(formula), config);
        if (outcome.verdict == SolverVerdict::Unsat)
            return {Verdict::Unsat, std::nullopt};
        if (outcome.verdict == SolverVerdict::Sat) {
            if (auto witness = drawing_from_model(formula, g, layers,
                                                  outcome.model))
                return {Verdict::Sat, *witness};
        }
    }
    return {Verdict::Unknown, std::nullopt};
}

}  // namespace gthick
