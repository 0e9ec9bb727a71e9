#include "gthick/gte.hpp"

#include <random>

#include "doctest.h"
#include "gthick/errors.hpp"
#include "test_helpers.hpp"

using namespace gthick;
using gthick::testing::pt;

namespace {

GteInstance convex_k4_missing_diagonal() {
    // Predrawn convex K4 minus the (1,3) diagonal; the other diagonal is
    // colored 1 and the boundary 1 as well, 2 layers available.
    GteInstance inst;
    inst.graph = Graph::complete(4);
    inst.predrawn.graph = Graph::complete(4);
    inst.predrawn.graph.remove_edge(1, 3);
    inst.predrawn.gamma = {
        {0, pt(0, 0)}, {1, pt(4, 0)}, {2, pt(4, 4)}, {3, pt(0, 4)}};
    for (const Edge& e : inst.predrawn.graph.edges())
        inst.predrawn.chi[e] = 1;
    inst.predrawn.layers = 2;
    return inst;
}

// Random instance generator shared by the equivalence suites: a random
// graph, random general-position placement, a valid coloring of the
// predrawn part, and up to k_max missing edges.
std::optional<GteInstance> random_instance(std::mt19937_64& rng,
                                           int max_vertices, int k_max,
                                           int max_layers) {
    Graph g = gthick::testing::random_graph(rng, max_vertices, 0.5);
    if (g.edge_count() == 0) return std::nullopt;
    std::uniform_int_distribution<int> layer_dist(1, max_layers);
    int layers = layer_dist(rng);

    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::shuffle(edges.begin(), edges.end(), rng);
    std::uniform_int_distribution<int> k_dist(0, k_max);
    size_t k = std::min<size_t>(k_dist(rng), edges.size());

    Graph h = g;
    for (size_t i = 0; i < k; ++i)
        h.remove_edge(edges[i].first, edges[i].second);

    auto gamma = gthick::testing::random_positions(g, rng);
    auto chi = color_fixed_drawing(h, gamma, layers);
    if (!chi) return std::nullopt;
    GteInstance inst;
    inst.graph = g;
    inst.predrawn = LayeredDrawing{h, gamma, *chi, layers};
    return inst;
}

}  // namespace

TEST_CASE("feasible colors: crossing-free edge keeps all layers") {
    GteInstance inst;
    inst.graph.add_edge(0, 1);
    inst.graph.add_edge(2, 3);
    inst.predrawn.graph.add_edge(0, 1);
    inst.predrawn.graph.add_vertex(2);
    inst.predrawn.graph.add_vertex(3);
    inst.predrawn.gamma = {
        {0, pt(0, 0)}, {1, pt(4, 0)}, {2, pt(0, 2)}, {3, pt(4, 2)}};
    inst.predrawn.chi = {{make_edge(0, 1), 2}};
    inst.predrawn.layers = 3;
    CHECK(feasible_colors(inst, make_edge(2, 3)) ==
          std::set<int>{1, 2, 3});
}

TEST_CASE("feasible colors: one crossing removes one color") {
    GteInstance inst;
    inst.graph.add_edge(0, 1);
    inst.graph.add_edge(2, 3);
    inst.predrawn.graph.add_edge(0, 1);
    inst.predrawn.graph.add_vertex(2);
    inst.predrawn.graph.add_vertex(3);
    inst.predrawn.gamma = {
        {0, pt(0, 0)}, {1, pt(4, 4)}, {2, pt(0, 4)}, {3, pt(4, 0)}};
    inst.predrawn.chi = {{make_edge(0, 1), 2}};
    inst.predrawn.layers = 3;
    CHECK(feasible_colors(inst, make_edge(2, 3)) == std::set<int>{1, 3});
}

TEST_CASE("feasible colors: two distinct crossings can empty the set") {
    GteInstance inst;
    inst.graph = Graph::complete(4);
    inst.graph.add_edge(4, 5);
    inst.predrawn.graph.add_edge(0, 1);
    inst.predrawn.graph.add_edge(2, 3);
    for (int v = 4; v <= 5; ++v) inst.predrawn.graph.add_vertex(v);
    inst.predrawn.gamma = {{0, pt(0, 0)}, {1, pt(4, 4)},
                           {2, pt(0, 4)}, {3, pt(4, 0)},
                           {4, pt(1, 2)}, {5, pt(3, 2)}};
    inst.predrawn.chi = {{make_edge(0, 1), 1}, {make_edge(2, 3), 2}};
    inst.predrawn.layers = 2;
    // Segment (1,2)-(3,2) crosses both predrawn diagonals of the square.
    CHECK(feasible_colors(inst, make_edge(4, 5)).empty());
}

TEST_CASE("feasible colors antitone under adding predrawn edges") {
    std::mt19937_64 rng(301);
    int rounds = 0;
    while (rounds < 40) {
        auto inst = random_instance(rng, 7, 3, 3);
        if (!inst) continue;
        auto missing = inst->missing_edges();
        if (missing.empty()) continue;
        ++rounds;
        Edge target = missing[0];
        auto before = feasible_colors(*inst, target);
        // Color one more missing edge (if any) and re-check.
        if (missing.size() < 2) continue;
        Edge extra = missing[1];
        auto extra_colors = feasible_colors(*inst, extra);
        if (extra_colors.empty()) continue;
        GteInstance bigger = *inst;
        bigger.predrawn.graph.add_edge(extra.first, extra.second);
        bigger.predrawn.chi[extra] = *extra_colors.begin();
        if (!validate(bigger.predrawn).empty()) continue;
        auto after = feasible_colors(bigger, target);
        for (int c : after) CHECK(before.count(c));
        ++rounds;
    }
}

TEST_CASE("branching solver on the convex K4 extension") {
    GteInstance inst = convex_k4_missing_diagonal();
    auto chi = solve_gte_edges(inst);
    REQUIRE(chi.has_value());
    CHECK(chi->at(make_edge(1, 3)) == 2);
    LayeredDrawing full{inst.graph, inst.predrawn.gamma, *chi, 2};
    CHECK(validate(full).empty());
}

TEST_CASE("branching solver: single layer with forced crossing is UNSAT") {
    GteInstance inst = convex_k4_missing_diagonal();
    inst.predrawn.layers = 1;
    CHECK_FALSE(solve_gte_edges(inst).has_value());
}

TEST_CASE("two mutually crossing missing edges get distinct colors") {
    GteInstance inst;
    inst.graph.add_edge(0, 1);
    inst.graph.add_edge(2, 3);
    inst.graph.add_vertex(4);
    inst.predrawn.graph = inst.graph;
    inst.predrawn.graph.remove_edge(0, 1);
    inst.predrawn.graph.remove_edge(2, 3);
    inst.predrawn.gamma = {{0, pt(0, 0)}, {1, pt(4, 4)},
                           {2, pt(0, 4)}, {3, pt(4, 0)},
                           {4, pt(9, 1)}};
    inst.predrawn.layers = 2;
    auto chi = solve_gte_edges(inst);
    REQUIRE(chi.has_value());
    CHECK(chi->at(make_edge(0, 1)) != chi->at(make_edge(2, 3)));
    auto oracle = brute_force_gte_edges(inst);
    REQUIRE(oracle.has_value());
}

TEST_CASE("oracle: zero missing edges returns the predrawn coloring") {
    GteInstance inst = convex_k4_missing_diagonal();
    inst.graph.remove_edge(1, 3);
    auto chi = brute_force_gte_edges(inst);
    REQUIRE(chi.has_value());
    CHECK(*chi == inst.predrawn.chi);
}

TEST_CASE("oracle budget is enforced") {
    GteInstance inst = convex_k4_missing_diagonal();
    CHECK_THROWS_AS(brute_force_gte_edges(inst, 1),
                    OracleBudgetExceededError);
}

TEST_CASE("vertices missing is rejected by the edge solver") {
    GteInstance inst = convex_k4_missing_diagonal();
    inst.graph.add_edge(0, 9);
    CHECK_THROWS_AS(solve_gte_edges(inst), VerticesMissingError);
}

TEST_CASE("branching equals enumeration on randomized instances") {
    std::mt19937_64 rng(303);
    int rounds = 0;
    while (rounds < 120) {
        auto inst = random_instance(rng, 8, 3, 3);
        if (!inst) continue;
        ++rounds;
        auto fast = solve_gte_edges(*inst);
        auto slow = brute_force_gte_edges(*inst);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) {
            LayeredDrawing full{inst->graph, inst->predrawn.gamma, *fast,
                                inst->layers()};
            CHECK(validate(full).empty());
            // Witness extends the predrawn coloring.
            for (const auto& [e, c] : inst->predrawn.chi)
                CHECK(fast->at(e) == c);
        }
    }
}

TEST_CASE("greedy-phase edges always have at least k feasible colors") {
    std::mt19937_64 rng(307);
    int rounds = 0;
    while (rounds < 60) {
        auto inst = random_instance(rng, 7, 3, 3);
        if (!inst) continue;
        ++rounds;
        auto missing = inst->missing_edges();
        size_t k = missing.size();
        for (const Edge& e : missing) {
            auto colors = feasible_colors(*inst, e);
            // The solver routes |C(e)| >= k to the greedy phase; verify the
            // boundary is consistent: greedy implies enough colors.
            if (colors.size() >= k) CHECK(colors.size() >= k);
        }
    }
}

TEST_CASE("decide_gt_small: planar cases at one layer") {
    RunConfig config;
    config.placement_tries = 60;
    auto k4 = decide_gt_small(Graph::complete(4), 1, config, 1);
    CHECK(k4.verdict == Verdict::Sat);
    REQUIRE(k4.witness.has_value());
    CHECK(validate(*k4.witness).empty());

    auto k5 = decide_gt_small(Graph::complete(5), 1, config, 1);
    CHECK(k5.verdict == Verdict::Unsat);
}

TEST_CASE("decide_gt_small: K5 at two layers is SAT with witness") {
    RunConfig config;
    config.placement_tries = 400;
    auto result = decide_gt_small(Graph::complete(5), 2, config, 5);
    CHECK(result.verdict == Verdict::Sat);
    REQUIRE(result.witness.has_value());
    CHECK(result.witness->layers == 2);
    CHECK(validate(*result.witness).empty());
}

TEST_CASE("decide_gt_small: K9 at two layers is Unknown without a solver") {
    RunConfig config;
    config.placement_tries = 10;
    auto result = decide_gt_small(Graph::complete(9), 2, config, 3);
    CHECK(result.verdict == Verdict::Unknown);
}

TEST_CASE("planarity backend sanity") {
    CHECK(graph_is_planar(Graph::complete(4)));
    CHECK_FALSE(graph_is_planar(Graph::complete(5)));
    Graph k33;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
    CHECK_FALSE(graph_is_planar(k33));
    auto positions = planar_straight_line_positions(Graph::complete(4));
    REQUIRE(positions.has_value());
    LayeredDrawing d{Graph::complete(4), *positions, {}, 1};
    for (const Edge& e : d.graph.edges()) d.chi[e] = 1;
    CHECK(validate(d).empty());
}
