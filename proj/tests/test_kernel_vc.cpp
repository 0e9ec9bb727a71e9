#include "gthick/kernel_vc.hpp"

#include <random>

#include "doctest.h"
#include "gthick/errors.hpp"
#include "gthick/gte.hpp"
#include "test_helpers.hpp"

using namespace gthick;
using gthick::testing::pt;

TEST_CASE("2-approximate vertex cover by maximal matching") {
    CHECK(approx_vertex_cover(Graph::complete(3)).size() == 2);
    std::set<VertexId> star_cover = approx_vertex_cover(Graph::star(5));
    CHECK(star_cover == std::set<VertexId>{0, 1});
    CHECK(approx_vertex_cover(Graph()).empty());
    // Cover property on random graphs.
    std::mt19937_64 rng(501);
    for (int i = 0; i < 50; ++i) {
        Graph g = gthick::testing::random_graph(rng, 9, 0.4);
        auto cover = approx_vertex_cover(g);
        for (const Edge& e : g.edges())
            CHECK((cover.count(e.first) || cover.count(e.second)));
    }
}

TEST_CASE("twin classes by exact neighborhood equality") {
    Graph k24;
    for (int a = 0; a < 2; ++a)
        for (int b = 2; b < 6; ++b) k24.add_edge(a, b);
    auto classes = twin_classes(k24, {0, 1});
    REQUIRE(classes.size() == 1);
    CHECK(classes[0] == std::vector<VertexId>{2, 3, 4, 5});

    auto star_classes = twin_classes(Graph::star(5), {0, 1});
    REQUIRE(star_classes.size() == 1);
    CHECK(star_classes[0] == std::vector<VertexId>{2, 3, 4, 5});

    Graph with_isolated = Graph::complete(3);
    with_isolated.add_vertex(7);
    with_isolated.add_vertex(8);
    auto iso_classes = twin_classes(with_isolated, {0, 1, 2});
    REQUIRE(iso_classes.size() == 1);
    CHECK(iso_classes[0] == std::vector<VertexId>{7, 8});
}

TEST_CASE("threshold formula from the class-size rule") {
    // k'=2, one layer: 1 * ((4+2+2)/2 + 1) = 5.
    CHECK(vc_class_threshold(1, 2) == 5);
    // k'=0: (0+0+2)/2 + 1 = 2.
    CHECK(vc_class_threshold(1, 0) == 2);
    CHECK(vc_class_threshold(2, 2) == 4 * 5);
}

TEST_CASE("kernelization of the 20-leaf star at one layer") {
    Graph star = Graph::star(20);
    auto [kernel, trace] = kernelize_vc(star, 1);
    CHECK(trace.k_prime == 2);
    CHECK(trace.threshold == 5);
    CHECK(kernel.vertex_count() == 7);  // cover {0,1} + 5 class leaves
    CHECK(kernel.edge_count() == 6);    // a 6-leaf star
    CHECK(trace.deletions.size() == 14);
    // Deterministic deletion order: highest ids first.
    CHECK(trace.deletions.front().deleted == 20);
    CHECK(trace.deletions.back().deleted == 7);
    // Surviving class members never drop below the threshold.
    for (const auto& del : trace.deletions)
        CHECK(Integer(del.class_survivors.size()) >= trace.threshold);
    // Kernel vertex bound 2^k' * threshold + k'.
    CHECK(Integer(kernel.vertex_count()) <=
          (Integer(1) << trace.k_prime) * trace.threshold + trace.k_prime);
}

TEST_CASE("kernelization below the threshold is the identity") {
    Graph g = Graph::complete(4);
    auto [kernel, trace] = kernelize_vc(g, 2);
    CHECK(kernel == g);
    CHECK(trace.deletions.empty());
}

TEST_CASE("kernelization of an edgeless graph keeps two vertices") {
    Graph g;
    for (int i = 0; i < 30; ++i) g.add_vertex(i);
    auto [kernel, trace] = kernelize_vc(g, 1);
    CHECK(trace.k_prime == 0);
    CHECK(trace.threshold == 2);
    CHECK(kernel.vertex_count() == 2);
    CHECK(trace.deletions.size() == 28);
}

TEST_CASE("lift with an empty trace returns the drawing unchanged") {
    LayeredDrawing d;
    d.graph = Graph::complete(3);
    d.gamma = {{0, pt(0, 0)}, {1, pt(4, 0)}, {2, pt(1, 3)}};
    for (const Edge& e : d.graph.edges()) d.chi[e] = 1;
    d.layers = 1;
    VcTrace trace;
    trace.cover = {0, 1};
    trace.k_prime = 2;
    trace.threshold = 5;
    LayeredDrawing lifted = lift_vc(d, trace);
    CHECK(lifted.gamma == d.gamma);
    CHECK(lifted.chi == d.chi);
}

TEST_CASE("lifting the star kernel back to 21 vertices") {
    Graph star = Graph::star(20);
    auto [kernel, trace] = kernelize_vc(star, 1);

    // A concrete general-position drawing of the kernel star K_{1,6}.
    LayeredDrawing d;
    d.graph = kernel;
    d.gamma[0] = pt(0, 0);
    int i = 1;
    for (VertexId v : kernel.vertices()) {
        if (v == 0) continue;
        d.gamma[v] = pt(7 + i, i * i + i);  // parabola arc, general position
        ++i;
    }
    for (const Edge& e : kernel.edges()) d.chi[e] = 1;
    d.layers = 1;
    REQUIRE(validate(d).empty());
    REQUIRE(drawing_in_general_position(d));

    LayeredDrawing lifted = lift_vc(d, trace);
    CHECK(lifted.graph.vertex_count() == 21);
    CHECK(lifted.graph.edge_count() == 20);
    CHECK(validate(lifted).empty());
    // Restriction to the kernel equals the kernel drawing.
    for (VertexId v : kernel.vertices())
        CHECK(lifted.gamma.at(v) == d.gamma.at(v));
    for (const Edge& e : kernel.edges()) CHECK(lifted.chi.at(e) == d.chi.at(e));
    // Every lifted leaf keeps the star shape.
    for (int leaf = 1; leaf <= 20; ++leaf)
        CHECK(lifted.graph.has_edge(0, leaf));
}

TEST_CASE("kernel decision equals original decision at desk scale") {
    std::mt19937_64 rng(503);
    RunConfig config;
    config.placement_tries = 120;
    int rounds = 0;
    while (rounds < 25) {
        Graph g = gthick::testing::random_graph(rng, 9, 0.35);
        for (int layers = 1; layers <= 2; ++layers) {
            auto [kernel, trace] = kernelize_vc(g, layers);
            auto original = decide_gt_small(g, layers, config, 11);
            auto reduced = decide_gt_small(kernel, layers, config, 11);
            if (original.verdict == Verdict::Unknown ||
                reduced.verdict == Verdict::Unknown)
                continue;
            CHECK(original.verdict == reduced.verdict);
        }
        ++rounds;
    }
}

TEST_CASE("solve_gt_via_vc: stars are planar") {
    RunConfig config;
    config.placement_tries = 150;
    GtSolution solution = solve_gt_via_vc(Graph::star(20), config);
    CHECK(solution.layers == 1);
    CHECK(solution.drawing.graph.vertex_count() == 21);
    CHECK(validate(solution.drawing).empty());
}

TEST_CASE("solve_gt_via_vc: triangle needs one layer") {
    RunConfig config;
    GtSolution solution = solve_gt_via_vc(Graph::complete(3), config);
    CHECK(solution.layers == 1);
    CHECK(validate(solution.drawing).empty());
}

TEST_CASE("solve_gt_via_vc: K5 needs two layers") {
    RunConfig config;
    config.placement_tries = 400;
    GtSolution solution = solve_gt_via_vc(Graph::complete(5), config);
    CHECK(solution.layers == 2);
    CHECK(validate(solution.drawing).empty());
    CHECK(solution.drawing.graph.vertex_count() == 5);
}

TEST_CASE("solve_gt_via_vc: edgeless graphs need zero layers") {
    Graph g;
    for (int i = 0; i < 5; ++i) g.add_vertex(i);
    GtSolution solution = solve_gt_via_vc(g, {});
    CHECK(solution.layers == 0);
    CHECK(solution.drawing.graph.vertex_count() == 5);
}
