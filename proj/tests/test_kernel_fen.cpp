#include "gthick/kernel_fen.hpp"

#include <random>

#include "doctest.h"
#include "gthick/errors.hpp"
#include "gthick/gte.hpp"
#include "test_helpers.hpp"

using namespace gthick;
using gthick::testing::pt;

namespace {

Graph theta_graph() {
    // Two hubs 0, 1 joined by internally disjoint paths of lengths 2, 3, 4.
    Graph g;
    g.add_edge(0, 2);
    g.add_edge(2, 1);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 1);
    g.add_edge(0, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 7);
    g.add_edge(7, 1);
    return g;
}

// Rebuilds the original graph from kernel + trace; the replay invariant.
Graph reconstruct(const Graph& kernel, const FenTrace& trace) {
    Graph g = kernel;
    for (const auto& path : trace.removed_paths)
        for (size_t i = 0; i + 1 < path.size(); ++i)
            g.add_edge(path[i], path[i + 1]);
    for (auto it = trace.pruned.rbegin(); it != trace.pruned.rend(); ++it) {
        g.add_vertex(it->first);
        if (it->second) g.add_edge(it->first, *it->second);
    }
    return g;
}

}  // namespace

TEST_CASE("pruning dissolves paths and keeps cycles") {
    auto [p5, removed5] = prune_degree_le1(Graph::path(5));
    CHECK(p5.vertex_count() == 0);
    CHECK(removed5.size() == 5);

    auto [c4, removed4] = prune_degree_le1(Graph::cycle(4));
    CHECK(c4 == Graph::cycle(4));
    CHECK(removed4.empty());

    Graph pan = Graph::cycle(4);
    pan.add_edge(0, 9);
    auto [core, removed] = prune_degree_le1(pan);
    CHECK(core == Graph::cycle(4));
    REQUIRE(removed.size() == 1);
    CHECK(removed[0].first == 9);
    CHECK(removed[0].second == 0);
}

TEST_CASE("decomposition of a 6-cycle") {
    FenDecomposition dec = decompose(Graph::cycle(6));
    REQUIRE(dec.feedback.size() == 1);
    CHECK(dec.feedback[0] == make_edge(4, 5));
    CHECK(dec.branch == std::set<VertexId>{4, 5});
    REQUIRE(dec.paths.size() == 1);
    CHECK(dec.paths[0] == std::vector<VertexId>{4, 3, 2, 1, 0, 5});
}

TEST_CASE("decomposition of the theta graph") {
    FenDecomposition dec = decompose(theta_graph());
    CHECK(dec.feedback.size() == 2);
    CHECK(dec.paths.size() <= 8);
    // Each path's endpoints are branch vertices; interiors are not.
    for (const auto& path : dec.paths) {
        CHECK(dec.branch.count(path.front()));
        CHECK(dec.branch.count(path.back()));
        for (size_t i = 1; i + 1 < path.size(); ++i)
            CHECK_FALSE(dec.branch.count(path[i]));
    }
    // Paths are sorted ascending by edge count.
    for (size_t i = 0; i + 1 < dec.paths.size(); ++i)
        CHECK(dec.paths[i].size() <= dec.paths[i + 1].size());
}

TEST_CASE("decomposition of K4: paths are the three tree edges") {
    FenDecomposition dec = decompose(Graph::complete(4));
    CHECK(dec.feedback.size() == 3);
    CHECK(dec.branch.size() == 4);
    REQUIRE(dec.paths.size() == 3);
    for (const auto& path : dec.paths) CHECK(path.size() == 2);
}

TEST_CASE("kernelization of the 6-cycle at two layers stops immediately") {
    auto [kernel, trace] = kernelize_fen(Graph::cycle(6), 2);
    CHECK(trace.k == 1);
    CHECK(kernel.vertex_count() == 2);
    CHECK(kernel.edge_count() == 1);
    CHECK(kernel.has_edge(4, 5));
    REQUIRE(trace.removed_paths.size() == 1);
    CHECK(trace.removed_paths[0].size() == 6);
    CHECK(reconstruct(kernel, trace) == Graph::cycle(6));
}

TEST_CASE("kernelization of the 5-cycle keeps the whole graph") {
    auto [kernel, trace] = kernelize_fen(Graph::cycle(5), 2);
    CHECK(kernel == Graph::cycle(5));
    CHECK(trace.removed_paths.empty());
}

TEST_CASE("kernelization of the theta graph keeps the whole graph") {
    auto [kernel, trace] = kernelize_fen(theta_graph(), 2);
    CHECK(kernel == theta_graph());
    CHECK(trace.removed_paths.empty());
    CHECK(trace.k == 2);
}

TEST_CASE("kernelization rejects a single layer") {
    CHECK_THROWS_AS(kernelize_fen(Graph::cycle(6), 1),
                    ParameterOutOfRangeError);
}

TEST_CASE("replay reconstruction on random graphs") {
    std::mt19937_64 rng(601);
    for (int round = 0; round < 60; ++round) {
        Graph g = gthick::testing::random_graph(rng, 10, 0.3);
        auto [kernel, trace] = kernelize_fen(g, 2);
        CHECK(reconstruct(kernel, trace) == g);
        // Structural bounds.
        CHECK(trace.branch_vertices.size() <= 4 * size_t(trace.k));
        Integer bound = 10 * Integer(trace.k);
        for (int i = 0; i < trace.k; ++i) bound *= 81;
        CHECK(Integer(kernel.vertex_count()) <= bound);
    }
}

TEST_CASE("lifting the 6-cycle kernel reproduces a valid 6-cycle drawing") {
    auto [kernel, trace] = kernelize_fen(Graph::cycle(6), 2);
    LayeredDrawing d;
    d.graph = kernel;
    d.gamma = {{4, pt(0, 0)}, {5, pt(10, 0)}};
    d.chi = {{make_edge(4, 5), 1}};
    d.layers = 2;
    REQUIRE(validate(d).empty());
    LayeredDrawing lifted = lift_fen(d, trace);
    CHECK(lifted.graph == Graph::cycle(6));
    CHECK(validate(lifted).empty());
    // Restriction to the kernel is untouched.
    CHECK(lifted.gamma.at(4) == pt(0, 0));
    CHECK(lifted.gamma.at(5) == pt(10, 0));
    CHECK(lifted.chi.at(make_edge(4, 5)) == 1);
}

TEST_CASE("path re-insertion resolves one monochromatic crossing") {
    // Kernel drawing: a vertical color-1 edge that the removed path's chord
    // must cross; exactly one middle subsegment gets recolored.
    FenTrace trace;
    trace.k = 1;
    trace.removed_paths = {{2, 10, 11, 12, 13, 3}};

    LayeredDrawing d;
    d.graph.add_edge(0, 1);
    d.graph.add_vertex(2);
    d.graph.add_vertex(3);
    d.gamma = {{0, pt(0, -5)}, {1, pt(0, 5)}, {2, pt(-5, 1)}, {3, pt(5, -1)}};
    d.chi = {{make_edge(0, 1), 1}};
    d.layers = 2;
    REQUIRE(validate(d).empty());

    LayeredDrawing lifted = lift_fen(d, trace);
    CHECK(validate(lifted).empty());
    int recolored = 0;
    std::vector<VertexId> chain{2, 10, 11, 12, 13, 3};
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        int c = lifted.chi.at(make_edge(chain[i], chain[i + 1]));
        if (c != 1) ++recolored;
    }
    CHECK(recolored == 1);
}

TEST_CASE("lift with no removed paths only re-attaches pruned vertices") {
    FenTrace trace;
    trace.pruned = {{9, 0}};
    LayeredDrawing d;
    d.graph = Graph::cycle(4);
    d.gamma = {{0, pt(0, 0)}, {1, pt(4, 1)}, {2, pt(5, 5)}, {3, pt(1, 4)}};
    for (const Edge& e : d.graph.edges()) d.chi[e] = 1;
    d.layers = 1;
    REQUIRE(validate(d).empty());
    LayeredDrawing lifted = lift_fen(d, trace);
    CHECK(lifted.graph.has_edge(9, 0));
    CHECK(validate(lifted).empty());
    for (VertexId v : d.graph.vertices())
        CHECK(lifted.gamma.at(v) == d.gamma.at(v));
}

TEST_CASE("lift rebuilds pruned forests from an empty kernel") {
    Graph tree = Graph::path(5);
    tree.add_edge(2, 5);  // a small tree, fully dissolved by pruning
    auto [kernel, trace] = kernelize_fen(tree, 2);
    CHECK(kernel.vertex_count() == 0);
    LayeredDrawing empty;
    empty.layers = 2;
    LayeredDrawing lifted = lift_fen(empty, trace);
    CHECK(lifted.graph == tree);
    CHECK(validate(lifted).empty());
}

TEST_CASE("stop-rule soundness: kernel decision equals original decision") {
    std::mt19937_64 rng(607);
    RunConfig config;
    config.placement_tries = 120;
    int rounds = 0;
    while (rounds < 25) {
        Graph g = gthick::testing::random_graph(rng, 9, 0.3);
        auto [kernel, trace] = kernelize_fen(g, 2);
        auto original = decide_gt_small(g, 2, config, 13);
        auto reduced = decide_gt_small(kernel, 2, config, 13);
        if (original.verdict == Verdict::Unknown ||
            reduced.verdict == Verdict::Unknown)
            continue;
        CHECK(original.verdict == reduced.verdict);
        ++rounds;
    }
}

TEST_CASE("long cycles round-trip through kernelize and lift") {
    for (int n : {6, 9, 14, 23}) {
        auto [kernel, trace] = kernelize_fen(Graph::cycle(n), 2);
        DecisionResult decision = decide_gt_small(kernel, 2, {}, 3);
        REQUIRE(decision.verdict == Verdict::Sat);
        LayeredDrawing lifted = lift_fen(*decision.witness, trace);
        CHECK(lifted.graph == Graph::cycle(n));
        CHECK(validate(lifted).empty());
    }
}
