#include "gthick/etr.hpp"

#include <fstream>
#include <random>

#include "doctest.h"
#include "gthick/errors.hpp"
#include "test_helpers.hpp"

using namespace gthick;
using gthick::testing::pt;

TEST_CASE("triangle formula at one layer has the stated shape") {
    Graph g = Graph::complete(3);
    Formula f = build_formula(g, 1);
    CHECK(f.variable_count() == 9);  // 2n + m = 6 + 3
    CHECK_FALSE(f.trivially_true);
    int f1 = 0, f2 = 0, f3 = 0;
    for (const auto& c : f.conjuncts) {
        if (c.tag == ConjunctTag::F1) ++f1;
        if (c.tag == ConjunctTag::F2) ++f2;
        if (c.tag == ConjunctTag::F3) ++f3;
    }
    CHECK(f1 == 1);  // one vertex triple
    CHECK(f2 == 3);  // one disjunction per edge
    CHECK(f3 == 0);  // no vertex-disjoint edge pairs in a triangle
    CHECK(f.max_atom_degree() <= 6);
}

TEST_CASE("layer budget above the edge count gives the true formula") {
    Graph g = Graph::complete(3);
    Formula f = build_formula(g, 4);
    CHECK(f.trivially_true);
    CHECK(f.variable_count() == 9);
    CHECK(evaluate(f, {}));
}

TEST_CASE("two disjoint edges at one layer produce a single F3 conjunct") {
    Graph g;
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    Formula f = build_formula(g, 1);
    int f3 = 0;
    for (const auto& c : f.conjuncts)
        if (c.tag == ConjunctTag::F3) ++f3;
    CHECK(f3 == 1);
    CHECK(f.variable_count() == 10);
}

TEST_CASE("formula evaluation matches the validator and general position") {
    std::mt19937_64 rng(401);
    int rounds = 0;
    while (rounds < 120) {
        Graph g = gthick::testing::random_graph(rng, 6, 0.5);
        if (g.vertex_count() < 3) continue;
        std::uniform_int_distribution<int> layer_dist(1, 3);
        int layers = layer_dist(rng);
        Formula f = build_formula(g, layers);
        CHECK(f.variable_count() == 2 * g.vertex_count() + g.edge_count());
        CHECK(f.max_atom_degree() <= 6);

        // Half the rounds use fully random (possibly degenerate) points,
        // half use general-position placements.
        LayeredDrawing d;
        d.graph = g;
        d.layers = layers;
        if (rounds % 2 == 0) {
            std::uniform_int_distribution<int> coord(0, 6);
            std::set<std::pair<int, int>> used;
            bool clash = false;
            for (VertexId v : g.vertices()) {
                int x = coord(rng), y = coord(rng);
                if (!used.insert({x, y}).second) clash = true;
                d.gamma[v] = pt(x, y);
            }
            if (clash) continue;  // coincident points: not a drawing at all
        } else {
            d.gamma = gthick::testing::random_positions(g, rng);
        }
        std::uniform_int_distribution<int> color(1, layers);
        for (const Edge& e : g.edges()) d.chi[e] = color(rng);

        bool valid;
        try {
            valid = validate(d).empty();
        } catch (const DegenerateGeometryError&) {
            valid = false;  // vertex-on-edge: F1 already fails (collinear)
        }
        bool general = drawing_in_general_position(d);
        bool formula_value =
            f.trivially_true ? true : evaluate(f, encode_drawing(d));
        if (f.trivially_true) continue;
        CHECK(formula_value == (valid && general));
        ++rounds;
    }
}

TEST_CASE("specialization with nothing missing deletes every conjunct") {
    Graph g = Graph::complete(4);
    std::map<VertexId, Point> gamma{
        {0, pt(0, 0)}, {1, pt(4, 0)}, {2, pt(4, 4)}, {3, pt(0, 4)}};
    std::map<Edge, int> chi;
    for (const Edge& e : g.edges()) chi[e] = 1;
    chi[make_edge(0, 2)] = 2;
    GteInstance inst{g, LayeredDrawing{g, gamma, chi, 2}};
    Formula f = build_formula(g, 2);
    Formula s = specialize_for_extension(f, inst);
    CHECK(s.free_variables.empty());
    CHECK(s.conjuncts.empty());
}

TEST_CASE("specialization with one missing edge keeps one color variable") {
    GteInstance inst;
    inst.graph = Graph::complete(4);
    inst.predrawn.graph = Graph::complete(4);
    inst.predrawn.graph.remove_edge(1, 3);
    inst.predrawn.gamma = {
        {0, pt(0, 0)}, {1, pt(4, 0)}, {2, pt(4, 4)}, {3, pt(0, 4)}};
    for (const Edge& e : inst.predrawn.graph.edges())
        inst.predrawn.chi[e] = 1;
    inst.predrawn.layers = 2;
    Formula f = build_formula(inst.graph, 2);
    Formula s = specialize_for_extension(f, inst);
    REQUIRE(s.free_variables.size() == 1);
    CHECK(s.variable_names[s.free_variables[0]] == "c_1_3");
    // The specialized formula is satisfiable exactly at color 2.
    CHECK(evaluate(s, {{"c_1_3", 2}}));
    CHECK_FALSE(evaluate(s, {{"c_1_3", 1}}));
}

TEST_CASE("specialization deletes collinear one-free-vertex F3 conjuncts") {
    // Predrawn: two edges whose four endpooints include three collinear
    // vertices; one extra vertex of the target graph is missing.
    GteInstance inst;
    inst.graph.add_edge(0, 1);
    inst.graph.add_edge(2, 3);
    inst.graph.add_edge(4, 5);
    inst.predrawn.graph.add_edge(0, 1);
    inst.predrawn.graph.add_edge(2, 3);
    inst.predrawn.graph.add_vertex(4);
    inst.predrawn.gamma = {{0, pt(0, 0)},
                           {1, pt(2, 0)},
                           {2, pt(1, 3)},
                           {3, pt(4, 4)},
                           {4, pt(4, 0)}};
    inst.predrawn.chi = {{make_edge(0, 1), 1}, {make_edge(2, 3), 1}};
    inst.predrawn.layers = 2;

    Formula f = build_formula(inst.graph, 2);
    Formula s = specialize_for_extension(f, inst);
    // Missing: vertex 5 (2 vars) and edge (4,5) (1 var).
    CHECK(s.free_variables.size() == 3);

    // Independent collinearity scan over F3 conjuncts with exactly one
    // undrawn endpoint.
    int expected_deletions = 0;
    for (const Conjunct& c : f.conjuncts) {
        if (c.tag != ConjunctTag::F3) continue;
        std::vector<Point> drawn;
        int undrawn = 0;
        for (VertexId v : c.vertices) {
            if (inst.predrawn.gamma.count(v))
                drawn.push_back(inst.predrawn.gamma.at(v));
            else
                ++undrawn;
        }
        if (undrawn == 1 && orient(drawn[0], drawn[1], drawn[2]) == 0)
            ++expected_deletions;
    }
    CHECK(expected_deletions == 1);  // edges (0,1) and (2,3)... vs (4,5)
    int surviving_f3 = 0;
    for (const Conjunct& c : s.conjuncts)
        if (c.tag == ConjunctTag::F3) ++surviving_f3;
    // F3 conjuncts with a free variable: (0,1)x(4,5), (2,3)x(4,5) minus the
    // collinear-deleted ones.
    CHECK(surviving_f3 == 2 - expected_deletions);
}

TEST_CASE("emitted script round-trips through an s-expression parser") {
    Graph g = Graph::complete(3);
    Formula f = build_formula(g, 1);
    std::string script = emit_smtlib(f);
    CHECK(script.find("(set-logic") == 0);
    CHECK(emit_smtlib(f) == script);  // byte-deterministic

    // Parse-back: count declarations and asserts structurally.
    int declares = 0, asserts = 0;
    size_t pos = 0;
    while ((pos = script.find("(declare-const", pos)) != std::string::npos) {
        ++declares;
        pos += 1;
    }
    pos = 0;
    while ((pos = script.find("(assert", pos)) != std::string::npos) {
        ++asserts;
        pos += 1;
    }
    CHECK(declares == 9);
    // 1 F1 + 3 F2 + color bounds (2 per color variable).
    CHECK(asserts == 1 + 3 + 6);

    // Balanced parentheses.
    int depth = 0;
    for (char ch : script) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        CHECK(depth >= 0);
    }
    CHECK(depth == 0);
}

TEST_CASE("real-color encoding flag switches the logic and sorts") {
    Graph g = Graph::complete(3);
    Formula f = build_formula(g, 1);
    std::string integer_script = emit_smtlib(f, false);
    std::string real_script = emit_smtlib(f, true);
    CHECK(integer_script.find("QF_NIRA") != std::string::npos);
    CHECK(integer_script.find(" Int)") != std::string::npos);
    CHECK(real_script.find("QF_NRA") != std::string::npos);
    CHECK(real_script.find(" Int)") == std::string::npos);
}

TEST_CASE("trivially-true formula emits a true assertion") {
    Graph g = Graph::complete(3);
    Formula f = build_formula(g, 4);
    std::string script = emit_smtlib(f);
    CHECK(script.find("(assert true)") != std::string::npos);
}

TEST_CASE("solver timeout zero reports unknown") {
    RunConfig config;
    config.solver_command = "definitely-not-a-solver";
    config.solver_timeout_sec = 0;
    auto outcome = solve_external("(check-sat)\n", config);
    CHECK(outcome.verdict == SolverVerdict::Unknown);
}

TEST_CASE("solver unavailable raises") {
    RunConfig config;
    CHECK_THROWS_AS(solve_external("(check-sat)\n", config),
                    SolverUnavailableError);
}

namespace {

// A scripted stand-in for an SMT solver: ignores its input and prints a
// canned transcript, which exercises the subprocess and model parsing.
std::string make_stub_solver(const std::string& transcript) {
    std::string path = "/tmp/gthick_stub_solver_" +
                       std::to_string(::getpid()) + "_" +
                       std::to_string(rand()) + ".sh";
    std::ofstream out(path);
    out << "#!/bin/sh\ncat > /dev/null <<'END'\nEND\ncat <<'TRANSCRIPT'\n"
        << transcript << "TRANSCRIPT\n";
    out.close();
    std::string chmod = "chmod +x " + path;
    REQUIRE(std::system(chmod.c_str()) == 0);
    return path;
}

}  // namespace

TEST_CASE("stub solver: unsat verdict is parsed") {
    std::string stub = make_stub_solver("unsat\n");
    RunConfig config;
    config.solver_command = stub;
    auto outcome = solve_external("(check-sat)\n", config);
    CHECK(outcome.verdict == SolverVerdict::Unsat);
    std::remove(stub.c_str());
}

TEST_CASE("stub solver: sat model is parsed and rechecked") {
    // Formula for one missing edge of the convex K4: satisfied by color 2.
    GteInstance inst;
    inst.graph = Graph::complete(4);
    inst.predrawn.graph = Graph::complete(4);
    inst.predrawn.graph.remove_edge(1, 3);
    inst.predrawn.gamma = {
        {0, pt(0, 0)}, {1, pt(4, 0)}, {2, pt(4, 4)}, {3, pt(0, 4)}};
    for (const Edge& e : inst.predrawn.graph.edges())
        inst.predrawn.chi[e] = 1;
    inst.predrawn.layers = 2;
    Formula f = build_formula(inst.graph, 2);
    Formula s = specialize_for_extension(f, inst);

    std::string good = make_stub_solver(
        "sat\n(model\n  (define-fun c_1_3 () Int 2)\n)\n");
    RunConfig config;
    config.solver_command = good;
    auto outcome = solve_external(emit_smtlib(s), config, &s);
    CHECK(outcome.verdict == SolverVerdict::Sat);
    CHECK(outcome.model.at("c_1_3") == 2);
    std::remove(good.c_str());

    std::string bad = make_stub_solver(
        "sat\n(model\n  (define-fun c_1_3 () Int 1)\n)\n");
    config.solver_command = bad;
    CHECK_THROWS_AS(solve_external(emit_smtlib(s), config, &s),
                    ModelRejectedError);
    std::remove(bad.c_str());
}

TEST_CASE("model values in rational and decimal forms are accepted") {
    std::string stub = make_stub_solver(
        "sat\n(model\n  (define-fun x_0 () Real (/ 1 2))\n"
        "  (define-fun y_0 () Real (- 3))\n"
        "  (define-fun x_1 () Real (- (/ 7 4)))\n"
        "  (define-fun y_1 () Real 1.5)\n)\n");
    RunConfig config;
    config.solver_command = stub;
    auto outcome = solve_external("(check-sat)\n", config);
    CHECK(outcome.verdict == SolverVerdict::Sat);
    CHECK(outcome.model.at("x_0") == Rational(1, 2));
    CHECK(outcome.model.at("y_0") == Rational(-3));
    CHECK(outcome.model.at("x_1") == Rational(-7, 4));
    CHECK(outcome.model.at("y_1") == Rational(3, 2));
    std::remove(stub.c_str());
}

TEST_CASE("drawing reassembled from a model validates") {
    Graph g = Graph::complete(3);
    Formula f = build_formula(g, 1);
    std::map<std::string, Rational> model{
        {"x_0", 0}, {"y_0", 0}, {"x_1", 4}, {"y_1", 0},
        {"x_2", 1}, {"y_2", 3}, {"c_0_1", 1}, {"c_0_2", 1}, {"c_1_2", 1}};
    auto d = drawing_from_model(f, g, 1, model);
    REQUIRE(d.has_value());
    CHECK(validate(*d).empty());
    CHECK(evaluate(f, encode_drawing(*d)));
}

TEST_CASE("evaluate rejects drawings with monochromatic crossings") {
    Graph g = Graph::complete(4);
    Formula f = build_formula(g, 2);
    LayeredDrawing d;
    d.graph = g;
    d.gamma = {{0, pt(0, 0)}, {1, pt(4, 0)}, {2, pt(4, 4)}, {3, pt(0, 4)}};
    for (const Edge& e : g.edges()) d.chi[e] = 1;
    d.layers = 2;
    CHECK_FALSE(evaluate(f, encode_drawing(d)));  // F3 fails on the diagonals
    d.chi[make_edge(0, 2)] = 2;
    CHECK(evaluate(f, encode_drawing(d)));
    // Any collinear triple fails F1.
    d.gamma[3] = pt(8, 8);
    CHECK_FALSE(evaluate(f, encode_drawing(d)));
}
