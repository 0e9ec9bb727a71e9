#include "gthick/kernel_vc.hpp"

#include <algorithm>
#include <map>

#include "gthick/clone.hpp"
#include "gthick/errors.hpp"
#include "gthick/gte.hpp"

namespace gthick {

std::set<VertexId> approx_vertex_cover(const Graph& g) {
    std::set<VertexId> cover;
    for (const Edge& e : g.edges()) {
        if (cover.count(e.first) || cover.count(e.second)) continue;
        cover.insert(e.first);
        cover.insert(e.second);
    }
    return cover;
}

std::vector<std::vector<VertexId>> twin_classes(const Graph& g,
                                                const std::set<VertexId>& S) {
    for (const Edge& e : g.edges())
        if (!S.count(e.first) && !S.count(e.second))
            throw ParameterOutOfRangeError("S is not a vertex cover");
    std::map<std::vector<VertexId>, std::vector<VertexId>> by_neighborhood;
    for (VertexId v : g.vertices()) {
        if (S.count(v)) continue;
        std::vector<VertexId> nbrs = g.neighbors(v);
        std::sort(nbrs.begin(), nbrs.end());
        by_neighborhood[nbrs].push_back(v);
    }
    std::vector<std::vector<VertexId>> classes;
    for (auto& [nbrs, members] : by_neighborhood) {
        std::sort(members.begin(), members.end());
        classes.push_back(members);
    }
    return classes;
}

Integer vc_class_threshold(int layers, int k_prime) {
    if (layers < 1 || k_prime < 0)
        throw ParameterOutOfRangeError("threshold needs layers >= 1, k' >= 0");
    Integer lk = 1;
    for (int i = 0; i < k_prime; ++i) lk *= layers;
    Integer cells = (Integer(k_prime) * k_prime + k_prime + 2) / 2;
    return lk * (cells + 1);
}

std::pair<Graph, VcTrace> kernelize_vc(const Graph& g, int layers) {
    if (layers < 1)
        throw ParameterOutOfRangeError("kernelization needs layers >= 1");
    VcTrace trace;
    trace.cover = approx_vertex_cover(g);
    trace.k_prime = static_cast<int>(trace.cover.size());
    trace.threshold = vc_class_threshold(layers, trace.k_prime);

    Graph kernel = g;
    // Deleting non-cover vertices never changes other vertices'
    // neighborhoods, so the partition can be computed once.
    for (auto& members : twin_classes(g, trace.cover)) {
        while (Integer(members.size()) > trace.threshold) {
            VertexId victim = members.back();
            members.pop_back();
            kernel.remove_vertex(victim);
            trace.deletions.push_back({victim, members});
        }
    }

    Integer bound =
        (Integer(1) << trace.k_prime) * trace.threshold + trace.k_prime;
    if (Integer(kernel.vertex_count()) > bound)
        throw ParameterOutOfRangeError("kernel exceeds its size bound");
    return {kernel, trace};
}

LayeredDrawing lift_vc(const LayeredDrawing& kernel_drawing,
                       const VcTrace& trace) {
    if (!validate(kernel_drawing).empty())
        throw ParameterOutOfRangeError("lift requires a valid kernel drawing");
    if (trace.deletions.empty()) return kernel_drawing;
    // Cloning needs general position; inputs already in general position
    // are reused as-is so the lifted drawing restricts to them exactly.
    LayeredDrawing current =
        drawing_in_general_position(kernel_drawing)
            ? kernel_drawing
            : perturb_to_general_position(kernel_drawing,
                                          0x9e3779b97f4a7c15ull);

    for (auto it = trace.deletions.rbegin(); it != trace.deletions.rend();
         ++it) {
        bool inserted = false;
        for (VertexId candidate : it->class_survivors) {
            if (!current.graph.has_vertex(candidate))
                throw LiftFailedError("trace survivor " +
                                      std::to_string(candidate) +
                                      " missing from the drawing");
            if (!can_clone_in_cell(current, trace.cover, candidate)) continue;
            current = insert_clone(current, trace.cover, candidate,
                                   it->deleted);
            inserted = true;
            break;
        }
        if (!inserted)
            throw LiftFailedError(
                "no cloneable class member while re-inserting vertex " +
                std::to_string(it->deleted));
    }
    return current;
}

GtSolution solve_gt_via_vc(const Graph& g, const RunConfig& config) {
    if (g.edge_count() == 0) {
        LayeredDrawing d;
        d.graph = g;
        d.layers = 1;
        int i = 0;
        for (VertexId v : g.vertices()) {
            // Points (i, i^2) on a parabola are in general position.
            d.gamma[v] = Point{Rational(i), Rational(i) * i};
            ++i;
        }
        return {0, d};
    }

    int ceiling = gt_upper_bound_from_vc(
        static_cast<int>(approx_vertex_cover(g).size()));
    for (int layers = 1; layers <= ceiling; ++layers) {
        auto [kernel, trace] = kernelize_vc(g, layers);
        DecisionResult decision =
            decide_gt_small(kernel, layers, config, config.seed);
        if (decision.verdict == Verdict::Sat && decision.witness)
            return {layers, lift_vc(*decision.witness, trace)};
        if (decision.verdict != Verdict::Unsat)
            throw OracleBudgetExceededError("kernel undecided at " +
                                            std::to_string(layers) +
                                            " layers");
    }
    throw OracleBudgetExceededError(
        "no layer count up to the vertex-cover ceiling was decided SAT");
}

}  // namespace gthick
