#pragma once

#include <optional>

#include "gthick/config.hpp"
#include "gthick/drawing.hpp"

namespace gthick {

// Replayable record of the twin-class reduction. Each deletion stores the
// class members that survived it, so lifting can scan them for a cloneable
// representative.
struct VcTrace {
    std::set<VertexId> cover;
    int k_prime = 0;
    Integer threshold = 0;
    struct Deletion {
        VertexId deleted;
        std::vector<VertexId> class_survivors;
    };
    std::vector<Deletion> deletions;
};

// Maximal-matching 2-approximation, deterministic under sorted edge order.
std::set<VertexId> approx_vertex_cover(const Graph& g);

// Partition of V \ S by exact neighborhood equality, classes ordered
// lexicographically by sorted neighborhood, members ascending.
std::vector<std::vector<VertexId>> twin_classes(const Graph& g,
                                                const std::set<VertexId>& S);

// Class size threshold l^k' * ((k'^2 + k' + 2)/2 + 1).
Integer vc_class_threshold(int layers, int k_prime);

// While some twin class exceeds the threshold, deletes its highest-id
// member. The kernel has at most 2^k' * threshold + k' vertices.
std::pair<Graph, VcTrace> kernelize_vc(const Graph& g, int layers);

// Replays deletions in reverse, cloning a surviving class member with a
// nonempty admissible region for each deleted vertex. Throws LiftFailedError
// if no member is cloneable (impossible for kernels from kernelize_vc).
LayeredDrawing lift_vc(const LayeredDrawing& kernel_drawing,
                       const VcTrace& trace);

struct GtSolution {
    int layers = 0;
    LayeredDrawing drawing;
};

// Minimal layer count with witness: kernelize per candidate layer count up
// to ceil(|S|/2), decide the kernel with the small-instance oracle, lift the
// first success. Throws OracleBudgetExceededError when the oracle cannot
// decide a kernel.
GtSolution solve_gt_via_vc(const Graph& g, const RunConfig& config = {});

}  // namespace gthick
