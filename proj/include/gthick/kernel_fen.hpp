#pragma once

#include <optional>

#include "gthick/drawing.hpp"

namespace gthick {

// Replayable record of the feedback-edge kernelization: pruned low-degree
// vertices in deletion order (with their neighbor at deletion time, if
// any), the feedback edge set, the branch vertices, and the removed paths
// in removal order (ascending length), each as its vertex sequence.
struct FenTrace {
    int k = 0;  // |F|
    std::vector<std::pair<VertexId, std::optional<VertexId>>> pruned;
    std::vector<Edge> feedback;
    std::set<VertexId> branch_vertices;
    std::vector<std::vector<VertexId>> removed_paths;
};

// Exhaustively removes degree-0 and degree-1 vertices (smallest id first);
// the result has minimum degree 2 or is empty.
std::pair<Graph, std::vector<std::pair<VertexId, std::optional<VertexId>>>>
prune_degree_le1(const Graph& g);

struct FenDecomposition {
    std::vector<Edge> feedback;      // non-tree edges, sorted
    std::set<VertexId> branch;       // F endpoints and tree-degree >= 3
    std::vector<std::vector<VertexId>> paths;  // ascending by edge count
};

// Spanning-forest feedback edge set (Kruskal over sorted edges) and the
// unique decomposition of the forest into edge-disjoint paths with
// endpoints in the branch set. Requires minimum degree >= 2.
FenDecomposition decompose(const Graph& pruned);

// Keeps the branch-and-feedback core plus the decomposition paths up to
// the first one longer than twice (current edge count + path count); the
// kernel has at most 10k * 81^k vertices. Requires layers >= 2 (a single
// layer reduces to planarity and is handled by the callers).
std::pair<Graph, FenTrace> kernelize_fen(const Graph& g, int layers);

// Re-inserts the removed paths in ascending order as subdivided
// straight-line chords, resolving each monochromatic crossing with two
// subdivision vertices and a recolored middle subsegment, then re-attaches
// the pruned vertices next to their neighbors. The output validates and
// restricts to the input drawing on the kernel.
LayeredDrawing lift_fen(const LayeredDrawing& kernel_drawing,
                        const FenTrace& trace);

}  // namespace gthick
