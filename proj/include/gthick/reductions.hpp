#pragma once

#include <optional>
#include <string>

#include "gthick/gte.hpp"

namespace gthick {

// Exact orthonormal frame: origin plus rational unit vectors. Rigidly maps
// gadget-local coordinates into the world.
struct Frame {
    Point origin{Rational(0), Rational(0)};
    Direction ux{1, 0};
    Direction uy{0, 1};

    Point apply(const Point& local) const {
        return Point{origin.x + local.x * ux.dx + local.y * uy.dx,
                     origin.y + local.x * ux.dy + local.y * uy.dy};
    }
};

// Open cone with apex and counterclockwise boundary directions, extent
// below pi.
struct Cone {
    Point apex;
    Direction lo;
    Direction hi;

    bool contains(const Point& p) const {
        if (p == apex) return false;
        Direction u = direction_between(apex, p);
        return cross(lo, u) > 0 && cross(u, hi) > 0;
    }
};

// One admissible placement region of a choice gadget: an intersection of
// cones around a middle point.
struct GadgetRegion {
    Point middle;
    std::vector<Cone> cones;

    bool contains(const Point& p) const {
        for (const Cone& c : cones)
            if (!c.contains(p)) return false;
        return true;
    }
};

// Corner points of the (bounded, convex) intersection of the cones.
std::vector<Point> region_corners(const GadgetRegion& region);

// A fully positioned choice gadget: predrawn triangle fences around three
// anchor vertices, constraining a missing vertex to `choices` disjoint
// regions along the gadget axis. All coordinates are exact; the gadget is
// placed by `frame` with internal scale `scale`.
struct ChoiceGadget {
    int index = 0;
    int choices = 0;
    Rational scale;
    Rational epsilon;
    Frame frame;

    Point anchor_left, anchor_down, anchor_right;

    // Fence polylines (world coordinates, consecutive points joined by red
    // edges): left and right triangles and the downward fence.
    std::vector<Point> left_fence;
    std::vector<Point> right_fence;
    std::vector<Point> down_fence;
    std::vector<std::pair<Point, Point>> down_barrier_edges;

    std::vector<Point> middles;
    std::vector<GadgetRegion> regions;

    Point boundary_left, boundary_right, boundary_down, boundary_up;

    // Every red edge of the gadget, for the fence-crossing checks.
    std::vector<std::pair<Point, Point>> red_edges() const;
};

// Positions the gadget fences by exact line intersections. `sizes` lists
// the choice counts of all gadgets (epsilon must respect the smallest);
// index selects this gadget's count. Throws ParameterOutOfRangeError on
// invalid parameters.
ChoiceGadget build_choice_gadget(int index, const std::vector<int>& sizes,
                                 const Rational& scale,
                                 const Rational& epsilon,
                                 const Frame& frame = {});

// A multicolored-clique instance: k parts with sizes[i] vertices each and
// cross-part edges given as ((part, index), (part, index)), 1-based.
struct MccInstance {
    int k = 0;
    std::vector<int> sizes;
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> edges;

    bool has_edge(int i, int j, int i2, int j2) const;
    bool has_multicolored_clique() const;
};

// 3-CNF over variables 1..num_variables; clauses hold exactly three
// literals over distinct variables (negative literal = negated variable).
struct Cnf {
    int num_variables = 0;
    std::vector<std::array<int, 3>> clauses;

    std::optional<std::vector<bool>> satisfying_assignment() const;
};

struct WitnessRecipe {
    std::map<VertexId, Point> positions;  // missing vertices
    std::map<Edge, int> colors;           // missing edges
};

// A generated extension instance with provenance: the source reduction, the
// expected verdict (certified only when backed by a validated witness), and
// the witness recipe for positive instances.
struct HardnessInstance {
    GteInstance instance;
    std::string source;  // "mcc" or "3sat"
    Verdict expected = Verdict::Unknown;
    bool certified = false;
    std::optional<WitnessRecipe> witness;

    // Generator bookkeeping used by the self-checks.
    std::vector<ChoiceGadget> gadgets;
    std::map<std::pair<std::pair<int, int>, std::pair<int, int>>,
             std::vector<Edge>>
        blocking_edges;  // per non-edge of X (W[1] instances)
    std::vector<VertexId> missing;  // W[1]: clique vertices; 3-SAT: {t, v}
    std::map<Edge, std::set<int>> allowed_colors;  // 3-SAT instances
};

// The multicolored-clique reduction: k choice gadgets on a near-regular
// k-gon, global blocking edges across the visibility tunnels of the
// non-edges, and local color fences around the anchors. The predrawn part
// always validates. For k < 3 a fixed trivial instance is returned.
HardnessInstance gen_w1_instance(const MccInstance& x);

// The 3-SAT reduction: two one-choice gadgets on a square constrain the
// truth and verification vertices; color fences around variable and clause
// vertices realize the allowed-color sets.
HardnessInstance gen_np_instance(const Cnf& cnf);

struct GadgetLemmaReport {
    bool disks_contain_regions = false;
    bool disks_disjoint = false;
    int outside_samples_checked = 0;
    int outside_samples_blocked = 0;
    bool middles_unblocked = false;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Exact checks of the gadget guarantees: region corners inside their disks,
// disk disjointness, anchor segments from the middles crossing no red edge,
// and (sampled) anchor segments from points outside every region crossing
// some red edge.
GadgetLemmaReport verify_gadget_lemmas(const HardnessInstance& inst,
                                       int samples, uint64_t seed);

}  // namespace gthick
