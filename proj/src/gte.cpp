#include "gthick/gte.hpp"

#include <algorithm>
#include <random>

#include "gthick/errors.hpp"

namespace gthick {

std::vector<Edge> GteInstance::missing_edges() const {
    std::vector<Edge> out;
    for (const Edge& e : graph.edges())
        if (!predrawn.graph.has_edge(e.first, e.second)) out.push_back(e);
    return out;
}

std::vector<VertexId> GteInstance::missing_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v : graph.vertices())
        if (!predrawn.graph.has_vertex(v)) out.push_back(v);
    return out;
}

void check_instance(const GteInstance& inst) {
    for (VertexId v : inst.predrawn.graph.vertices())
        if (!inst.graph.has_vertex(v))
            throw ParameterOutOfRangeError(
                "predrawn vertex " + std::to_string(v) + " not in the graph");
    for (const Edge& e : inst.predrawn.graph.edges())
        if (!inst.graph.has_edge(e.first, e.second))
            throw ParameterOutOfRangeError("predrawn edge not in the graph");
    if (!validate(inst.predrawn).empty())
        throw ParameterOutOfRangeError(
            "the predrawn part has monochromatic crossings");
}

std::set<int> feasible_colors(const GteInstance& inst, const Edge& e) {
    const auto& gamma = inst.predrawn.gamma;
    if (!gamma.count(e.first) || !gamma.count(e.second))
        throw VerticesMissingError("both endpoints of the edge must be drawn");
    const Point& a = gamma.at(e.first);
    const Point& b = gamma.at(e.second);

    for (const auto& [v, p] : gamma)
        if (v != e.first && v != e.second && strictly_inside_segment(p, a, b))
            throw DegenerateGeometryError(
                "candidate edge passes through vertex " + std::to_string(v));

    std::set<int> colors;
    for (int c = 1; c <= inst.layers(); ++c) colors.insert(c);
    for (const Edge& f : inst.predrawn.graph.edges()) {
        if (f.first == e.first || f.first == e.second ||
            f.second == e.first || f.second == e.second)
            continue;
        try {
            if (segments_cross(a, b, gamma.at(f.first), gamma.at(f.second)))
                colors.erase(inst.predrawn.chi.at(f));
        } catch (const CollinearOverlapError&) {
            throw DegenerateGeometryError(
                "candidate edge overlaps a predrawn edge collinearly");
        }
    }
    return colors;
}

namespace {

bool edges_disjoint(const Edge& e, const Edge& f) {
    return e.first != f.first && e.first != f.second && e.second != f.first &&
           e.second != f.second;
}

bool edges_cross(const std::map<VertexId, Point>& gamma, const Edge& e,
                 const Edge& f) {
    return segments_cross(gamma.at(e.first), gamma.at(e.second),
                          gamma.at(f.first), gamma.at(f.second));
}

}  // namespace

std::optional<std::map<Edge, int>> solve_gte_edges(const GteInstance& inst) {
    if (!inst.missing_vertices().empty())
        throw VerticesMissingError(
            "the branching solver needs every vertex drawn");
    check_instance(inst);

    const auto& gamma = inst.predrawn.gamma;
    std::vector<Edge> missing = inst.missing_edges();
    const size_t k = missing.size();

    std::map<Edge, std::set<int>> feasible;
    for (const Edge& e : missing) feasible[e] = feasible_colors(inst, e);

    // Branch edges: fewer than k feasible colors. The rest go to the greedy
    // phase, which the counting argument keeps safe.
    std::vector<Edge> branch_edges, greedy_edges;
    for (const Edge& e : missing) {
        if (feasible[e].size() < k)
            branch_edges.push_back(e);
        else
            greedy_edges.push_back(e);
    }
    std::sort(greedy_edges.begin(), greedy_edges.end(),
              [&](const Edge& a, const Edge& b) {
                  if (feasible[a].size() != feasible[b].size())
                      return feasible[a].size() < feasible[b].size();
                  return a < b;
              });

    // Lexicographic branch exploration; the first satisfying branch wins.
    std::vector<std::vector<int>> branch_domains;
    for (const Edge& e : branch_edges)
        branch_domains.emplace_back(feasible[e].begin(), feasible[e].end());

    auto crossings_ok = [&](const Edge& e, int color,
                            const std::map<Edge, int>& placed) {
        for (const auto& [f, fc] : placed)
            if (fc == color && edges_disjoint(e, f) && edges_cross(gamma, e, f))
                return false;
        return true;
    };

    // Tries to finish one branch: the branched edges must not clash among
    // themselves (their domains already encode feasibility against the
    // predrawn part), then the greedy phase picks for each remaining edge
    // the smallest feasible color unused by any crossing new edge.
    auto complete_branch = [&](const std::map<Edge, int>& assignment)
        -> std::optional<std::map<Edge, int>> {
        for (auto it = assignment.begin(); it != assignment.end(); ++it)
            for (auto jt = std::next(it); jt != assignment.end(); ++jt)
                if (it->second == jt->second &&
                    edges_disjoint(it->first, jt->first) &&
                    edges_cross(gamma, it->first, jt->first))
                    return std::nullopt;
        std::map<Edge, int> placed = assignment;
        for (const Edge& e : greedy_edges) {
            bool done = false;
            for (int c : feasible[e]) {
                if (crossings_ok(e, c, placed)) {
                    placed[e] = c;
                    done = true;
                    break;
                }
            }
            if (!done) return std::nullopt;
        }
        std::map<Edge, int> chi = inst.predrawn.chi;
        for (const auto& [e, c] : placed) chi[e] = c;
        return chi;
    };

    std::map<Edge, int> assignment;
    std::optional<std::map<Edge, int>> result;
    auto enumerate = [&](auto&& self, size_t pos) -> bool {
        if (pos == branch_edges.size()) {
            result = complete_branch(assignment);
            return result.has_value();
        }
        for (int c : branch_domains[pos]) {
            assignment[branch_edges[pos]] = c;
            if (self(self, pos + 1)) return true;
        }
        assignment.erase(branch_edges[pos]);
        return false;
    };
    enumerate(enumerate, 0);
    return result;
}

std::optional<std::map<Edge, int>> brute_force_gte_edges(
    const GteInstance& inst, uint64_t budget) {
    if (!inst.missing_vertices().empty())
        throw VerticesMissingError("the oracle needs every vertex drawn");
    check_instance(inst);

    std::vector<Edge> missing = inst.missing_edges();
    const size_t k = missing.size();
    const int layers = inst.layers();
    if (k == 0) return inst.predrawn.chi;

    uint64_t total = 1;
    for (size_t i = 0; i < k; ++i) {
        total *= static_cast<uint64_t>(layers);
        if (total > budget)
            throw OracleBudgetExceededError(
                "brute-force enumeration over " + std::to_string(layers) +
                "^" + std::to_string(k) + " colorings exceeds the budget");
    }

    LayeredDrawing trial = inst.predrawn;
    trial.graph = inst.graph;
    std::vector<int> coloring(k, 1);
    while (true) {
        for (size_t i = 0; i < k; ++i) trial.chi[missing[i]] = coloring[i];
        if (validate(trial).empty()) return trial.chi;
        size_t pos = 0;
        while (pos < k && coloring[pos] == layers) coloring[pos++] = 1;
        if (pos == k) break;
        ++coloring[pos];
    }
    return std::nullopt;
}

}  // namespace gthick
