#pragma once

#include <array>
#include <optional>
#include <string>

#include "gthick/config.hpp"
#include "gthick/gte.hpp"
#include "gthick/polynomial.hpp"

namespace gthick {

enum class CompareOp { Eq, Neq, Gt };

// One polynomial (in)equality: poly <op> 0.
struct Atom {
    Polynomial poly;
    CompareOp op;
};

enum class ConjunctTag { F1, F2, F3 };

// A conjunct of the formula, stored as a flat disjunction of atoms.
// F1: single nonzero-determinant atom over a vertex triple.
// F2: per-edge disjunction of color equalities.
// F3: color-disagreement atom or one of the two positive side products.
struct Conjunct {
    ConjunctTag tag;
    std::vector<Atom> atoms;
    std::vector<VertexId> vertices;  // F1: the triple; F3: a,b,c,d
    std::vector<Edge> edges;         // F2: the edge; F3: both edges
};

struct Formula {
    bool trivially_true = false;
    int num_vertices = 0;
    int num_edges = 0;
    int layers = 0;

    std::vector<std::string> variable_names;  // by variable index
    std::vector<bool> variable_is_color;
    std::vector<int> free_variables;          // still-free variable indices

    std::map<VertexId, std::pair<int, int>> vertex_vars;  // v -> (x, y)
    std::map<Edge, int> edge_vars;                         // e -> c

    std::vector<Conjunct> conjuncts;

    size_t variable_count() const { return variable_names.size(); }
    int max_atom_degree() const;
};

// The satisfiability formula for plain geometric thickness: general
// position (F1), color range (F2), and the non-crossing side condition for
// vertex-disjoint same-colored edge pairs (F3). Trivially true when the
// layer budget exceeds the edge count.
Formula build_formula(const Graph& g, int layers);

// Substitutes the predrawn positions and colors, then drops ground
// conjuncts and the F3 conjuncts with exactly one undrawn endpoint whose
// three predrawn positions are collinear (keeping the formula correct for
// non-general-position predrawn parts).
Formula specialize_for_extension(const Formula& f, const GteInstance& inst);

// Quantifier-free SMT-LIB script, byte-deterministic. Colors are bounded
// integers by default; real_colors restores the literal real encoding.
std::string emit_smtlib(const Formula& f, bool real_colors = false);

// Variable assignment (by name) encoding a concrete drawing.
std::map<std::string, Rational> encode_drawing(const LayeredDrawing& d);

// Exact evaluation; the assignment must cover every free variable.
bool evaluate(const Formula& f,
              const std::map<std::string, Rational>& assignment);

enum class SolverVerdict { Sat, Unsat, Unknown };

struct SolverOutcome {
    SolverVerdict verdict = SolverVerdict::Unknown;
    std::map<std::string, Rational> model;
};

// Runs the configured solver on the script with a timeout. When `recheck`
// is given, a SAT model is rationalized and re-evaluated exactly; a model
// failing the recheck raises ModelRejectedError. Throws
// SolverUnavailableError when no solver is configured; a timeout of zero or
// an expired timeout yields Unknown.
SolverOutcome solve_external(const std::string& script,
                             const RunConfig& config,
                             const Formula* recheck = nullptr);

// Reassembles a layered drawing from a model of a GT formula (colors are
// rounded to the nearest layer index before the exact validity check).
std::optional<LayeredDrawing> drawing_from_model(
    const Formula& f, const Graph& g, int layers,
    const std::map<std::string, Rational>& model);

}  // namespace gthick
