#include "gthick/etr.hpp"

#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gthick/errors.hpp"

namespace gthick {

namespace {

std::string vertex_x_name(VertexId v) { return "x_" + std::to_string(v); }
std::string vertex_y_name(VertexId v) { return "y_" + std::to_string(v); }
std::string edge_c_name(const Edge& e) {
    return "c_" + std::to_string(e.first) + "_" + std::to_string(e.second);
}

// Full expansion of the 3x3 orientation determinant over position
// variables of the three vertices.
Polynomial det3(const Formula& f, VertexId i, VertexId j, VertexId k) {
    auto [xi, yi] = f.vertex_vars.at(i);
    auto [xj, yj] = f.vertex_vars.at(j);
    auto [xk, yk] = f.vertex_vars.at(k);
    auto X = [](int var) { return Polynomial::variable(var); };
    return X(xi) * X(yj) - X(xi) * X(yk) - X(xj) * X(yi) + X(xj) * X(yk) +
           X(xk) * X(yi) - X(xk) * X(yj);
}

}  // namespace

int Formula::max_atom_degree() const {
    int degree = 0;
    for (const Conjunct& c : conjuncts)
        for (const Atom& a : c.atoms)
            degree = std::max(degree, a.poly.total_degree());
    return degree;
}

Formula build_formula(const Graph& g, int layers) {
    Formula f;
    f.num_vertices = static_cast<int>(g.vertex_count());
    f.num_edges = static_cast<int>(g.edge_count());
    f.layers = layers;

    // Variables: positions first, then edge colors; 2n + m in total.
    for (VertexId v : g.vertices()) {
        int x = static_cast<int>(f.variable_names.size());
        f.variable_names.push_back(vertex_x_name(v));
        f.variable_is_color.push_back(false);
        int y = static_cast<int>(f.variable_names.size());
        f.variable_names.push_back(vertex_y_name(v));
        f.variable_is_color.push_back(false);
        f.vertex_vars[v] = {x, y};
    }
    for (const Edge& e : g.edges()) {
        int c = static_cast<int>(f.variable_names.size());
        f.variable_names.push_back(edge_c_name(e));
        f.variable_is_color.push_back(true);
        f.edge_vars[e] = c;
    }
    for (size_t i = 0; i < f.variable_names.size(); ++i)
        f.free_variables.push_back(static_cast<int>(i));

    if (layers > f.num_edges) {
        // Every edge can take its own color.
        f.trivially_true = true;
        return f;
    }

    std::vector<VertexId> vertices(g.vertices().begin(), g.vertices().end());
    // F1: no three vertices collinear.
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            for (size_t k = j + 1; k < vertices.size(); ++k) {
                Conjunct c;
                c.tag = ConjunctTag::F1;
                c.vertices = {vertices[i], vertices[j], vertices[k]};
                c.atoms.push_back(
                    {det3(f, vertices[i], vertices[j], vertices[k]),
                     CompareOp::Neq});
                f.conjuncts.push_back(std::move(c));
            }

    // F2: every edge colored within [1..layers].
    for (const Edge& e : g.edges()) {
        Conjunct c;
        c.tag = ConjunctTag::F2;
        c.edges = {e};
        Polynomial color = Polynomial::variable(f.edge_vars.at(e));
        for (int j = 1; j <= layers; ++j)
            c.atoms.push_back(
                {color - Polynomial::constant(j), CompareOp::Eq});
        f.conjuncts.push_back(std::move(c));
    }

    // F3: same-colored vertex-disjoint edges keep to one side.
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (size_t i = 0; i < edges.size(); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c_, d] = edges[j];
            if (a == c_ || a == d || b == c_ || b == d) continue;
            Conjunct c;
            c.tag = ConjunctTag::F3;
            c.vertices = {a, b, c_, d};
            c.edges = {edges[i], edges[j]};
            Polynomial ci = Polynomial::variable(f.edge_vars.at(edges[i]));
            Polynomial cj = Polynomial::variable(f.edge_vars.at(edges[j]));
            c.atoms.push_back({ci - cj, CompareOp::Neq});
            c.atoms.push_back(
                {det3(f, a, b, c_) * det3(f, a, b, d), CompareOp::Gt});
            c.atoms.push_back(
                {det3(f, c_, d, a) * det3(f, c_, d, b), CompareOp::Gt});
            f.conjuncts.push_back(std::move(c));
        }
    }

    if (f.max_atom_degree() > 6)
        throw ParameterOutOfRangeError("atom degree exceeds 6");
    return f;
}

Formula specialize_for_extension(const Formula& f, const GteInstance& inst) {
    check_instance(inst);

    std::map<int, Rational> values;
    std::map<std::string, int> index_of;
    for (size_t i = 0; i < f.variable_names.size(); ++i)
        index_of[f.variable_names[i]] = static_cast<int>(i);
    for (const auto& [v, p] : inst.predrawn.gamma) {
        auto [x, y] = f.vertex_vars.at(v);
        values[x] = p.x;
        values[y] = p.y;
    }
    for (const auto& [e, color] : inst.predrawn.chi)
        values[f.edge_vars.at(e)] = color;

    Formula out = f;
    out.conjuncts.clear();
    out.free_variables.clear();
    for (size_t i = 0; i < f.variable_names.size(); ++i)
        if (!values.count(static_cast<int>(i)))
            out.free_variables.push_back(static_cast<int>(i));
    if (f.trivially_true) return out;

    for (const Conjunct& c : f.conjuncts) {
        Conjunct sub = c;
        bool ground = true;
        for (Atom& a : sub.atoms) {
            a.poly = a.poly.substituted(values);
            if (!a.poly.support().empty()) ground = false;
        }
        // Ground conjuncts are dropped: the predrawn part is given and
        // fixed, and keeping them would wrongly constrain degenerate but
        // valid predrawn configurations.
        if (ground) continue;

        if (c.tag == ConjunctTag::F3) {
            std::vector<VertexId> undrawn;
            std::vector<Point> drawn_points;
            for (VertexId v : c.vertices) {
                if (inst.predrawn.gamma.count(v))
                    drawn_points.push_back(inst.predrawn.gamma.at(v));
                else
                    undrawn.push_back(v);
            }
            if (undrawn.size() == 1 && drawn_points.size() == 3 &&
                orient(drawn_points[0], drawn_points[1], drawn_points[2]) ==
                    0)
                continue;
        }
        out.conjuncts.push_back(std::move(sub));
    }
    return out;
}

namespace {

std::string rational_smt(const Rational& r, bool as_real) {
    Integer num = numerator(r);
    Integer den = denominator(r);
    auto int_term = [&](const Integer& v) {
        if (v < 0) return "(- " + (-v).str() + ")";
        return v.str();
    };
    if (den == 1 && !as_real) return int_term(num);
    if (den == 1) return int_term(num);
    return "(/ " + int_term(num) + " " + den.str() + ")";
}

std::string monomial_smt(const Formula& f, const Polynomial::Monomial& m,
                         const Rational& coeff) {
    std::vector<std::string> factors;
    if (coeff != 1 || m.empty()) factors.push_back(rational_smt(coeff, false));
    for (const auto& [var, exp] : m)
        for (int i = 0; i < exp; ++i)
            factors.push_back(f.variable_names.at(var));
    if (factors.size() == 1) return factors[0];
    std::string out = "(*";
    for (const std::string& s : factors) out += " " + s;
    return out + ")";
}

std::string polynomial_smt(const Formula& f, const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::vector<std::string> terms;
    for (const auto& [m, c] : p.terms()) terms.push_back(monomial_smt(f, m, c));
    if (terms.size() == 1) return terms[0];
    std::string out = "(+";
    for (const std::string& s : terms) out += " " + s;
    return out + ")";
}

std::string atom_smt(const Formula& f, const Atom& a) {
    std::string poly = polynomial_smt(f, a.poly);
    switch (a.op) {
        case CompareOp::Eq:
            return "(= " + poly + " 0)";
        case CompareOp::Neq:
            return "(not (= " + poly + " 0))";
        case CompareOp::Gt:
            return "(> " + poly + " 0)";
    }
    return {};
}

}  // namespace

std::string emit_smtlib(const Formula& f, bool real_colors) {
    std::ostringstream out;
    bool any_color = false;
    for (int var : f.free_variables)
        if (f.variable_is_color[var]) any_color = true;

    out << "(set-logic " << (any_color && !real_colors ? "QF_NIRA" : "QF_NRA")
        << ")\n";
    for (int var : f.free_variables) {
        bool color = f.variable_is_color[var];
        out << "(declare-const " << f.variable_names[var] << " "
            << (color && !real_colors ? "Int" : "Real") << ")\n";
    }
    // Color bounds accompany the declarations; F2 carries the same
    // information as an explicit disjunction for fidelity.
    for (int var : f.free_variables) {
        if (!f.variable_is_color[var]) continue;
        out << "(assert (<= 1 " << f.variable_names[var] << "))\n";
        out << "(assert (<= " << f.variable_names[var] << " " << f.layers
            << "))\n";
    }
    if (f.trivially_true) {
        out << "(assert true)\n";
    } else {
        for (const Conjunct& c : f.conjuncts) {
            if (c.atoms.size() == 1) {
                out << "(assert " << atom_smt(f, c.atoms[0]) << ")\n";
                continue;
            }
            out << "(assert (or";
            for (const Atom& a : c.atoms) out << " " << atom_smt(f, a);
            out << "))\n";
        }
    }
    out << "(check-sat)\n(get-model)\n";
    return out.str();
}

std::map<std::string, Rational> encode_drawing(const LayeredDrawing& d) {
    std::map<std::string, Rational> assignment;
    for (const auto& [v, p] : d.gamma) {
        assignment[vertex_x_name(v)] = p.x;
        assignment[vertex_y_name(v)] = p.y;
    }
    for (const auto& [e, c] : d.chi) assignment[edge_c_name(e)] = c;
    return assignment;
}

bool evaluate(const Formula& f,
              const std::map<std::string, Rational>& assignment) {
    if (f.trivially_true) return true;
    std::map<int, Rational> values;
    for (size_t i = 0; i < f.variable_names.size(); ++i) {
        auto it = assignment.find(f.variable_names[i]);
        if (it != assignment.end()) values[static_cast<int>(i)] = it->second;
    }
    for (const Conjunct& c : f.conjuncts) {
        bool satisfied = false;
        for (const Atom& a : c.atoms) {
            Rational value = a.poly.evaluate(values);
            bool ok = false;
            switch (a.op) {
                case CompareOp::Eq: ok = value == 0; break;
                case CompareOp::Neq: ok = value != 0; break;
                case CompareOp::Gt: ok = value > 0; break;
            }
            if (ok) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied) return false;
    }
    return true;
}

namespace {

// Minimal s-expression reader for solver model output.
struct SExpr {
    std::string atom;            // nonempty for leaves
    std::vector<SExpr> children;
};

std::vector<std::string> tokenize_sexpr(const std::string& text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char ch : text) {
        if (ch == '(' || ch == ')') {
            if (!current.empty()) {
                tokens.push_back(current);
                current.clear();
            }
            tokens.push_back(std::string(1, ch));
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!current.empty()) {
                tokens.push_back(current);
                current.clear();
            }
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) tokens.push_back(current);
    return tokens;
}

SExpr parse_sexpr(const std::vector<std::string>& tokens, size_t& pos) {
    if (pos >= tokens.size()) throw ModelRejectedError("truncated model");
    if (tokens[pos] == "(") {
        SExpr node;
        ++pos;
        while (pos < tokens.size() && tokens[pos] != ")")
            node.children.push_back(parse_sexpr(tokens, pos));
        if (pos >= tokens.size()) throw ModelRejectedError("unbalanced model");
        ++pos;  // consume ')'
        return node;
    }
    SExpr leaf;
    leaf.atom = tokens[pos++];
    return leaf;
}

std::optional<Rational> value_of_sexpr(const SExpr& e) {
    if (!e.atom.empty()) {
        std::string text = e.atom;
        if (!text.empty() && text.back() == '?') text.pop_back();
        try {
            if (text.find('.') != std::string::npos)
                return rationalize(std::stod(text), Rational(1, 1000000000));
            return parse_rational(text);
        } catch (...) {
            return std::nullopt;
        }
    }
    if (e.children.empty()) return std::nullopt;
    const std::string& head = e.children[0].atom;
    if (head == "-" && e.children.size() == 2) {
        auto inner = value_of_sexpr(e.children[1]);
        if (!inner) return std::nullopt;
        return -*inner;
    }
    if (head == "/" && e.children.size() == 3) {
        auto num = value_of_sexpr(e.children[1]);
        auto den = value_of_sexpr(e.children[2]);
        if (!num || !den || *den == 0) return std::nullopt;
        return *num / *den;
    }
    return std::nullopt;  // root-obj and friends: not exactly representable
}

std::map<std::string, Rational> parse_model(const std::string& text) {
    std::map<std::string, Rational> model;
    auto tokens = tokenize_sexpr(text);
    size_t pos = 0;
    while (pos < tokens.size()) {
        SExpr node = parse_sexpr(tokens, pos);
        // Either a top-level (model ...) wrapper or bare define-funs.
        std::vector<const SExpr*> defs;
        if (!node.children.empty() && node.children[0].atom == "define-fun") {
            defs.push_back(&node);
        } else {
            for (const SExpr& child : node.children)
                if (!child.children.empty() &&
                    child.children[0].atom == "define-fun")
                    defs.push_back(&child);
        }
        for (const SExpr* def : defs) {
            if (def->children.size() < 5) continue;
            const std::string& name = def->children[1].atom;
            auto value = value_of_sexpr(def->children[4]);
            if (!value)
                throw ModelRejectedError("model value for " + name +
                                         " is not rational");
            model[name] = *value;
        }
    }
    return model;
}

}  // namespace

SolverOutcome solve_external(const std::string& script,
                             const RunConfig& config, const Formula* recheck) {
    if (config.solver_command.empty())
        throw SolverUnavailableError("no solver command configured");
    if (config.solver_timeout_sec <= 0) return {SolverVerdict::Unknown, {}};

    char path[] = "/tmp/gthick_etr_XXXXXX";
    int fd = mkstemp(path);
    if (fd < 0) throw SolverUnavailableError("cannot create temp script");
    {
        std::ofstream out(path);
        out << script;
    }
    close(fd);

    std::string command = "timeout " +
                          std::to_string(config.solver_timeout_sec) + "s " +
                          config.solver_command + " " + path + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        std::remove(path);
        throw SolverUnavailableError("cannot launch solver: " +
                                     config.solver_command);
    }
    std::string output;
    char buffer[4096];
    while (size_t got = fread(buffer, 1, sizeof buffer, pipe))
        output.append(buffer, got);
    int status = pclose(pipe);
    std::remove(path);
    if (status != 0 && output.find("sat") == std::string::npos)
        return {SolverVerdict::Unknown, {}};

    std::istringstream lines(output);
    std::string line;
    SolverVerdict verdict = SolverVerdict::Unknown;
    std::string rest;
    bool seen_verdict = false;
    while (std::getline(lines, line)) {
        if (!seen_verdict) {
            if (line == "sat") {
                verdict = SolverVerdict::Sat;
                seen_verdict = true;
            } else if (line == "unsat") {
                verdict = SolverVerdict::Unsat;
                seen_verdict = true;
            } else if (line == "unknown") {
                return {SolverVerdict::Unknown, {}};
            }
        } else {
            rest += line + "\n";
        }
    }
    if (!seen_verdict) return {SolverVerdict::Unknown, {}};
    if (verdict != SolverVerdict::Sat) return {verdict, {}};

    SolverOutcome outcome{SolverVerdict::Sat, parse_model(rest)};
    if (recheck) {
        std::map<std::string, Rational> assignment = outcome.model;
        if (!evaluate(*recheck, assignment))
            throw ModelRejectedError(
                "solver model fails exact re-evaluation");
    }
    return outcome;
}

std::optional<LayeredDrawing> drawing_from_model(
    const Formula& f, const Graph& g, int layers,
    const std::map<std::string, Rational>& model) {
    LayeredDrawing d;
    d.graph = g;
    d.layers = layers;
    for (VertexId v : g.vertices()) {
        auto x = model.find(vertex_x_name(v));
        auto y = model.find(vertex_y_name(v));
        if (x == model.end() || y == model.end()) return std::nullopt;
        d.gamma[v] = Point{x->second, y->second};
    }
    for (const Edge& e : g.edges()) {
        auto c = model.find(edge_c_name(e));
        if (c == model.end()) return std::nullopt;
        // Round to the nearest layer index; exact validation follows.
        Rational value = c->second;
        Integer rounded = numerator(value + Rational(1, 2)) /
                          denominator(value + Rational(1, 2));
        int color = static_cast<int>(rounded);
        if (color < 1 || color > layers) return std::nullopt;
        d.chi[e] = color;
    }
    try {
        if (!validate(d).empty()) return std::nullopt;
    } catch (const Error&) {
        return std::nullopt;
    }
    return d;
}

}  // namespace gthick
