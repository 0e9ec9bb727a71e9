#pragma once

#include <map>
#include <set>
#include <vector>

#include "gthick/rational.hpp"

namespace gthick {

// Sparse multivariate polynomial with rational coefficients over integer
// variable indices. Monomials are sorted (variable, exponent) lists.
class Polynomial {
public:
    using Monomial = std::vector<std::pair<int, int>>;

    Polynomial() = default;
    static Polynomial constant(const Rational& c);
    static Polynomial variable(int var);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()

    int total_degree() const;
    std::set<int> support() const;

    Polynomial substituted(const std::map<int, Rational>& values) const;
    Rational evaluate(const std::map<int, Rational>& values) const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool operator==(const Polynomial& o) const = default;

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

}  // namespace gthick
