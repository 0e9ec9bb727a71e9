#include "gthick/polynomial.hpp"

#include "gthick/errors.hpp"

namespace gthick {

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    p.add_term({}, c);
    return p;
}

Polynomial Polynomial::variable(int var) {
    Polynomial p;
    p.add_term({{var, 1}}, 1);
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            // Merge the two sorted exponent lists.
            Monomial merged;
            auto i1 = m1.begin();
            auto i2 = m2.begin();
            while (i1 != m1.end() || i2 != m2.end()) {
                if (i2 == m2.end() || (i1 != m1.end() && i1->first < i2->first))
                    merged.push_back(*i1++);
                else if (i1 == m1.end() || i2->first < i1->first)
                    merged.push_back(*i2++);
                else {
                    merged.emplace_back(i1->first, i1->second + i2->second);
                    ++i1;
                    ++i2;
                }
            }
            out.add_term(merged, c1 * c2);
        }
    }
    return out;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant())
        throw ParameterOutOfRangeError("polynomial is not constant");
    return terms_.begin()->second;
}

int Polynomial::total_degree() const {
    int degree = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (const auto& [var, exp] : m) d += exp;
        degree = std::max(degree, d);
    }
    return degree;
}

std::set<int> Polynomial::support() const {
    std::set<int> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [var, exp] : m) vars.insert(var);
    return vars;
}

Polynomial Polynomial::substituted(const std::map<int, Rational>& values) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        Monomial rest;
        for (const auto& [var, exp] : m) {
            auto it = values.find(var);
            if (it == values.end()) {
                rest.emplace_back(var, exp);
            } else {
                for (int i = 0; i < exp; ++i) coeff *= it->second;
            }
        }
        out.add_term(rest, coeff);
    }
    return out;
}

Rational Polynomial::evaluate(const std::map<int, Rational>& values) const {
    Polynomial ground = substituted(values);
    if (!ground.is_constant())
        throw ParameterOutOfRangeError(
            "evaluation assignment misses variables");
    return ground.constant_value();
}

}  // namespace gthick
