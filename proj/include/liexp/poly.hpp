#pragma once

#include "liexp/rational.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace liexp {

/// Exact multivariate polynomial over Rational.
///
/// Canonical form: variable names sorted ascending, no unused variables, no
/// zero coefficients, terms ordered graded-lexicographically. Equality is
/// structural, so two polynomials compare equal iff they are mathematically
/// equal. All values are immutable once built; operations are pure.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    struct GradedLexLess {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };

    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    MultiPoly() = default; // zero

    static MultiPoly constant(const Rational& c);
    static MultiPoly variable(const std::string& name);
    static MultiPoly monomial(std::vector<std::string> vars, Exponents exps, const Rational& coeff);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // 0 for zero poly; requires is_constant()

    int var_index(const std::string& name) const; // -1 if absent
    int degree_in(const std::string& var) const;  // -1 for zero polynomial
    int total_degree() const;                     // -1 for zero polynomial

    /// Coefficient of var^k, as a polynomial in the remaining variables.
    MultiPoly coefficient_of(const std::string& var, int k) const;

    std::string str() const;

    nlohmann::json to_json() const;
    static MultiPoly from_json(const nlohmann::json& j);

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

private:
    std::vector<std::string> vars_; // sorted, minimal
    TermMap terms_;

    void insert_term(const Exponents& e, const Rational& c);
    void prune();
    MultiPoly remapped(const std::vector<std::string>& union_vars) const;
    static std::vector<std::string> var_union(const MultiPoly& a, const MultiPoly& b);

    friend MultiPoly add(const MultiPoly&, const MultiPoly&);
    friend MultiPoly mul(const MultiPoly&, const MultiPoly&);
    friend MultiPoly scale(const MultiPoly&, const Rational&);
    friend MultiPoly differentiate(const MultiPoly&, const std::string&);
    friend MultiPoly integrate(const MultiPoly&, const std::string&);
    friend MultiPoly substitute(const MultiPoly&, const std::map<std::string, MultiPoly>&);
};

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly sub(const MultiPoly& a, const MultiPoly& b);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly scale(const MultiPoly& a, const Rational& c);

/// Formal partial derivative. Throws std::invalid_argument for a variable the
/// polynomial has never heard of.
MultiPoly differentiate(const MultiPoly& a, const std::string& var);

/// Antiderivative with zero integration constant. The variable need not occur.
MultiPoly integrate(const MultiPoly& a, const std::string& var);

/// Simultaneous substitution of polynomials for variables.
MultiPoly substitute(const MultiPoly& a, const std::map<std::string, MultiPoly>& bindings);

MultiPoly pow_int(const MultiPoly& a, int k);

} // namespace liexp
