#pragma once

#include "liexp/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace liexp {

/// One structure constant c_ij^k, stored for i < j only; antisymmetry in
/// (i, j) is implied.
struct BracketTerm {
    int i = 0;
    int j = 0;
    int k = 0;
    Rational c;
};

struct JacobiResidual {
    int i, j, k;
    std::vector<Rational> residual; // coefficients of [[e_i,e_j],e_k] + cyclic
};

struct ValidationReport {
    std::vector<std::string> schema_issues;   // malformed structure entries
    std::vector<JacobiResidual> jacobi;       // nonzero Jacobi residuals
    bool multiple_time_generators = false;    // >1 nonzero time-action entry
    bool ok() const { return schema_issues.empty() && jacobi.empty(); }
};

/// Finite-dimensional Lie algebra with structure constants over Rational and
/// a time-action coefficient per generator (generator i differentiates
/// functions of t with weight eps_i). Immutable after construction.
class LieAlgebra {
public:
    LieAlgebra(std::string label, std::vector<std::string> names,
               std::vector<BracketTerm> structure, std::vector<Rational> time_action,
               bool allow_multiple_time_generators = false);

    int dim() const { return static_cast<int>(names_.size()); }
    const std::string& label() const { return label_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<BracketTerm>& structure() const { return structure_; }
    const std::vector<Rational>& time_action() const { return time_action_; }
    const Rational& eps(int i) const { return time_action_[i]; }
    bool allows_multiple_time_generators() const { return allow_multiple_; }

    /// [e_i, e_j] as a dense coefficient vector (any i, j).
    std::vector<Rational> bracket_basis(int i, int j) const;

    /// Bilinear extension of the bracket to coefficient vectors.
    std::vector<Rational> bracket(const std::vector<Rational>& u, const std::vector<Rational>& v) const;

    ValidationReport validate() const;

    nlohmann::json to_json() const;
    static LieAlgebra from_json(const nlohmann::json& j, bool allow_multiple_time_generators = false);

    /// FNV-1a hash of the canonical JSON, as fixed-width hex. Reports embed it
    /// so results can be traced back to an exact input.
    std::string fingerprint() const;

private:
    std::string label_;
    std::vector<std::string> names_;
    std::vector<BracketTerm> structure_; // sorted by (i,j,k), i<j
    std::vector<Rational> time_action_;
    bool allow_multiple_ = false;
};

namespace catalog {

LieAlgebra galilean();
LieAlgebra milne(int m);
LieAlgebra abelian(int n);
LieAlgebra heisenberg();

/// Parses "galilean", "milne:2", "abelian:5", "heisenberg".
LieAlgebra by_name(const std::string& name);

} // namespace catalog

} // namespace liexp
