#pragma once

#include "liexp/lie.hpp"
#include "liexp/matrix.hpp"
#include "liexp/poly.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liexp {

/// Antisymmetric matrix of polynomials over a Lie algebra: the candidate
/// infinitesimal exponent Xi(a_i, a_j, t). Only the upper triangle is stored;
/// entry(j, i) == -entry(i, j) by construction. Entries are univariate in t
/// for everything the classifier touches, but may carry extra named parameters
/// (free constants) or spacetime variables when produced by the group-model
/// calculus.
class InfExponent {
public:
    explicit InfExponent(LieAlgebra algebra);

    const LieAlgebra& algebra() const { return algebra_; }
    int dim() const { return algebra_.dim(); }

    MultiPoly entry(int i, int j) const; // signed; entry(i,i) = 0
    void set_entry(int i, int j, MultiPoly p); // requires i < j

    bool is_zero() const;

    static int pair_count(int n) { return n * (n - 1) / 2; }
    static int pair_index(int n, int i, int j); // i < j

    nlohmann::json to_json() const;
    static InfExponent from_json(const LieAlgebra& algebra, const nlohmann::json& j);

    friend InfExponent operator+(const InfExponent& a, const InfExponent& b);
    InfExponent scaled(const Rational& c) const;

private:
    LieAlgebra algebra_;
    std::vector<MultiPoly> entries_;
};

/// A linear form on the algebra with polynomial components Lambda_k(t); the
/// gauge freedom of the classification. Admissible iff
/// eps_i*Lambda_j' + eps_j*Lambda_i' == 0 for all i, j.
struct LinearForm {
    std::vector<MultiPoly> components;
};

struct AdmissibilityError : std::runtime_error {
    int i, j;
    AdmissibilityError(int i_, int j_)
        : std::runtime_error("inadmissible linear form: constraint (" + std::to_string(i_) + "," +
                             std::to_string(j_) + ") violated"),
          i(i_), j(j_) {}
};

struct TripleResidual {
    int i, j, k;
    MultiPoly residual;
};

/// Residuals of the cocycle identity, one per violated triple i<j<k:
///   Xi([ei,ej],ek) + Xi([ej,ek],ei) + Xi([ek,ei],ej)
///     + eps_i*dXi_jk/dt + eps_j*dXi_ki/dt + eps_k*dXi_ij/dt.
/// The time-derivation terms carry the sign of the action on functions
/// (a generator moving t forward pulls functions back). Empty result means
/// Xi is a cocycle.
std::vector<TripleResidual> cocycle_residual(const InfExponent& xi);

/// Homogeneous linear system over Rational whose nullspace is the space of
/// polynomial cocycles of degree <= degree_bound. Unknown layout: column
/// pair_index(n,i,j) * (D+1) + t_power.
struct JacobiSystem {
    LieAlgebra algebra;
    int degree_bound = 0;
    int ncols = 0;
    std::vector<SparseRow> rows;
};

JacobiSystem build_jacobi_system(const LieAlgebra& algebra, int degree_bound);

struct CocycleSolutions {
    int degree_bound = 0;
    std::vector<std::vector<Rational>> raw; // nullspace vectors, deterministic order
    std::vector<InfExponent> basis;
};

CocycleSolutions solve_cocycles(const JacobiSystem& system);

/// Coefficient vector of a t-only exponent in the JacobiSystem column layout.
std::vector<Rational> exponent_coefficients(const InfExponent& xi, int degree_bound);
InfExponent exponent_from_coefficients(const LieAlgebra& algebra, int degree_bound,
                                       const std::vector<Rational>& v);

/// First violated admissibility constraint, or nothing if the form is
/// admissible.
std::optional<std::pair<int, int>> admissibility_violation(const LieAlgebra& algebra,
                                                           const LinearForm& lambda);

/// d[Lambda]_ij = -eps_i*Lambda_j' + eps_j*Lambda_i' - sum_k c_ij^k Lambda_k.
/// Throws AdmissibilityError for inadmissible forms.
InfExponent coboundary(const LieAlgebra& algebra, const LinearForm& lambda);

/// Same formula without the admissibility gate: the shift of the
/// infinitesimal exponent induced by an arbitrary linear-form gauge
/// zeta(r,t) = sum_k rho^k Lambda_k(t). classify quotients by the span of
/// these images.
InfExponent gauge_image(const LieAlgebra& algebra, const LinearForm& lambda);

/// Basis of all admissible forms with components of degree <= degree_bound.
std::vector<LinearForm> admissible_forms(const LieAlgebra& algebra, int degree_bound);

struct CocycleClassification {
    LieAlgebra algebra;
    int degree_bound = 0;
    std::vector<InfExponent> solution_basis;
    std::vector<InfExponent> coboundary_basis;
    std::vector<InfExponent> class_basis; // a choice of representatives
    int solution_dim = 0;
    int coboundary_dim = 0;
    int class_dim = 0;
    bool stable = true; // class_dim unchanged when recomputed at degree_bound+1
    bool multiple_time_generators = false;
    std::vector<std::string> parameter_names; // one per class basis vector

    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// Default ansatz degree: the largest entry degree the catalog solutions need
/// (2m-1 covers milne(m); 2 is plenty for everything else in the catalog).
int default_degree_bound(const LieAlgebra& algebra);

CocycleClassification classify(const LieAlgebra& algebra, int degree_bound);
CocycleClassification classify(const LieAlgebra& algebra); // default bound

/// Table of the acceleration-sector cocycle polynomials P^(l,n)(t) for
/// milne(m), generated by recurrent integration with one named free constant
/// per integration step.
struct PTable {
    int m = 0;
    std::vector<std::string> constants;       // gamma1..gammam, gamma_l_n
    std::vector<std::vector<MultiPoly>> p;    // p[l][n], 0 <= l,n <= m, antisymmetric

    const MultiPoly& entry(int l, int n) const { return p[l][n]; }

    /// Full-algebra exponent over catalog::milne(m) obtained by assigning 1 to
    /// one constant and 0 to the others.
    InfExponent constant_direction(const std::string& constant) const;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

PTable milne_p_table(int m);

} // namespace liexp
