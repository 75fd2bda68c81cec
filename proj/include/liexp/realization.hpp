#pragma once

#include "liexp/cocycle.hpp"
#include "liexp/group.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace liexp {

/// Acceleration-sector table of the infinitesimal exponent of a phase law,
/// via the closed form
///   Xi(d_i^(k), d_j^(n)) = (t^n/n!) d2theta/dx^j dv_(k)^i
///                        - (t^k/k!) d2theta/dx^i dv_(n)^j,
/// second derivatives taken at vanishing group parameters. Entries are
/// returned over the model's direction algebra with the time row left zero
/// (the closed form does not define it).
InfExponent xi_matrix_from_theta(const GroupModel& model, const PhaseFunction& theta);

struct Obstruction {
    int l = 0;
    int q = 0;
    bool forced_zero = false; // the elimination forces gamma_(l,q) = 0
};

struct RealizabilityReport {
    int m = 0;
    int class_dim = 0;      // m(m+1)/2
    int realizable_dim = 0; // m when every obstruction holds
    std::vector<Obstruction> obstructions;
    std::vector<PhaseFunction> family; // theta_j realizing the gamma_j directions
    std::vector<std::string> realized_constants; // gamma_j names, in family order

    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// Realizable subspace of the class space of milne(m): the family
/// theta_j = -(d^j A/dt^j).x realizes the gamma_j chain, and a linear
/// elimination over the unknown second derivatives of theta forces every
/// mixed constant gamma_(l,q) (l,q >= 1) to vanish.
RealizabilityReport realizable_subspace(int m);

/// theta = -mass*v.x + (mass/2)*v^2*t over the order-1 model; its
/// infinitesimal exponent is mass * delta on the (translation, boost) pairs.
PhaseFunction galilean_standard_theta(const Rational& mass);

/// The member of the realizing family for level j >= 1: -(d^j A/dt^j).x.
PhaseFunction family_theta(const GroupModel& model, int j);

struct ThetaAnalysis {
    InfExponent table;              // from xi_matrix_from_theta
    bool delta_diagonal = false;    // entries are P(l,n) * delta_ij, t only
    std::vector<std::string> constant_names; // p-table constants
    std::vector<Rational> constants;         // fitted values when delta_diagonal
    bool fits_table = false;

    nlohmann::json to_json(const GroupModel& model) const;
    std::string to_text(const GroupModel& model) const;
};

/// Fits the infinitesimal exponent of theta against the milne p-table
/// parameterization; for m = 1 the single fitted constant is the mass.
ThetaAnalysis analyze_theta(const GroupModel& model, const PhaseFunction& theta);

} // namespace liexp
