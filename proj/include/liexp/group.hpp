#pragma once

#include "liexp/cocycle.hpp"
#include "liexp/lie.hpp"
#include "liexp/poly.hpp"

#include <string>
#include <vector>

namespace liexp {

/// Coordinates of a group element, each a polynomial (possibly constant) in
/// other variables. Order matches GroupModel::param_names().
using Coords = std::vector<MultiPoly>;

/// Polynomial group model: the order-m acceleration sector together with the
/// time translation. Coordinates v0_1..vm_3, b act on spacetime (x1..x3, t) by
///   x_i' = x_i + sum_n (t^n/n!) vn_i,   t' = t + b.
/// Composition, inversion, the spacetime action, one-parameter subgroups and
/// the exp/log coordinate change are all exact polynomial maps. m = 1 is the
/// translation/boost sector of the galilean group.
class GroupModel {
public:
    explicit GroupModel(int acceleration_order);

    int order() const { return m_; }
    int dim() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& param_names() const { return names_; }
    int time_index() const { return dim() - 1; }

    /// Index of parameter vn_i (level n, spatial component i in 1..3).
    int param_index(int level, int i) const;

    Coords identity() const;
    Coords symbolic(const std::string& prefix) const;

    Coords compose(const Coords& r, const Coords& s) const;
    Coords inverse(const Coords& r) const;

    /// Transformed base point {x1', x2', x3', t'} as polynomials in the
    /// element coordinates and (x1..x3, t).
    std::vector<MultiPoly> act(const Coords& r) const;

    /// exp(tau * a): the one-parameter subgroup through direction a, as
    /// polynomial coordinates in whatever variables a and tau carry.
    Coords one_parameter(const Coords& direction, const MultiPoly& tau) const;

    /// Canonical (exponential) coordinates of the element with model
    /// coordinates r; inverse of exp_coords. Both are polynomial triangular
    /// maps.
    Coords log_coords(const Coords& r) const;
    Coords exp_coords(const Coords& a) const;

    /// Substitutes prefixed parameter variables by the given coordinates, and
    /// optionally the base variables x1..x3,t by base (size 4).
    MultiPoly bind(const MultiPoly& p, const std::string& prefix, const Coords& coords,
                   const std::vector<MultiPoly>* base = nullptr) const;

    /// The Lie algebra of the model: directions as generators,
    /// [vn_i, b] = v(n-1)_i, time action on the b direction.
    LieAlgebra algebra() const;

private:
    int m_;
    std::vector<std::string> names_;
};

/// Phase law theta(r, p) of a candidate representation; normalized so that
/// theta vanishes at the identity.
struct PhaseFunction {
    MultiPoly theta; // in param_names + x1..x3, t
};

bool is_normalized(const GroupModel& model, const PhaseFunction& theta);

/// Local exponent xi(r, s, p): polynomial in r_-prefixed and s_-prefixed
/// parameters plus the base point.
struct ExponentFunction {
    MultiPoly xi;
};

/// Element {theta(p), r} of the extension built over an exponent.
struct ExtensionElement {
    MultiPoly theta_part; // in x1..x3, t
    std::vector<Rational> group_part;
};

/// Gauge difference Delta[zeta](r,s,p) = zeta(r,p) + zeta(s,r^-1 p) - zeta(rs,p).
ExponentFunction gauge_delta(const GroupModel& model, const MultiPoly& zeta);

/// xi = theta(r,p) + theta(s, r^-1 p) - theta(rs, p); the exponent of the
/// phase law theta. Requires theta normalized.
ExponentFunction exponent_from_theta(const GroupModel& model, const PhaseFunction& theta);

/// Residual of xi(r,s,p) + xi(rs,g,p) - xi(s,g,r^-1 p) - xi(r,sg,p); zero iff
/// xi is a group cocycle.
MultiPoly cocycle_identity_residual(const GroupModel& model, const ExponentFunction& xi);

/// xi with both slots vanishing at the identity: xi(e,s,p) and xi(r,e,p).
std::pair<MultiPoly, MultiPoly> identity_slot_values(const GroupModel& model,
                                                     const ExponentFunction& xi);

/// xi(r, r^-1, p) - xi(r^-1, r, r^-1 p), identically zero for any exponent.
MultiPoly inverse_slot_residual(const GroupModel& model, const ExponentFunction& xi);

/// Evaluates xi at concrete group elements, leaving a polynomial in the base
/// point.
MultiPoly exponent_at(const GroupModel& model, const ExponentFunction& xi, const Coords& r,
                      const Coords& s);

ExtensionElement h_mul(const GroupModel& model, const ExponentFunction& xi,
                       const ExtensionElement& a, const ExtensionElement& b);
ExtensionElement h_inv(const GroupModel& model, const ExponentFunction& xi,
                       const ExtensionElement& a);

ExponentFunction apply_equivalence(const GroupModel& model, const ExponentFunction& xi,
                                   const MultiPoly& zeta);

/// Gauge zeta(tau, p) cancelling xi on the one-parameter subgroup exp(tau*a);
/// the returned polynomial uses the variable "tau" for the subgroup parameter.
MultiPoly trivialize_one_param(const GroupModel& model, const ExponentFunction& xi,
                               const std::vector<Rational>& direction);

/// Restriction of xi + Delta[zeta] to the subgroup exp(tau*a), as a polynomial
/// in tau, tau2 and the base point. Zero iff the trivialization succeeded.
MultiPoly one_param_restriction(const GroupModel& model, const ExponentFunction& xi,
                                const MultiPoly& zeta_tau, const std::vector<Rational>& direction);

/// Gauge zeta(r,p) making xi canonical: xi + Delta[zeta] vanishes whenever
/// both arguments lie on a common one-parameter subgroup.
MultiPoly canonicalize(const GroupModel& model, const ExponentFunction& xi);

/// xi(exp(tau a), exp(tau2 a), p) with a fully symbolic direction; the zero
/// polynomial iff xi is canonical.
MultiPoly canonical_defect(const GroupModel& model, const ExponentFunction& xi);

/// Infinitesimal exponent of xi over the model's direction algebra, by exact
/// second-order Taylor extraction of the lifted commutator. The symmetric part
/// of the raw extraction (pure Taylor debris of non-canonical exponents) is
/// projected out; for canonical exponents the projection does nothing.
InfExponent infinitesimal_from_exponent(const GroupModel& model, const ExponentFunction& xi);

/// Full residual of the infinitesimal cocycle identity over the model
/// directions, with each direction acting on the base through its vector
/// field. Reduces to cocycle_residual on entries that only involve t.
std::vector<TripleResidual> infinitesimal_residual(const GroupModel& model, const InfExponent& xi);

} // namespace liexp
