#include "liexp/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace liexp {

namespace {

const std::vector<std::string> kBase = {"x1", "x2", "x3", "t"};

Rational factorial(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i)
        r *= Rational(i);
    return r;
}

MultiPoly poly_const(long n) { return MultiPoly::constant(Rational(n)); }

void check_vars_within(const MultiPoly& p, const std::vector<std::string>& allowed,
                       const std::string& what) {
    for (const auto& v : p.vars())
        if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
            throw std::invalid_argument(what + ": unknown variable '" + v + "'");
}

} // namespace

GroupModel::GroupModel(int acceleration_order) : m_(acceleration_order) {
    if (m_ < 0)
        throw std::invalid_argument("acceleration order must be >= 0");
    for (int n = 0; n <= m_; ++n)
        for (int i = 1; i <= 3; ++i)
            names_.push_back("v" + std::to_string(n) + "_" + std::to_string(i));
    names_.push_back("b");
}

int GroupModel::param_index(int level, int i) const {
    if (level < 0 || level > m_ || i < 1 || i > 3)
        throw std::invalid_argument("param_index out of range");
    return 3 * level + (i - 1);
}

Coords GroupModel::identity() const { return Coords(dim()); }

Coords GroupModel::symbolic(const std::string& prefix) const {
    Coords c;
    c.reserve(dim());
    for (const auto& n : names_)
        c.push_back(MultiPoly::variable(prefix + n));
    return c;
}

Coords GroupModel::compose(const Coords& r, const Coords& s) const {
    if (static_cast<int>(r.size()) != dim() || static_cast<int>(s.size()) != dim())
        throw std::invalid_argument("compose: coordinate arity mismatch");
    const MultiPoly& sb = s[time_index()];
    std::vector<MultiPoly> sb_pow = {poly_const(1)};
    for (int k = 1; k <= m_; ++k)
        sb_pow.push_back(sb_pow.back() * sb);
    Coords out(dim());
    for (int k = 0; k <= m_; ++k)
        for (int i = 1; i <= 3; ++i) {
            MultiPoly v = s[param_index(k, i)];
            for (int n = k; n <= m_; ++n)
                v = v + scale(r[param_index(n, i)] * sb_pow[n - k],
                              Rational(1) / factorial(n - k));
            out[param_index(k, i)] = std::move(v);
        }
    out[time_index()] = r[time_index()] + s[time_index()];
    return out;
}

Coords GroupModel::inverse(const Coords& r) const {
    if (static_cast<int>(r.size()) != dim())
        throw std::invalid_argument("inverse: coordinate arity mismatch");
    const MultiPoly& b = r[time_index()];
    std::vector<MultiPoly> nb_pow = {poly_const(1)}; // powers of (-b)
    for (int k = 1; k <= m_; ++k)
        nb_pow.push_back(nb_pow.back() * (-b));
    Coords out(dim());
    for (int k = 0; k <= m_; ++k)
        for (int i = 1; i <= 3; ++i) {
            MultiPoly w;
            for (int n = k; n <= m_; ++n)
                w = w + scale(r[param_index(n, i)] * nb_pow[n - k],
                              Rational(1) / factorial(n - k));
            out[param_index(k, i)] = -w;
        }
    out[time_index()] = -b;
    return out;
}

std::vector<MultiPoly> GroupModel::act(const Coords& r) const {
    const MultiPoly t = MultiPoly::variable("t");
    std::vector<MultiPoly> t_pow = {poly_const(1)};
    for (int k = 1; k <= m_; ++k)
        t_pow.push_back(t_pow.back() * t);
    std::vector<MultiPoly> out(4);
    for (int i = 1; i <= 3; ++i) {
        MultiPoly x = MultiPoly::variable("x" + std::to_string(i));
        for (int n = 0; n <= m_; ++n)
            x = x + scale(r[param_index(n, i)] * t_pow[n], Rational(1) / factorial(n));
        out[i - 1] = std::move(x);
    }
    out[3] = t + r[time_index()];
    return out;
}

Coords GroupModel::one_parameter(const Coords& direction, const MultiPoly& tau) const {
    if (static_cast<int>(direction.size()) != dim())
        throw std::invalid_argument("one_parameter: coordinate arity mismatch");
    const MultiPoly& ab = direction[time_index()];
    std::vector<MultiPoly> ab_pow = {poly_const(1)};
    std::vector<MultiPoly> tau_pow = {poly_const(1), tau};
    for (int k = 1; k <= m_; ++k)
        ab_pow.push_back(ab_pow.back() * ab);
    for (int k = 1; k <= m_; ++k)
        tau_pow.push_back(tau_pow.back() * tau);
    Coords out(dim());
    for (int k = 0; k <= m_; ++k)
        for (int i = 1; i <= 3; ++i) {
            MultiPoly v;
            for (int n = k; n <= m_; ++n)
                v = v + scale(direction[param_index(n, i)] * ab_pow[n - k] * tau_pow[n - k + 1],
                              Rational(1) / factorial(n - k + 1));
            out[param_index(k, i)] = std::move(v);
        }
    out[time_index()] = direction[time_index()] * tau;
    return out;
}

Coords GroupModel::exp_coords(const Coords& a) const {
    return one_parameter(a, poly_const(1));
}

Coords GroupModel::log_coords(const Coords& r) const {
    if (static_cast<int>(r.size()) != dim())
        throw std::invalid_argument("log_coords: coordinate arity mismatch");
    const MultiPoly& b = r[time_index()];
    std::vector<MultiPoly> b_pow = {poly_const(1)};
    for (int k = 1; k <= m_; ++k)
        b_pow.push_back(b_pow.back() * b);
    Coords a(dim());
    a[time_index()] = b;
    for (int k = m_; k >= 0; --k)
        for (int i = 1; i <= 3; ++i) {
            MultiPoly v = r[param_index(k, i)];
            for (int n = k + 1; n <= m_; ++n)
                v = v - scale(a[param_index(n, i)] * b_pow[n - k],
                              Rational(1) / factorial(n - k + 1));
            a[param_index(k, i)] = std::move(v);
        }
    return a;
}

MultiPoly GroupModel::bind(const MultiPoly& p, const std::string& prefix, const Coords& coords,
                           const std::vector<MultiPoly>* base) const {
    std::map<std::string, MultiPoly> m;
    for (int k = 0; k < dim(); ++k)
        m[prefix + names_[k]] = coords[k];
    if (base) {
        for (size_t i = 0; i < kBase.size(); ++i)
            m[kBase[i]] = (*base)[i];
    }
    return substitute(p, m);
}

LieAlgebra GroupModel::algebra() const {
    std::vector<BracketTerm> st;
    for (int n = 1; n <= m_; ++n)
        for (int i = 1; i <= 3; ++i)
            st.push_back({param_index(n, i), time_index(), param_index(n - 1, i), Rational(1)});
    std::vector<Rational> eps(dim(), Rational(0));
    eps[time_index()] = Rational(1);
    return LieAlgebra("model:" + std::to_string(m_), names_, std::move(st), std::move(eps));
}

bool is_normalized(const GroupModel& model, const PhaseFunction& theta) {
    return model.bind(theta.theta, "", model.identity()).is_zero();
}

namespace {

// one simultaneous substitution of both slots and (optionally) the base point
MultiPoly bind_slots(const GroupModel& model, const MultiPoly& xi, const Coords& r, const Coords& s,
                     const std::vector<MultiPoly>* base = nullptr) {
    std::map<std::string, MultiPoly> m;
    for (int k = 0; k < model.dim(); ++k) {
        m["r_" + model.param_names()[k]] = r[k];
        m["s_" + model.param_names()[k]] = s[k];
    }
    if (base)
        for (size_t i = 0; i < kBase.size(); ++i)
            m[kBase[i]] = (*base)[i];
    return substitute(xi, m);
}

std::vector<std::string> theta_vars(const GroupModel& model) {
    std::vector<std::string> v = model.param_names();
    v.insert(v.end(), kBase.begin(), kBase.end());
    return v;
}

} // namespace

ExponentFunction gauge_delta(const GroupModel& model, const MultiPoly& zeta) {
    check_vars_within(zeta, theta_vars(model), "gauge function");
    Coords r = model.symbolic("r_");
    Coords s = model.symbolic("s_");
    MultiPoly at_r = model.bind(zeta, "", r);
    auto r_inv_base = model.act(model.inverse(r));
    MultiPoly at_s_shifted = model.bind(zeta, "", s, &r_inv_base);
    MultiPoly at_rs = model.bind(zeta, "", model.compose(r, s));
    return {at_r + at_s_shifted - at_rs};
}

ExponentFunction exponent_from_theta(const GroupModel& model, const PhaseFunction& theta) {
    if (!is_normalized(model, theta))
        throw std::invalid_argument("phase function must vanish at the identity");
    return gauge_delta(model, theta.theta);
}

MultiPoly cocycle_identity_residual(const GroupModel& model, const ExponentFunction& xi) {
    Coords r = model.symbolic("r_");
    Coords s = model.symbolic("s_");
    Coords g = model.symbolic("g_");
    MultiPoly t1 = xi.xi; // xi(r, s, p)
    MultiPoly t2 = bind_slots(model, xi.xi, model.compose(r, s), g);
    auto r_inv_base = model.act(model.inverse(r));
    MultiPoly t3 = bind_slots(model, xi.xi, s, g, &r_inv_base);
    MultiPoly t4 = bind_slots(model, xi.xi, r, model.compose(s, g));
    return t1 + t2 - t3 - t4;
}

std::pair<MultiPoly, MultiPoly> identity_slot_values(const GroupModel& model,
                                                     const ExponentFunction& xi) {
    Coords r = model.symbolic("r_");
    Coords s = model.symbolic("s_");
    return {bind_slots(model, xi.xi, model.identity(), s),
            bind_slots(model, xi.xi, r, model.identity())};
}

MultiPoly inverse_slot_residual(const GroupModel& model, const ExponentFunction& xi) {
    Coords r = model.symbolic("r_");
    Coords r_inv = model.inverse(r);
    MultiPoly a = bind_slots(model, xi.xi, r, r_inv);
    auto r_inv_base = model.act(r_inv);
    MultiPoly b = bind_slots(model, xi.xi, r_inv, r, &r_inv_base);
    return a - b;
}

MultiPoly exponent_at(const GroupModel& model, const ExponentFunction& xi, const Coords& r,
                      const Coords& s) {
    return bind_slots(model, xi.xi, r, s);
}

namespace {

Coords coords_of(const GroupModel& model, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != model.dim())
        throw std::invalid_argument("group element arity mismatch");
    Coords c;
    c.reserve(v.size());
    for (const auto& x : v)
        c.push_back(MultiPoly::constant(x));
    return c;
}

std::vector<Rational> constants_of(const Coords& c) {
    std::vector<Rational> v;
    v.reserve(c.size());
    for (const auto& p : c)
        v.push_back(p.constant_value());
    return v;
}

} // namespace

ExtensionElement h_mul(const GroupModel& model, const ExponentFunction& xi,
                       const ExtensionElement& a, const ExtensionElement& b) {
    Coords ra = coords_of(model, a.group_part);
    Coords rb = coords_of(model, b.group_part);
    auto ra_inv_base = model.act(model.inverse(ra));
    std::map<std::string, MultiPoly> shift;
    for (size_t i = 0; i < kBase.size(); ++i)
        shift[kBase[i]] = ra_inv_base[i];
    MultiPoly theta = a.theta_part + substitute(b.theta_part, shift) + exponent_at(model, xi, ra, rb);
    return {std::move(theta), constants_of(model.compose(ra, rb))};
}

ExtensionElement h_inv(const GroupModel& model, const ExponentFunction& xi,
                       const ExtensionElement& a) {
    Coords ra = coords_of(model, a.group_part);
    Coords ra_inv = model.inverse(ra);
    auto ra_base = model.act(ra);
    std::map<std::string, MultiPoly> shift;
    for (size_t i = 0; i < kBase.size(); ++i)
        shift[kBase[i]] = ra_base[i];
    MultiPoly theta = -substitute(a.theta_part, shift) -
                      substitute(exponent_at(model, xi, ra, ra_inv), shift);
    return {std::move(theta), constants_of(ra_inv)};
}

ExponentFunction apply_equivalence(const GroupModel& model, const ExponentFunction& xi,
                                   const MultiPoly& zeta) {
    if (!model.bind(zeta, "", model.identity()).is_zero())
        throw std::invalid_argument("gauge function must vanish at the identity");
    return {xi.xi + gauge_delta(model, zeta).xi};
}

MultiPoly trivialize_one_param(const GroupModel& model, const ExponentFunction& xi,
                               const std::vector<Rational>& direction) {
    Coords dir = coords_of(model, direction);
    Coords r_tau = model.one_parameter(dir, MultiPoly::variable("tau"));
    Coords s_sigma = model.one_parameter(dir, MultiPoly::variable("sigma"));
    MultiPoly restricted = bind_slots(model, xi.xi, r_tau, s_sigma);
    MultiPoly slope = substitute(differentiate(restricted, "sigma"),
                                 {{"sigma", MultiPoly()}});
    MultiPoly integrand = substitute(slope, {{"tau", MultiPoly::variable("sigma")}});
    MultiPoly primitive = integrate(integrand, "sigma");
    return substitute(primitive, {{"sigma", MultiPoly::variable("tau")}});
}

MultiPoly one_param_restriction(const GroupModel& model, const ExponentFunction& xi,
                                const MultiPoly& zeta_tau, const std::vector<Rational>& direction) {
    Coords dir = coords_of(model, direction);
    MultiPoly tau = MultiPoly::variable("tau");
    MultiPoly tau2 = MultiPoly::variable("tau2");
    Coords r = model.one_parameter(dir, tau);
    Coords s = model.one_parameter(dir, tau2);
    MultiPoly xi_restricted = bind_slots(model, xi.xi, r, s);
    auto r_inv_base = model.act(model.inverse(r));
    std::map<std::string, MultiPoly> second = {{"tau", tau2}};
    for (size_t i = 0; i < kBase.size(); ++i)
        second[kBase[i]] = r_inv_base[i];
    MultiPoly delta = zeta_tau + substitute(zeta_tau, second) -
                      substitute(zeta_tau, {{"tau", tau + tau2}});
    return xi_restricted + delta;
}

MultiPoly canonicalize(const GroupModel& model, const ExponentFunction& xi) {
    const auto& names = model.param_names();
    Coords rho = model.symbolic("ca_");
    Coords sigma = model.symbolic("cb_");
    MultiPoly xi_can = bind_slots(model, xi.xi, model.exp_coords(rho), model.exp_coords(sigma));

    std::map<std::string, MultiPoly> sigma_zero;
    for (const auto& n : names)
        sigma_zero["cb_" + n] = MultiPoly();
    std::map<std::string, MultiPoly> scale_by_mu;
    for (const auto& n : names)
        scale_by_mu["ca_" + n] = MultiPoly::variable("mu") * MultiPoly::variable("ca_" + n);

    MultiPoly integrand;
    for (int k = 0; k < model.dim(); ++k) {
        MultiPoly theta_k = substitute(differentiate(xi_can, "cb_" + names[k]), sigma_zero);
        integrand = integrand + MultiPoly::variable("ca_" + names[k]) * substitute(theta_k, scale_by_mu);
    }
    MultiPoly primitive = integrate(integrand, "mu");
    MultiPoly zeta_can = substitute(primitive, {{"mu", MultiPoly::constant(Rational(1))}});

    Coords log_of_r = model.log_coords(model.symbolic(""));
    std::map<std::string, MultiPoly> to_model;
    for (int k = 0; k < model.dim(); ++k)
        to_model["ca_" + names[k]] = log_of_r[k];
    return substitute(zeta_can, to_model);
}

MultiPoly canonical_defect(const GroupModel& model, const ExponentFunction& xi) {
    Coords dir = model.symbolic("a_");
    Coords r = model.one_parameter(dir, MultiPoly::variable("tau"));
    Coords s = model.one_parameter(dir, MultiPoly::variable("tau2"));
    return bind_slots(model, xi.xi, r, s);
}

namespace {

Coords unit_direction(const GroupModel& model, int k) {
    Coords c(model.dim());
    c[k] = MultiPoly::constant(Rational(1));
    return c;
}

// tau^2 coefficient of the lifted-commutator sum for directions (alpha, beta)
MultiPoly commutator_extraction(const GroupModel& model, const ExponentFunction& xi, int alpha,
                                int beta) {
    MultiPoly tau = MultiPoly::variable("tau");
    Coords r = model.one_parameter(unit_direction(model, alpha), tau);
    Coords s = model.one_parameter(unit_direction(model, beta), tau);
    Coords r_inv = model.inverse(r);
    Coords s_inv = model.inverse(s);
    MultiPoly t1 = bind_slots(model, xi.xi, model.compose(r, s), model.compose(r_inv, s_inv));
    MultiPoly t2 = bind_slots(model, xi.xi, r, s);
    auto tail_base = model.act(model.compose(s_inv, r_inv));
    MultiPoly t3 = bind_slots(model, xi.xi, r_inv, s_inv, &tail_base);
    MultiPoly sum = t1 + t2 + t3;
    if (!sum.coefficient_of("tau", 0).is_zero() || !sum.coefficient_of("tau", 1).is_zero())
        throw std::logic_error("commutator extraction: nonzero low-order terms; "
                               "exponent does not vanish at the identity");
    return sum.coefficient_of("tau", 2);
}

} // namespace

InfExponent infinitesimal_from_exponent(const GroupModel& model, const ExponentFunction& xi) {
    InfExponent out(model.algebra());
    const int n = model.dim();
    std::vector<std::vector<MultiPoly>> raw(n, std::vector<MultiPoly>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b)
                raw[a][b] = commutator_extraction(model, xi, a, b);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            MultiPoly entry = scale(raw[a][b] - raw[b][a], Rational(1, 2));
            if (!entry.is_zero())
                out.set_entry(a, b, entry);
        }
    return out;
}

std::vector<TripleResidual> infinitesimal_residual(const GroupModel& model, const InfExponent& xi) {
    const LieAlgebra g = model.algebra();
    const int n = g.dim();
    // action of direction k on functions of the base, as pull-back derivative
    auto rho = [&](int k, const MultiPoly& f) -> MultiPoly {
        if (k == model.time_index())
            return -differentiate(f, "t");
        int level = k / 3;
        int comp = k % 3 + 1;
        MultiPoly tpow = pow_int(MultiPoly::variable("t"), level);
        return scale(tpow * differentiate(f, "x" + std::to_string(comp)),
                     -(Rational(1) / factorial(level)));
    };
    std::vector<TripleResidual> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto bij = g.bracket_basis(i, j);
            for (int k = j + 1; k < n; ++k) {
                auto bjk = g.bracket_basis(j, k);
                auto bki = g.bracket_basis(k, i);
                MultiPoly res;
                for (int l = 0; l < n; ++l) {
                    if (!bij[l].is_zero())
                        res = res + scale(xi.entry(l, k), bij[l]);
                    if (!bjk[l].is_zero())
                        res = res + scale(xi.entry(l, i), bjk[l]);
                    if (!bki[l].is_zero())
                        res = res + scale(xi.entry(l, j), bki[l]);
                }
                res = res - rho(i, xi.entry(j, k)) - rho(j, xi.entry(k, i)) - rho(k, xi.entry(i, j));
                if (!res.is_zero())
                    out.push_back({i, j, k, std::move(res)});
            }
        }
    return out;
}

} // namespace liexp
