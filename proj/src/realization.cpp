#include "liexp/realization.hpp"
#include "liexp/version.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace liexp {

namespace {

Rational factorial(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i)
        r *= Rational(i);
    return r;
}

MultiPoly tpow_over_fact(int n) {
    return MultiPoly::monomial({"t"}, {n}, Rational(1) / factorial(n));
}

// d2 theta / dx^j dv_(k)^i at vanishing group parameters
MultiPoly mixed_second(const GroupModel& model, const MultiPoly& theta, int level, int i, int j) {
    MultiPoly d = differentiate(differentiate(theta, "x" + std::to_string(j)),
                                model.param_names()[model.param_index(level, i)]);
    std::map<std::string, MultiPoly> zero;
    for (const auto& n : model.param_names())
        zero[n] = MultiPoly();
    return substitute(d, zero);
}

} // namespace

InfExponent xi_matrix_from_theta(const GroupModel& model, const PhaseFunction& theta) {
    if (!is_normalized(model, theta))
        throw std::invalid_argument("phase function must vanish at the identity");
    const int m = model.order();
    InfExponent out(model.algebra());
    // cache S[level][i][j]
    std::vector<std::array<std::array<MultiPoly, 4>, 4>> S(m + 1);
    for (int k = 0; k <= m; ++k)
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                S[k][i][j] = mixed_second(model, theta.theta, k, i, j);
    for (int k = 0; k <= m; ++k)
        for (int i = 1; i <= 3; ++i)
            for (int n = k; n <= m; ++n)
                for (int j = 1; j <= 3; ++j) {
                    int a = model.param_index(k, i);
                    int b = model.param_index(n, j);
                    if (a >= b)
                        continue;
                    MultiPoly entry = tpow_over_fact(n) * S[k][i][j] - tpow_over_fact(k) * S[n][j][i];
                    if (!entry.is_zero())
                        out.set_entry(a, b, entry);
                }
    return out;
}

PhaseFunction family_theta(const GroupModel& model, int j) {
    if (j < 1 || j > model.order())
        throw std::invalid_argument("family_theta: level out of range");
    MultiPoly theta;
    for (int i = 1; i <= 3; ++i) {
        MultiPoly xi_var = MultiPoly::variable("x" + std::to_string(i));
        for (int n = j; n <= model.order(); ++n) {
            MultiPoly vn = MultiPoly::variable(model.param_names()[model.param_index(n, i)]);
            theta = theta - xi_var * tpow_over_fact(n - j) * vn;
        }
    }
    return {theta};
}

PhaseFunction galilean_standard_theta(const Rational& mass) {
    GroupModel model(1);
    MultiPoly theta;
    for (int i = 1; i <= 3; ++i) {
        MultiPoly v = MultiPoly::variable(model.param_names()[model.param_index(1, i)]);
        MultiPoly x = MultiPoly::variable("x" + std::to_string(i));
        theta = theta - scale(v * x, mass) + scale(v * v * MultiPoly::variable("t"), mass / Rational(2));
    }
    return {theta};
}

namespace {

// The four closed-form equations around the pair (l, q), with every p-table
// constant zeroed except gamma_(l,q), over polynomial unknowns for the mixed
// second derivatives. Returns true when the system forces gamma_(l,q) = 0.
bool eliminates_gamma(int l, int q) {
    const int DS = q + 2; // ansatz degree for the unknown derivative functions
    std::vector<int> levels = {l - 1, l, q - 1, q};
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    auto level_pos = [&](int k) {
        return static_cast<int>(std::find(levels.begin(), levels.end(), k) - levels.begin());
    };
    const int stride = DS + 1;
    const int per_level = 4 * stride; // (i,j) in {1,2}^2
    auto col = [&](int k, int i, int j, int p) {
        return level_pos(k) * per_level + ((i - 1) * 2 + (j - 1)) * stride + p;
    };
    const int gamma_col = static_cast<int>(levels.size()) * per_level;
    const int ncols = gamma_col + 1;

    const std::vector<std::pair<int, int>> eqs = {{l - 1, q - 1}, {l - 1, q}, {l, q}, {l, q - 1}};
    std::vector<SparseRow> rows;
    const int max_power = DS + q + 1;
    for (const auto& [k, n] : eqs) {
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                // (t^n/n!) S_(k)^{i,j} - (t^k/k!) S_(n)^{j,i} = gamma delta_ij [(k,n)=(l,q)]
                std::vector<std::map<int, Rational>> per_power(max_power + 1);
                Rational cn = Rational(1) / factorial(n);
                Rational ck = Rational(1) / factorial(k);
                for (int p = 0; p <= DS; ++p) {
                    per_power[p + n][col(k, i, j, p)] += cn;
                    per_power[p + k][col(n, j, i, p)] += -ck;
                }
                if (k == l && n == q && i == j)
                    per_power[0][gamma_col] += Rational(-1);
                for (auto& mrow : per_power) {
                    SparseRow r;
                    for (auto& [c, v] : mrow)
                        if (!v.is_zero())
                            r.emplace_back(c, v);
                    if (!r.empty())
                        rows.push_back(std::move(r));
                }
            }
    }
    auto basis = nullspace_basis(sparse_rref(std::move(rows), ncols));
    for (const auto& v : basis)
        if (!v[gamma_col].is_zero())
            return false;
    return true;
}

} // namespace

RealizabilityReport realizable_subspace(int m) {
    if (m < 1)
        throw std::invalid_argument("realizable_subspace: m must be >= 1");
    RealizabilityReport rep;
    rep.m = m;
    rep.class_dim = m * (m + 1) / 2;
    GroupModel model(m);
    auto table = milne_p_table(m);
    for (int j = 1; j <= m; ++j) {
        PhaseFunction theta = family_theta(model, j);
        // check the realized table equals the gamma_j unit direction
        InfExponent realized = xi_matrix_from_theta(model, theta);
        std::map<std::string, MultiPoly> assign;
        for (const auto& c : table.constants)
            assign[c] = MultiPoly::constant(Rational(c == "gamma" + std::to_string(j) ? 1 : 0));
        bool matches = true;
        for (int la = 0; la <= m && matches; ++la)
            for (int nb = la; nb <= m && matches; ++nb)
                for (int i = 1; i <= 3 && matches; ++i)
                    for (int jj = 1; jj <= 3 && matches; ++jj) {
                        int a = model.param_index(la, i);
                        int b = model.param_index(nb, jj);
                        if (a >= b)
                            continue;
                        MultiPoly expect =
                            (i == jj) ? substitute(table.p[la][nb], assign) : MultiPoly();
                        if (realized.entry(a, b) != expect)
                            matches = false;
                    }
        if (!matches)
            throw std::logic_error("family theta does not realize the expected table direction");
        rep.family.push_back(std::move(theta));
        rep.realized_constants.push_back("gamma" + std::to_string(j));
    }
    bool all_forced = true;
    for (int l = 1; l <= m; ++l)
        for (int q = l + 1; q <= m; ++q) {
            Obstruction ob{l, q, eliminates_gamma(l, q)};
            all_forced = all_forced && ob.forced_zero;
            rep.obstructions.push_back(ob);
        }
    rep.realizable_dim = all_forced ? m : rep.class_dim;
    return rep;
}

ThetaAnalysis analyze_theta(const GroupModel& model, const PhaseFunction& theta) {
    ThetaAnalysis an{xi_matrix_from_theta(model, theta)};
    const int m = model.order();
    // delta-diagonal, t-only structure
    an.delta_diagonal = true;
    std::vector<std::vector<MultiPoly>> phat(m + 1, std::vector<MultiPoly>(m + 1));
    for (int l = 0; l <= m; ++l)
        for (int n = l; n <= m; ++n)
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    int a = model.param_index(l, i);
                    int b = model.param_index(n, j);
                    if (a >= b)
                        continue;
                    MultiPoly e = an.table.entry(a, b);
                    if (i != j) {
                        if (!e.is_zero())
                            an.delta_diagonal = false;
                        continue;
                    }
                    for (const auto& v : e.vars())
                        if (v != "t")
                            an.delta_diagonal = false;
                    if (i == 1)
                        phat[l][n] = e;
                    else if (e != phat[l][n])
                        an.delta_diagonal = false;
                }
    if (!an.delta_diagonal)
        return an;
    // fit against the recurrent-integration parameterization
    auto tab = milne_p_table(m);
    an.constant_names = tab.constants;
    an.fits_table = true;
    for (int l = 0; l <= m; ++l)
        for (int n = l + 1; n <= m; ++n) {
            MultiPoly rhs = phat[l][n - 1];
            if (l >= 1)
                rhs = rhs + phat[l - 1][n];
            MultiPoly diff = phat[l][n] - integrate(rhs, "t");
            if (!diff.is_constant()) {
                an.fits_table = false;
                an.constants.clear();
                return an;
            }
            an.constants.push_back(diff.constant_value());
        }
    return an;
}

nlohmann::json RealizabilityReport::to_json() const {
    nlohmann::json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["m"] = m;
    j["class_dimension"] = class_dim;
    j["realizable_dimension"] = realizable_dim;
    nlohmann::json obs = nlohmann::json::array();
    for (const auto& o : obstructions)
        obs.push_back({{"l", o.l}, {"q", o.q}, {"forced_zero", o.forced_zero}});
    j["obstructions"] = std::move(obs);
    nlohmann::json fam = nlohmann::json::array();
    for (size_t i = 0; i < family.size(); ++i)
        fam.push_back({{"constant", realized_constants[i]}, {"theta", family[i].theta.to_json()}});
    j["family"] = std::move(fam);
    return j;
}

std::string RealizabilityReport::to_text() const {
    std::ostringstream os;
    os << "realizable classes for the order-" << m << " acceleration model\n";
    os << "class dimension: " << class_dim << "\n";
    os << "realizable dimension: " << realizable_dim << "\n";
    for (const auto& o : obstructions)
        os << "obstruction gamma_(" << o.l << "," << o.q << ") = 0: "
           << (o.forced_zero ? "forced" : "NOT FORCED") << "\n";
    for (size_t i = 0; i < family.size(); ++i)
        os << "realized " << realized_constants[i] << " by theta = " << family[i].theta.str()
           << "\n";
    return os.str();
}

nlohmann::json ThetaAnalysis::to_json(const GroupModel& model) const {
    nlohmann::json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["m"] = model.order();
    j["table"] = table.to_json();
    j["delta_diagonal"] = delta_diagonal;
    j["fits_table"] = fits_table;
    nlohmann::json cs = nlohmann::json::array();
    for (size_t i = 0; i < constants.size(); ++i)
        cs.push_back({{"name", constant_names[i]},
                      {"num", constants[i].num().get_str()},
                      {"den", constants[i].den().get_str()}});
    j["constants"] = std::move(cs);
    if (model.order() == 1 && fits_table && !constants.empty())
        j["mass"] = {{"num", constants[0].num().get_str()}, {"den", constants[0].den().get_str()}};
    return j;
}

std::string ThetaAnalysis::to_text(const GroupModel& model) const {
    std::ostringstream os;
    const auto& names = model.param_names();
    bool any = false;
    for (int i = 0; i < table.dim(); ++i)
        for (int j = i + 1; j < table.dim(); ++j) {
            MultiPoly e = table.entry(i, j);
            if (e.is_zero())
                continue;
            os << "Xi(" << names[i] << "," << names[j] << ") = " << e.str() << "\n";
            any = true;
        }
    if (!any)
        os << "Xi = 0\n";
    if (!delta_diagonal) {
        os << "table is not of the delta-diagonal time-only form\n";
        return os.str();
    }
    if (!fits_table) {
        os << "table does not satisfy the recurrent-integration relations\n";
        return os.str();
    }
    for (size_t i = 0; i < constants.size(); ++i)
        os << constant_names[i] << " = " << constants[i].str() << "\n";
    if (model.order() == 1 && !constants.empty())
        os << "mass: " << constants[0].str() << "\n";
    return os.str();
}

} // namespace liexp
