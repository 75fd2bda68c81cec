#include "liexp/cocycle.hpp"

#include <algorithm>
#include <stdexcept>

namespace liexp {

namespace {
const std::string kTime = "t";
}

InfExponent::InfExponent(LieAlgebra algebra)
    : algebra_(std::move(algebra)), entries_(pair_count(algebra_.dim())) {}

int InfExponent::pair_index(int n, int i, int j) {
    if (i < 0 || j < 0 || i >= n || j >= n || i >= j)
        throw std::invalid_argument("pair_index: need 0 <= i < j < n");
    // pairs ordered (0,1),(0,2),...,(0,n-1),(1,2),...
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

MultiPoly InfExponent::entry(int i, int j) const {
    if (i == j)
        return MultiPoly();
    if (i < j)
        return entries_[pair_index(dim(), i, j)];
    return -entries_[pair_index(dim(), j, i)];
}

void InfExponent::set_entry(int i, int j, MultiPoly p) {
    if (i >= j)
        throw std::invalid_argument("set_entry: need i < j (lower triangle is implied)");
    entries_[pair_index(dim(), i, j)] = std::move(p);
}

bool InfExponent::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

InfExponent operator+(const InfExponent& a, const InfExponent& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("exponent sum: dimension mismatch");
    InfExponent r = a;
    for (size_t p = 0; p < r.entries_.size(); ++p)
        r.entries_[p] = r.entries_[p] + b.entries_[p];
    return r;
}

InfExponent InfExponent::scaled(const Rational& c) const {
    InfExponent r = *this;
    for (auto& e : r.entries_)
        e = scale(e, c);
    return r;
}

nlohmann::json InfExponent::to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    const int n = dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const MultiPoly& e = entries_[pair_index(n, i, j)];
            if (e.is_zero())
                continue;
            nlohmann::json t;
            t["i"] = i;
            t["j"] = j;
            t["poly"] = e.to_json();
            entries.push_back(std::move(t));
        }
    nlohmann::json j;
    j["entries"] = std::move(entries);
    return j;
}

InfExponent InfExponent::from_json(const LieAlgebra& algebra, const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array())
        throw std::invalid_argument("exponent JSON must have an 'entries' array");
    InfExponent xi(algebra);
    for (const auto& t : j.at("entries")) {
        int i = t.at("i").get<int>();
        int jj = t.at("j").get<int>();
        if (i < 0 || jj <= i || jj >= algebra.dim())
            throw std::invalid_argument("exponent JSON: bad entry indices");
        xi.set_entry(i, jj, MultiPoly::from_json(t.at("poly")));
    }
    return xi;
}

std::vector<TripleResidual> cocycle_residual(const InfExponent& xi) {
    const LieAlgebra& g = xi.algebra();
    const int n = g.dim();
    std::vector<TripleResidual> out;
    for (int i = 0; i < n; ++i) {
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
                if (!g.eps(i).is_zero())
                    res = res + scale(differentiate(xi.entry(j, k), kTime), g.eps(i));
                if (!g.eps(j).is_zero())
                    res = res + scale(differentiate(xi.entry(k, i), kTime), g.eps(j));
                if (!g.eps(k).is_zero())
                    res = res + scale(differentiate(xi.entry(i, j), kTime), g.eps(k));
                if (!res.is_zero())
                    out.push_back({i, j, k, std::move(res)});
            }
        }
    }
    return out;
}

JacobiSystem build_jacobi_system(const LieAlgebra& algebra, int degree_bound) {
    if (degree_bound < 0)
        throw std::invalid_argument("degree bound must be >= 0");
    const int n = algebra.dim();
    const int D = degree_bound;
    const int stride = D + 1;
    JacobiSystem sys{algebra, D, InfExponent::pair_count(n) * stride, {}};

    auto col = [&](int i, int j, int p) { return InfExponent::pair_index(n, i, j) * stride + p; };

    // contribution of Xi(a, b) (any a != b) with factor f to the residual rows
    auto add_entry = [&](std::vector<std::map<int, Rational>>& rows, int a, int b, Rational f) {
        if (a == b || f.is_zero())
            return;
        if (a > b) {
            std::swap(a, b);
            f = -f;
        }
        for (int p = 0; p <= D; ++p) {
            Rational& slot = rows[p][col(a, b, p)];
            slot += f;
        }
    };
    // contribution of eps * d/dt Xi(a, b)
    auto add_derivative = [&](std::vector<std::map<int, Rational>>& rows, int a, int b, Rational f) {
        if (a == b || f.is_zero())
            return;
        if (a > b) {
            std::swap(a, b);
            f = -f;
        }
        for (int p = 0; p < D; ++p) {
            Rational& slot = rows[p][col(a, b, p + 1)];
            slot += f * Rational(p + 1);
        }
    };

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto bij = algebra.bracket_basis(i, j);
            for (int k = j + 1; k < n; ++k) {
                auto bjk = algebra.bracket_basis(j, k);
                auto bki = algebra.bracket_basis(k, i);
                std::vector<std::map<int, Rational>> rows(D + 1);
                for (int l = 0; l < n; ++l) {
                    add_entry(rows, l, k, bij[l]);
                    add_entry(rows, l, i, bjk[l]);
                    add_entry(rows, l, j, bki[l]);
                }
                add_derivative(rows, j, k, algebra.eps(i));
                add_derivative(rows, k, i, algebra.eps(j));
                add_derivative(rows, i, j, algebra.eps(k));
                for (auto& m : rows) {
                    SparseRow r;
                    for (auto& [c, v] : m)
                        if (!v.is_zero())
                            r.emplace_back(c, std::move(v));
                    if (!r.empty())
                        sys.rows.push_back(std::move(r));
                }
            }
        }
    }
    return sys;
}

CocycleSolutions solve_cocycles(const JacobiSystem& system) {
    CocycleSolutions out;
    out.degree_bound = system.degree_bound;
    auto rref = sparse_rref(system.rows, system.ncols);
    out.raw = nullspace_basis(rref);
    out.basis.reserve(out.raw.size());
    for (const auto& v : out.raw)
        out.basis.push_back(exponent_from_coefficients(system.algebra, system.degree_bound, v));
    return out;
}

std::vector<Rational> exponent_coefficients(const InfExponent& xi, int degree_bound) {
    const int n = xi.dim();
    const int stride = degree_bound + 1;
    std::vector<Rational> v(InfExponent::pair_count(n) * stride, Rational(0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const MultiPoly e = xi.entry(i, j);
            if (e.is_zero())
                continue;
            for (const auto& name : e.vars())
                if (name != kTime)
                    throw std::invalid_argument(
                        "exponent_coefficients: entry depends on '" + name + "', expected t only");
            if (e.degree_in(kTime) > degree_bound)
                throw std::invalid_argument("exponent_coefficients: degree bound exceeded");
            for (int p = 0; p <= degree_bound; ++p) {
                MultiPoly c = e.coefficient_of(kTime, p);
                if (!c.is_zero())
                    v[InfExponent::pair_index(n, i, j) * stride + p] = c.constant_value();
            }
        }
    }
    return v;
}

InfExponent exponent_from_coefficients(const LieAlgebra& algebra, int degree_bound,
                                       const std::vector<Rational>& v) {
    const int n = algebra.dim();
    const int stride = degree_bound + 1;
    if (static_cast<int>(v.size()) != InfExponent::pair_count(n) * stride)
        throw std::invalid_argument("exponent_from_coefficients: length mismatch");
    InfExponent xi(algebra);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            MultiPoly e;
            for (int p = 0; p <= degree_bound; ++p) {
                const Rational& c = v[InfExponent::pair_index(n, i, j) * stride + p];
                if (!c.is_zero())
                    e = e + MultiPoly::monomial({kTime}, {p}, c);
            }
            if (!e.is_zero())
                xi.set_entry(i, j, std::move(e));
        }
    }
    return xi;
}

std::optional<std::pair<int, int>> admissibility_violation(const LieAlgebra& algebra,
                                                           const LinearForm& lambda) {
    const int n = algebra.dim();
    if (static_cast<int>(lambda.components.size()) != n)
        throw std::invalid_argument("linear form arity mismatch");
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (algebra.eps(i).is_zero() && algebra.eps(j).is_zero())
                continue;
            MultiPoly c = scale(differentiate(lambda.components[j], kTime), algebra.eps(i)) +
                          scale(differentiate(lambda.components[i], kTime), algebra.eps(j));
            if (!c.is_zero())
                return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

InfExponent coboundary(const LieAlgebra& algebra, const LinearForm& lambda) {
    if (auto bad = admissibility_violation(algebra, lambda))
        throw AdmissibilityError(bad->first, bad->second);
    return gauge_image(algebra, lambda);
}

InfExponent gauge_image(const LieAlgebra& algebra, const LinearForm& lambda) {
    const int n = algebra.dim();
    InfExponent xi(algebra);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            MultiPoly e = scale(differentiate(lambda.components[j], kTime), -algebra.eps(i)) +
                          scale(differentiate(lambda.components[i], kTime), algebra.eps(j));
            auto bij = algebra.bracket_basis(i, j);
            for (int k = 0; k < n; ++k)
                if (!bij[k].is_zero())
                    e = e - scale(lambda.components[k], bij[k]);
            if (!e.is_zero())
                xi.set_entry(i, j, std::move(e));
        }
    }
    return xi;
}

std::vector<LinearForm> admissible_forms(const LieAlgebra& algebra, int degree_bound) {
    if (degree_bound < 0)
        throw std::invalid_argument("degree bound must be >= 0");
    const int n = algebra.dim();
    const int D = degree_bound;
    const int stride = D + 1;
    // unknown: coefficient p of component k -> column k*stride + p
    std::vector<SparseRow> rows;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (algebra.eps(i).is_zero() && algebra.eps(j).is_zero())
                continue;
            for (int p = 0; p + 1 <= D; ++p) {
                std::map<int, Rational> m;
                m[j * stride + p + 1] += algebra.eps(i) * Rational(p + 1);
                m[i * stride + p + 1] += algebra.eps(j) * Rational(p + 1);
                SparseRow r;
                for (auto& [c, v] : m)
                    if (!v.is_zero())
                        r.emplace_back(c, std::move(v));
                if (!r.empty())
                    rows.push_back(std::move(r));
            }
        }
    }
    auto rref = sparse_rref(std::move(rows), n * stride);
    auto null_vectors = nullspace_basis(rref);
    std::vector<LinearForm> forms;
    forms.reserve(null_vectors.size());
    for (const auto& v : null_vectors) {
        LinearForm f;
        f.components.resize(n);
        for (int k = 0; k < n; ++k) {
            MultiPoly comp;
            for (int p = 0; p <= D; ++p)
                if (!v[k * stride + p].is_zero())
                    comp = comp + MultiPoly::monomial({kTime}, {p}, v[k * stride + p]);
            f.components[k] = std::move(comp);
        }
        forms.push_back(std::move(f));
    }
    return forms;
}

int default_degree_bound(const LieAlgebra& algebra) {
    const std::string& l = algebra.label();
    if (l.rfind("milne:", 0) == 0) {
        int m = std::stoi(l.substr(6));
        return std::max(2 * m - 1, 2);
    }
    return 2;
}

namespace {

struct QuotientResult {
    std::vector<std::vector<Rational>> solution_raw;
    std::vector<std::vector<Rational>> coboundary_raw;
    std::vector<std::vector<Rational>> class_raw;
};

QuotientResult quotient_at_degree(const LieAlgebra& algebra, int D) {
    QuotientResult q;
    auto sols = solve_cocycles(build_jacobi_system(algebra, D));
    q.solution_raw = std::move(sols.raw);

    // The equivalence on exponents allows an arbitrary linear-form gauge
    // zeta = sum_k rho^k Lambda_k(t); quotient by the image of all of them,
    // one unit form per component and power.
    const int n = algebra.dim();
    const int ncols = InfExponent::pair_count(n) * (D + 1);
    RowSpace image(ncols);
    for (int k = 0; k < n; ++k) {
        for (int p = 0; p <= D; ++p) {
            LinearForm unit;
            unit.components.assign(n, MultiPoly());
            unit.components[k] = MultiPoly::monomial({"t"}, {p}, Rational(1));
            auto v = exponent_coefficients(gauge_image(algebra, unit), D);
            if (image.insert(v))
                q.coboundary_raw.push_back(std::move(v));
        }
    }

    RowSpace accumulated(ncols);
    for (const auto& v : q.coboundary_raw)
        accumulated.insert(v);
    for (const auto& v : q.solution_raw) {
        auto rem = accumulated.reduce(v);
        bool zero = true;
        for (const auto& x : rem)
            zero = zero && x.is_zero();
        if (zero)
            continue;
        // normalize the representative so the leading coefficient is 1
        Rational lead;
        for (const auto& x : rem)
            if (!x.is_zero()) {
                lead = x;
                break;
            }
        for (auto& x : rem)
            x /= lead;
        accumulated.insert(rem);
        q.class_raw.push_back(std::move(rem));
    }
    return q;
}

} // namespace

CocycleClassification classify(const LieAlgebra& algebra, int degree_bound) {
    CocycleClassification out{algebra};
    out.degree_bound = degree_bound;
    out.multiple_time_generators = false;
    {
        int time_gens = 0;
        for (const auto& e : algebra.time_action())
            if (!e.is_zero())
                ++time_gens;
        out.multiple_time_generators = time_gens > 1;
    }

    auto q = quotient_at_degree(algebra, degree_bound);
    out.solution_dim = static_cast<int>(q.solution_raw.size());
    out.coboundary_dim = static_cast<int>(q.coboundary_raw.size());
    out.class_dim = static_cast<int>(q.class_raw.size());
    for (const auto& v : q.solution_raw)
        out.solution_basis.push_back(exponent_from_coefficients(algebra, degree_bound, v));
    for (const auto& v : q.coboundary_raw)
        out.coboundary_basis.push_back(exponent_from_coefficients(algebra, degree_bound, v));
    for (const auto& v : q.class_raw)
        out.class_basis.push_back(exponent_from_coefficients(algebra, degree_bound, v));
    for (int i = 0; i < out.class_dim; ++i)
        out.parameter_names.push_back("c" + std::to_string(i + 1));

    auto check = quotient_at_degree(algebra, degree_bound + 1);
    out.stable = static_cast<int>(check.class_raw.size()) == out.class_dim;
    return out;
}

CocycleClassification classify(const LieAlgebra& algebra) {
    return classify(algebra, default_degree_bound(algebra));
}

PTable milne_p_table(int m) {
    if (m < 1)
        throw std::invalid_argument("milne_p_table: m must be >= 1");
    PTable table;
    table.m = m;
    table.p.assign(m + 1, std::vector<MultiPoly>(m + 1));
    for (int l = 0; l <= m; ++l) {
        for (int n = l + 1; n <= m; ++n) {
            MultiPoly rhs = table.p[l][n - 1];
            if (l >= 1)
                rhs = rhs + table.p[l - 1][n];
            std::string cname = (l == 0) ? "gamma" + std::to_string(n)
                                         : "gamma_" + std::to_string(l) + "_" + std::to_string(n);
            table.constants.push_back(cname);
            MultiPoly pln = integrate(rhs, kTime) + MultiPoly::variable(cname);
            table.p[l][n] = pln;
            table.p[n][l] = -pln;
        }
    }
    return table;
}

InfExponent PTable::constant_direction(const std::string& constant) const {
    auto g = catalog::milne(m);
    InfExponent xi(g);
    std::map<std::string, MultiPoly> bind;
    for (const auto& c : constants)
        bind[c] = MultiPoly::constant(Rational(c == constant ? 1 : 0));
    if (!bind.count(constant))
        throw std::invalid_argument("unknown constant " + constant);
    for (int l = 0; l <= m; ++l)
        for (int n = l + 1; n <= m; ++n) {
            MultiPoly val = substitute(p[l][n], bind);
            if (val.is_zero())
                continue;
            for (int i = 0; i < 3; ++i) {
                int a = 3 + 3 * l + i;
                int b = 3 + 3 * n + i;
                xi.set_entry(a, b, val);
            }
        }
    return xi;
}

} // namespace liexp
