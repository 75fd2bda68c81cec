#include "liexp/lie.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace liexp {

LieAlgebra::LieAlgebra(std::string label, std::vector<std::string> names,
                       std::vector<BracketTerm> structure, std::vector<Rational> time_action,
                       bool allow_multiple_time_generators)
    : label_(std::move(label)), names_(std::move(names)), structure_(std::move(structure)),
      time_action_(std::move(time_action)), allow_multiple_(allow_multiple_time_generators) {
    const int n = dim();
    if (n <= 0)
        throw std::invalid_argument("algebra dimension must be positive");
    if (static_cast<int>(time_action_.size()) != n)
        throw std::invalid_argument("time_action length must equal dim");
    for (const auto& b : structure_) {
        if (b.i < 0 || b.j < 0 || b.k < 0 || b.i >= n || b.j >= n || b.k >= n)
            throw std::invalid_argument("structure constant index out of range");
        if (b.i >= b.j)
            throw std::invalid_argument("structure constants must be stored with i < j");
    }
    std::sort(structure_.begin(), structure_.end(), [](const BracketTerm& a, const BracketTerm& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    for (size_t s = 1; s < structure_.size(); ++s) {
        const auto& a = structure_[s - 1];
        const auto& b = structure_[s];
        if (a.i == b.i && a.j == b.j && a.k == b.k)
            throw std::invalid_argument("duplicate structure constant entry");
    }
    int time_gens = 0;
    for (const auto& e : time_action_)
        if (!e.is_zero())
            ++time_gens;
    if (time_gens > 1 && !allow_multiple_)
        throw std::invalid_argument(
            "more than one generator acts on time; pass the override flag to proceed");
}

std::vector<Rational> LieAlgebra::bracket_basis(int i, int j) const {
    std::vector<Rational> w(dim(), Rational(0));
    if (i == j)
        return w;
    const bool flip = i > j;
    if (flip)
        std::swap(i, j);
    for (const auto& b : structure_) {
        if (b.i == i && b.j == j)
            w[b.k] += flip ? -b.c : b.c;
    }
    return w;
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& u,
                                          const std::vector<Rational>& v) const {
    const int n = dim();
    if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
        throw std::invalid_argument("bracket: coefficient vector length mismatch");
    std::vector<Rational> w(n, Rational(0));
    for (const auto& b : structure_) {
        Rational f = u[b.i] * v[b.j] - u[b.j] * v[b.i];
        if (!f.is_zero())
            w[b.k] += f * b.c;
    }
    return w;
}

ValidationReport LieAlgebra::validate() const {
    ValidationReport rep;
    const int n = dim();
    int time_gens = 0;
    for (const auto& e : time_action_)
        if (!e.is_zero())
            ++time_gens;
    rep.multiple_time_generators = time_gens > 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto bij = bracket_basis(i, j);
            for (int k = j + 1; k < n; ++k) {
                auto bjk = bracket_basis(j, k);
                auto bki = bracket_basis(k, i);
                std::vector<Rational> e_i(n, Rational(0)), e_j(n, Rational(0)), e_k(n, Rational(0));
                e_i[i] = Rational(1);
                e_j[j] = Rational(1);
                e_k[k] = Rational(1);
                auto t1 = bracket(bij, e_k);
                auto t2 = bracket(bjk, e_i);
                auto t3 = bracket(bki, e_j);
                std::vector<Rational> res(n, Rational(0));
                bool nonzero = false;
                for (int l = 0; l < n; ++l) {
                    res[l] = t1[l] + t2[l] + t3[l];
                    if (!res[l].is_zero())
                        nonzero = true;
                }
                if (nonzero)
                    rep.jacobi.push_back({i, j, k, std::move(res)});
            }
        }
    }
    return rep;
}

nlohmann::json LieAlgebra::to_json() const {
    nlohmann::json j;
    j["dim"] = dim();
    j["names"] = names_;
    nlohmann::json brackets = nlohmann::json::array();
    for (const auto& b : structure_) {
        nlohmann::json t;
        t["i"] = b.i;
        t["j"] = b.j;
        t["k"] = b.k;
        t["num"] = b.c.num().get_str();
        t["den"] = b.c.den().get_str();
        brackets.push_back(std::move(t));
    }
    j["brackets"] = std::move(brackets);
    nlohmann::json ta = nlohmann::json::array();
    for (const auto& e : time_action_) {
        nlohmann::json t;
        t["num"] = e.num().get_str();
        t["den"] = e.den().get_str();
        ta.push_back(std::move(t));
    }
    j["time_action"] = std::move(ta);
    return j;
}

namespace {

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
    throw std::invalid_argument("algebra schema: field '" + field + "': " + what);
}

Rational rational_field(const nlohmann::json& j, const std::string& ctx) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        schema_error(ctx, "expected object with 'num' and 'den'");
    try {
        mpz_class num(j.at("num").get<std::string>());
        mpz_class den(j.at("den").get<std::string>());
        if (den == 0)
            schema_error(ctx, "zero denominator");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (...) {
        schema_error(ctx, "expected decimal-string integers");
    }
}

} // namespace

LieAlgebra LieAlgebra::from_json(const nlohmann::json& j, bool allow_multiple) {
    if (!j.is_object())
        schema_error("(root)", "expected object");
    if (!j.contains("dim") || !j.at("dim").is_number_integer())
        schema_error("dim", "required integer");
    const int n = j.at("dim").get<int>();
    if (n <= 0)
        schema_error("dim", "must be positive");
    if (!j.contains("names") || !j.at("names").is_array())
        schema_error("names", "required array");
    auto names = j.at("names").get<std::vector<std::string>>();
    if (static_cast<int>(names.size()) != n)
        schema_error("names", "length must equal dim");
    if (!j.contains("brackets") || !j.at("brackets").is_array())
        schema_error("brackets", "required array");
    std::vector<BracketTerm> structure;
    int idx = 0;
    for (const auto& b : j.at("brackets")) {
        const std::string ctx = "brackets[" + std::to_string(idx++) + "]";
        if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("k"))
            schema_error(ctx, "expected object with 'i','j','k','num','den'");
        BracketTerm t;
        t.i = b.at("i").get<int>();
        t.j = b.at("j").get<int>();
        t.k = b.at("k").get<int>();
        if (t.i < 0 || t.j < 0 || t.k < 0 || t.i >= n || t.j >= n || t.k >= n)
            schema_error(ctx, "index out of range");
        if (t.i >= t.j)
            schema_error(ctx, "requires i < j (antisymmetry is implied)");
        t.c = rational_field(b, ctx);
        structure.push_back(std::move(t));
    }
    if (!j.contains("time_action") || !j.at("time_action").is_array())
        schema_error("time_action", "required array");
    std::vector<Rational> ta;
    idx = 0;
    for (const auto& e : j.at("time_action"))
        ta.push_back(rational_field(e, "time_action[" + std::to_string(idx++) + "]"));
    if (static_cast<int>(ta.size()) != n)
        schema_error("time_action", "length must equal dim");
    std::string label = j.contains("label") ? j.at("label").get<std::string>() : "user";
    return LieAlgebra(label, std::move(names), std::move(structure), std::move(ta), allow_multiple);
}

std::string LieAlgebra::fingerprint() const {
    const std::string canon = to_json().dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

namespace catalog {

namespace {

// rotation generators stored as a12, a13, a23; returns index into that block
int rot_index(int i, int j) {
    if (i == 1 && j == 2) return 0;
    if (i == 1 && j == 3) return 1;
    if (i == 2 && j == 3) return 2;
    return -1;
}

// append c * a_ij (i != j, 1-based spatial indices) to a coefficient list
void add_rot(std::vector<std::pair<int, Rational>>& out, int i, int j, const Rational& c) {
    if (i == j || c.is_zero())
        return;
    if (i < j)
        out.emplace_back(rot_index(i, j), c);
    else
        out.emplace_back(rot_index(j, i), -c);
}

// brackets of the rotation block among itself and on a spatial 3-vector block
// starting at base: [a_ij, v_k] = delta_jk v_i - delta_ik v_j
void rotation_action(std::vector<BracketTerm>& st, int rot_base, int vec_base) {
    static const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
    for (int r = 0; r < 3; ++r) {
        int i = pairs[r][0], j = pairs[r][1];
        for (int k = 1; k <= 3; ++k) {
            std::vector<std::pair<int, Rational>> terms; // (spatial index, coeff)
            if (j == k)
                terms.emplace_back(i, Rational(1));
            if (i == k)
                terms.emplace_back(j, Rational(-1));
            for (auto& [target, c] : terms) {
                int a = rot_base + r;
                int b = vec_base + (k - 1);
                int kk = vec_base + (target - 1);
                if (a < b)
                    st.push_back({a, b, kk, c});
                else
                    st.push_back({b, a, kk, -c});
            }
        }
    }
}

void rotation_self(std::vector<BracketTerm>& st, int rot_base) {
    static const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
    for (int r = 0; r < 3; ++r) {
        for (int s = r + 1; s < 3; ++s) {
            int i = pairs[r][0], j = pairs[r][1];
            int k = pairs[s][0], l = pairs[s][1];
            // [a_ij, a_kl] = d_jk a_il - d_ik a_jl + d_il a_jk - d_jl a_ik
            std::vector<std::pair<int, Rational>> out;
            if (j == k) add_rot(out, i, l, Rational(1));
            if (i == k) add_rot(out, j, l, Rational(-1));
            if (i == l) add_rot(out, j, k, Rational(1));
            if (j == l) add_rot(out, i, k, Rational(-1));
            for (auto& [idx, c] : out)
                st.push_back({rot_base + r, rot_base + s, rot_base + idx, c});
        }
    }
}

} // namespace

LieAlgebra galilean() {
    // basis: a12 a13 a23 | b1 b2 b3 | d1 d2 d3 | tau
    std::vector<std::string> names = {"a12", "a13", "a23", "b1", "b2",
                                      "b3",  "d1",  "d2",  "d3", "tau"};
    std::vector<BracketTerm> st;
    rotation_self(st, 0);
    rotation_action(st, 0, 3); // translations
    rotation_action(st, 0, 6); // boosts
    const int tau = 9;
    for (int k = 0; k < 3; ++k)
        st.push_back({6 + k, tau, 3 + k, Rational(1)}); // [d_k, tau] = b_k
    std::vector<Rational> eps(10, Rational(0));
    eps[tau] = Rational(1);
    return LieAlgebra("galilean", std::move(names), std::move(st), std::move(eps));
}

LieAlgebra milne(int m) {
    if (m < 1)
        throw std::invalid_argument("milne: m must be >= 1");
    // basis: a12 a13 a23 | d0_* | d1_* | ... | dm_* | tau
    std::vector<std::string> names = {"a12", "a13", "a23"};
    for (int n = 0; n <= m; ++n)
        for (int i = 1; i <= 3; ++i)
            names.push_back("d" + std::to_string(n) + "_" + std::to_string(i));
    names.push_back("tau");
    const int dim = 3 * (m + 1) + 4;
    const int tau = dim - 1;
    std::vector<BracketTerm> st;
    rotation_self(st, 0);
    for (int n = 0; n <= m; ++n)
        rotation_action(st, 0, 3 + 3 * n);
    for (int n = 1; n <= m; ++n)
        for (int i = 0; i < 3; ++i)
            st.push_back({3 + 3 * n + i, tau, 3 + 3 * (n - 1) + i, Rational(1)});
    std::vector<Rational> eps(dim, Rational(0));
    eps[tau] = Rational(1);
    return LieAlgebra("milne:" + std::to_string(m), std::move(names), std::move(st), std::move(eps));
}

LieAlgebra abelian(int n) {
    if (n < 1)
        throw std::invalid_argument("abelian: n must be >= 1");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        names.push_back("e" + std::to_string(i));
    return LieAlgebra("abelian:" + std::to_string(n), std::move(names), {},
                      std::vector<Rational>(n, Rational(0)));
}

LieAlgebra heisenberg() {
    std::vector<std::string> names = {"p", "q", "z"};
    std::vector<BracketTerm> st = {{0, 1, 2, Rational(1)}};
    return LieAlgebra("heisenberg", std::move(names), std::move(st),
                      std::vector<Rational>(3, Rational(0)));
}

LieAlgebra by_name(const std::string& name) {
    if (name == "galilean")
        return galilean();
    if (name == "heisenberg")
        return heisenberg();
    auto parse_param = [&](const std::string& prefix) -> int {
        std::string num = name.substr(prefix.size());
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad catalog parameter in '" + name + "'");
        return std::stoi(num);
    };
    if (name.rfind("milne:", 0) == 0)
        return milne(parse_param("milne:"));
    if (name.rfind("abelian:", 0) == 0)
        return abelian(parse_param("abelian:"));
    throw std::invalid_argument("unknown catalog algebra '" + name + "'");
}

} // namespace catalog

} // namespace liexp
