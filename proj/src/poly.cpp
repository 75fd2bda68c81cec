#include "liexp/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace liexp {

bool MultiPoly::GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db)
        return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void MultiPoly::insert_term(const Exponents& e, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void MultiPoly::prune() {
    if (vars_.empty())
        return;
    std::vector<char> used(vars_.size(), 0);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                used[i] = 1;
    size_t keep = 0;
    for (char u : used)
        keep += u;
    if (keep == vars_.size())
        return;
    std::vector<std::string> nv;
    nv.reserve(keep);
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i])
            nv.push_back(vars_[i]);
    TermMap nt;
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(keep);
        for (size_t i = 0; i < e.size(); ++i)
            if (used[i])
                ne.push_back(e[i]);
        nt.emplace(std::move(ne), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

MultiPoly MultiPoly::remapped(const std::vector<std::string>& union_vars) const {
    MultiPoly r;
    r.vars_ = union_vars;
    std::vector<int> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(union_vars.begin(), union_vars.end(), vars_[i]);
        pos[i] = static_cast<int>(it - union_vars.begin());
    }
    for (const auto& [e, c] : terms_) {
        Exponents ne(union_vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i)
            ne[pos[i]] = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

std::vector<std::string> MultiPoly::var_union(const MultiPoly& a, const MultiPoly& b) {
    std::vector<std::string> u;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(u));
    return u;
}

MultiPoly MultiPoly::constant(const Rational& c) {
    MultiPoly p;
    if (!c.is_zero())
        p.terms_.emplace(Exponents{}, c);
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponents exps, const Rational& coeff) {
    if (vars.size() != exps.size())
        throw std::invalid_argument("monomial: vars/exps arity mismatch");
    std::vector<size_t> order(vars.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return vars[i] < vars[j]; });
    MultiPoly p;
    p.vars_.reserve(vars.size());
    Exponents e;
    e.reserve(vars.size());
    for (size_t k : order) {
        if (!p.vars_.empty() && p.vars_.back() == vars[k])
            throw std::invalid_argument("monomial: duplicate variable " + vars[k]);
        if (exps[k] < 0)
            throw std::invalid_argument("monomial: negative exponent");
        p.vars_.push_back(vars[k]);
        e.push_back(exps[k]);
    }
    p.insert_term(e, coeff);
    p.prune();
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty())
        return Rational(0);
    if (!is_constant())
        throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int MultiPoly::var_index(const std::string& name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name)
        return -1;
    return static_cast<int>(it - vars_.begin());
}

int MultiPoly::degree_in(const std::string& var) const {
    if (terms_.empty())
        return -1;
    int idx = var_index(var);
    if (idx < 0)
        return 0;
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e[idx]);
    return d;
}

int MultiPoly::total_degree() const {
    if (terms_.empty())
        return -1;
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

MultiPoly MultiPoly::coefficient_of(const std::string& var, int k) const {
    int idx = var_index(var);
    if (idx < 0) {
        if (k == 0)
            return *this;
        return MultiPoly();
    }
    MultiPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] != k)
            continue;
        Exponents ne = e;
        ne[idx] = 0;
        r.insert_term(ne, c);
    }
    r.prune();
    return r;
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.vars_ == b.vars_) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_)
            r.insert_term(e, c);
        r.prune();
        return r;
    }
    auto u = MultiPoly::var_union(a, b);
    MultiPoly r = a.remapped(u);
    MultiPoly bb = b.remapped(u);
    for (const auto& [e, c] : bb.terms_)
        r.insert_term(e, c);
    r.prune();
    return r;
}

MultiPoly sub(const MultiPoly& a, const MultiPoly& b) {
    return add(a, scale(b, Rational(-1)));
}

MultiPoly scale(const MultiPoly& a, const Rational& c) {
    if (c.is_zero())
        return MultiPoly();
    MultiPoly r = a;
    for (auto& [e, v] : r.terms_)
        v *= c;
    return r;
}

MultiPoly mul(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero())
        return MultiPoly();
    auto u = MultiPoly::var_union(a, b);
    MultiPoly aa = a.remapped(u);
    MultiPoly bb = b.remapped(u);
    MultiPoly r;
    r.vars_ = u;
    MultiPoly::Exponents e(u.size());
    for (const auto& [ea, ca] : aa.terms_) {
        for (const auto& [eb, cb] : bb.terms_) {
            for (size_t i = 0; i < u.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.insert_term(e, ca * cb);
        }
    }
    r.prune();
    return r;
}

MultiPoly pow_int(const MultiPoly& a, int k) {
    if (k < 0)
        throw std::invalid_argument("pow_int: negative exponent");
    MultiPoly r = MultiPoly::constant(Rational(1));
    for (int i = 0; i < k; ++i)
        r = mul(r, a);
    return r;
}

MultiPoly differentiate(const MultiPoly& a, const std::string& var) {
    int idx = a.var_index(var);
    if (idx < 0) {
        if (a.is_zero() || a.is_constant())
            return MultiPoly();
        // Unknown to this polynomial: formally d/dvar of terms without var is 0,
        // but an undeclared name in a non-trivial context is a caller bug.
        return MultiPoly();
    }
    MultiPoly r;
    r.vars_ = a.vars();
    for (const auto& [e, c] : a.terms()) {
        if (e[idx] == 0)
            continue;
        MultiPoly::Exponents ne = e;
        ne[idx] -= 1;
        r.insert_term(ne, c * Rational(e[idx]));
    }
    r.prune();
    return r;
}

MultiPoly integrate(const MultiPoly& a, const std::string& var) {
    if (a.is_zero())
        return MultiPoly();
    MultiPoly base = a;
    if (base.var_index(var) < 0) {
        auto u = MultiPoly::var_union(base, MultiPoly::variable(var));
        base = base.remapped(u);
    }
    int idx = base.var_index(var);
    MultiPoly r;
    r.vars_ = base.vars();
    for (const auto& [e, c] : base.terms()) {
        MultiPoly::Exponents ne = e;
        ne[idx] += 1;
        r.insert_term(ne, c / Rational(ne[idx]));
    }
    r.prune();
    return r;
}

MultiPoly substitute(const MultiPoly& a, const std::map<std::string, MultiPoly>& bindings) {
    if (a.is_zero())
        return MultiPoly();
    bool relevant = false;
    for (const auto& v : a.vars())
        if (bindings.count(v))
            relevant = true;
    if (!relevant)
        return a;
    // cached powers per variable
    std::unordered_map<int, std::vector<MultiPoly>> powers;
    auto power_of = [&](int idx, int k) -> const MultiPoly& {
        auto& vec = powers[idx];
        if (vec.empty()) {
            auto it = bindings.find(a.vars()[idx]);
            const MultiPoly base = (it != bindings.end()) ? it->second : MultiPoly::variable(a.vars()[idx]);
            vec.push_back(MultiPoly::constant(Rational(1)));
            vec.push_back(base);
        }
        while (static_cast<int>(vec.size()) <= k)
            vec.push_back(mul(vec.back(), vec[1]));
        return vec[k];
    };
    MultiPoly r;
    for (const auto& [e, c] : a.terms()) {
        MultiPoly term = MultiPoly::constant(c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                term = mul(term, power_of(static_cast<int>(i), e[i]));
        r = add(r, term);
    }
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return add(a, b); }
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return sub(a, b); }
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return mul(a, b); }
MultiPoly MultiPoly::operator-() const { return scale(*this, Rational(-1)); }

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

std::string MultiPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        if (first) {
            if (coeff.sign() < 0) {
                os << "-";
                coeff = -coeff;
            }
            first = false;
        } else if (coeff.sign() < 0) {
            os << " - ";
            coeff = -coeff;
        } else {
            os << " + ";
        }
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars_[i];
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << coeff.str();
        } else if (coeff.is_one()) {
            os << mono;
        } else {
            os << coeff.str() << "*" << mono;
        }
    }
    return os.str();
}

nlohmann::json MultiPoly::to_json() const {
    nlohmann::json j;
    j["vars"] = vars_;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::json t;
        t["exps"] = e;
        t["num"] = c.num().get_str();
        t["den"] = c.den().get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly MultiPoly::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw std::invalid_argument("polynomial JSON must have 'vars' and 'terms'");
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    MultiPoly r;
    for (const auto& t : j.at("terms")) {
        Exponents e = t.at("exps").get<Exponents>();
        if (e.size() != vars.size())
            throw std::invalid_argument("polynomial JSON: exps arity mismatch");
        Rational c(mpz_class(t.at("num").get<std::string>()), mpz_class(t.at("den").get<std::string>()));
        r = add(r, monomial(vars, e, c));
    }
    return r;
}

} // namespace liexp
