#pragma once

#include "liexp/group.hpp"
#include "liexp/poly.hpp"
#include "liexp/rational.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace liexp::testutil {

inline Rational random_rational(std::mt19937_64& rng, int num_range = 6, int den_range = 3) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_range);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng) {
    Rational r;
    do {
        r = random_rational(rng);
    } while (r.is_zero());
    return r;
}

/// Random sparse polynomial over the given variables: up to max_terms
/// monomials of total degree <= max_degree.
inline MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars,
                             int max_degree, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> dg(0, max_degree);
    std::uniform_int_distribution<size_t> pick(0, vars.empty() ? 0 : vars.size() - 1);
    MultiPoly p;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<int> exps(vars.size(), 0);
        int deg = dg(rng);
        for (int d = 0; d < deg && !vars.empty(); ++d)
            exps[pick(rng)] += 1;
        p = p + MultiPoly::monomial(vars, exps, random_rational(rng));
    }
    return p;
}

/// Random normalized phase law over a group model: every monomial carries at
/// least one group parameter, so theta vanishes at the identity.
inline PhaseFunction random_theta(std::mt19937_64& rng, const GroupModel& model, int max_degree,
                                  int terms) {
    std::vector<std::string> params = model.param_names();
    std::vector<std::string> all = params;
    all.insert(all.end(), {"x1", "x2", "x3", "t"});
    std::uniform_int_distribution<size_t> pick_param(0, params.size() - 1);
    std::uniform_int_distribution<size_t> pick_any(0, all.size() - 1);
    std::uniform_int_distribution<int> extra(0, max_degree - 1);
    MultiPoly theta;
    for (int k = 0; k < terms; ++k) {
        std::map<std::string, int> exps;
        exps[params[pick_param(rng)]] += 1;
        int e = extra(rng);
        for (int d = 0; d < e; ++d)
            exps[all[pick_any(rng)]] += 1;
        std::vector<std::string> vars;
        std::vector<int> pows;
        for (auto& [name, p] : exps) {
            vars.push_back(name);
            pows.push_back(p);
        }
        theta = theta + MultiPoly::monomial(vars, pows, random_rational(rng));
    }
    return {theta};
}

inline std::vector<Rational> random_element(std::mt19937_64& rng, const GroupModel& model) {
    std::vector<Rational> c;
    for (int i = 0; i < model.dim(); ++i)
        c.push_back(random_rational(rng, 3, 2));
    return c;
}

} // namespace liexp::testutil
