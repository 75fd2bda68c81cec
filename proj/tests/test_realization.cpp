#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liexp/realization.hpp"
#include "testutil.hpp"

#include <random>

using namespace liexp;

namespace {

MultiPoly v(const std::string& n) { return MultiPoly::variable(n); }

} // namespace

TEST_CASE("closed form on the zero phase") {
    GroupModel model(2);
    CHECK(xi_matrix_from_theta(model, PhaseFunction{MultiPoly()}).is_zero());
}

TEST_CASE("closed form on the level-1 family member of the order-2 model") {
    GroupModel model(2);
    // theta = -(dA/dt).x realizes the gamma1 chain: P(0,1)=1, P(0,2)=t, P(1,2)=t^2/2
    auto theta = family_theta(model, 1);
    auto xi = xi_matrix_from_theta(model, theta);
    auto t = v("t");
    for (int i = 1; i <= 3; ++i) {
        CHECK(xi.entry(model.param_index(0, i), model.param_index(1, i)) ==
              MultiPoly::constant(Rational(1)));
        CHECK(xi.entry(model.param_index(0, i), model.param_index(2, i)) == t);
        CHECK(xi.entry(model.param_index(1, i), model.param_index(2, i)) ==
              scale(t * t, Rational(1, 2)));
    }
    // off-diagonal spatial components vanish
    CHECK(xi.entry(model.param_index(0, 1), model.param_index(1, 2)).is_zero());
    // time row is zero in the closed form
    for (int k = 0; k < model.time_index(); ++k)
        CHECK(xi.entry(k, model.time_index()).is_zero());
}

TEST_CASE("the two computation paths agree exactly on random phases") {
    std::mt19937_64 rng(20240817);
    GroupModel model(2);
    for (int trial = 0; trial < 25; ++trial) {
        auto theta = testutil::random_theta(rng, model, 3, 3);
        auto closed = xi_matrix_from_theta(model, theta);
        auto taylor = infinitesimal_from_exponent(model, exponent_from_theta(model, theta));
        for (int a = 0; a < model.time_index(); ++a)
            for (int b = a + 1; b < model.time_index(); ++b)
                CHECK(closed.entry(a, b) == taylor.entry(a, b));
    }
}

TEST_CASE("galilean standard theta realizes the mass class") {
    GroupModel model(1);
    auto theta = galilean_standard_theta(Rational(1));
    auto xi = xi_matrix_from_theta(model, theta);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            MultiPoly e = xi.entry(model.param_index(0, i), model.param_index(1, j));
            if (i == j)
                CHECK(e == MultiPoly::constant(Rational(1)));
            else
                CHECK(e.is_zero());
        }
    auto zero_mass = xi_matrix_from_theta(model, galilean_standard_theta(Rational(0)));
    CHECK(zero_mass.is_zero());

    auto an = analyze_theta(model, theta);
    CHECK(an.delta_diagonal);
    CHECK(an.fits_table);
    REQUIRE(an.constants.size() == 1);
    CHECK(an.constants[0] == Rational(1));
}

TEST_CASE("realizable subspace of the order-2 model") {
    auto rep = realizable_subspace(2);
    CHECK(rep.class_dim == 3);
    CHECK(rep.realizable_dim == 2);
    REQUIRE(rep.obstructions.size() == 1);
    CHECK(rep.obstructions[0].l == 1);
    CHECK(rep.obstructions[0].q == 2);
    CHECK(rep.obstructions[0].forced_zero);
    CHECK(rep.family.size() == 2);
    CHECK(rep.realized_constants == std::vector<std::string>{"gamma1", "gamma2"});
}

TEST_CASE("realizable subspace of the order-1 and order-3 models") {
    auto r1 = realizable_subspace(1);
    CHECK(r1.class_dim == 1);
    CHECK(r1.realizable_dim == 1);
    CHECK(r1.obstructions.empty());

    auto r3 = realizable_subspace(3);
    CHECK(r3.class_dim == 6);
    CHECK(r3.realizable_dim == 3);
    REQUIRE(r3.obstructions.size() == 3);
    for (const auto& o : r3.obstructions)
        CHECK(o.forced_zero);
}

TEST_CASE("realized family members are genuine cocycles of the full algebra") {
    for (int m : {1, 2, 3}) {
        GroupModel model(m);
        auto g = catalog::milne(m);
        for (int j = 1; j <= m; ++j) {
            auto xi = xi_matrix_from_theta(model, family_theta(model, j));
            // embed into the rotation-including algebra and check the identity
            InfExponent embedded(g);
            for (int a = 0; a < model.time_index(); ++a)
                for (int b = a + 1; b < model.time_index(); ++b) {
                    MultiPoly e = xi.entry(a, b);
                    if (!e.is_zero())
                        embedded.set_entry(3 + a, 3 + b, e);
                }
            CHECK(cocycle_residual(embedded).empty());
        }
    }
}

TEST_CASE("realized directions span an m-dimensional subspace of the class space") {
    for (int m : {1, 2, 3}) {
        GroupModel model(m);
        auto g = catalog::milne(m);
        const int D = default_degree_bound(g);
        auto sols = solve_cocycles(build_jacobi_system(g, D));
        const int ncols = InfExponent::pair_count(g.dim()) * (D + 1);
        RowSpace solution_space(ncols);
        for (const auto& vraw : sols.raw)
            solution_space.insert(vraw);
        RowSpace realized(ncols);
        for (int j = 1; j <= m; ++j) {
            auto xi = xi_matrix_from_theta(model, family_theta(model, j));
            InfExponent embedded(g);
            for (int a = 0; a < model.time_index(); ++a)
                for (int b = a + 1; b < model.time_index(); ++b) {
                    MultiPoly e = xi.entry(a, b);
                    if (!e.is_zero())
                        embedded.set_entry(3 + a, 3 + b, e);
                }
            auto vec = exponent_coefficients(embedded, D);
            CHECK(solution_space.contains(vec));
            CHECK(realized.insert(vec));
        }
        CHECK(realized.dim() == m);
    }
}

TEST_CASE("theta analysis flags non-diagonal tables") {
    GroupModel model(1);
    // theta quadratic in x produces x-dependent entries
    PhaseFunction theta{v("v1_1") * v("x1") * v("x1")};
    auto an = analyze_theta(model, theta);
    CHECK_FALSE(an.delta_diagonal);
}

TEST_CASE("report serialization round trips") {
    auto rep = realizable_subspace(2);
    auto j = rep.to_json();
    auto dumped = j.dump(2);
    CHECK(nlohmann::json::parse(dumped).dump(2) == dumped);
    CHECK(j.at("realizable_dimension").get<int>() == 2);
    GroupModel model(1);
    auto an = analyze_theta(model, galilean_standard_theta(Rational(1)));
    auto ja = an.to_json(model);
    CHECK(ja.at("mass").at("num").get<std::string>() == "1");
    CHECK(an.to_text(model).find("mass: 1") != std::string::npos);
}
