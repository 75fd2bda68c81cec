#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liexp/poly.hpp"
#include "testutil.hpp"

using namespace liexp;
using testutil::random_poly;
using testutil::random_rational;

namespace {
MultiPoly var(const std::string& n) { return MultiPoly::variable(n); }
MultiPoly c(long n, long d = 1) { return MultiPoly::constant(Rational(n, d)); }
} // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational::from_string("-7/21") == Rational(-1, 3));
    CHECK(Rational(3).str() == "3");
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK_THROWS(Rational::from_string("1/0"));
}

TEST_CASE("additive inverse and ring identities") {
    auto t = var("t");
    CHECK((t + (-t)).is_zero());
    CHECK((t + c(1)) * (t - c(1)) == t * t - c(1));
    CHECK(c(1, 2) * t * t * (c(2) * t) == t * t * t);
}

TEST_CASE("differentiate") {
    auto t = var("t");
    auto g1 = var("g1");
    auto g2 = var("g2");
    // d/dt (1/2 g1 t^2 + g2 t) = g1 t + g2
    auto p = c(1, 2) * g1 * t * t + g2 * t;
    CHECK(differentiate(p, "t") == g1 * t + g2);
    CHECK(differentiate(c(5), "t").is_zero());
    auto x1 = var("x1");
    auto x2 = var("x2");
    CHECK(differentiate(t * t * x1 * x2, "x1") == t * t * x2);
}

TEST_CASE("integrate") {
    auto t = var("t");
    CHECK(integrate(var("g1"), "t") == var("g1") * t);
    CHECK(integrate(MultiPoly(), "t").is_zero());
    CHECK(integrate(t * t, "t") == c(1, 3) * t * t * t);
}

TEST_CASE("substitute") {
    auto t = var("t");
    auto b = var("b");
    CHECK(substitute(t * t, {{"t", t + b}}) == t * t + c(2) * b * t + b * b);
    auto x1 = var("x1");
    auto boosted = x1 - var("v") * t;
    CHECK(substitute(x1, {{"x1", boosted}}) == boosted);
    auto p = c(3) * t * t + c(2) * t + c(7);
    CHECK(substitute(p, {{"t", c(0)}}) == c(7));
}

TEST_CASE("canonical form prunes unused variables") {
    auto t = var("t");
    auto x = var("x");
    auto p = t * x - t * x + t; // x disappears
    CHECK(p == t);
    CHECK(p.vars().size() == 1);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(12345);
    const std::vector<std::string> vars = {"t", "x1", "x2"};
    for (int i = 0; i < 200; ++i) {
        auto a = random_poly(rng, vars, 3, 4);
        auto b = random_poly(rng, vars, 3, 4);
        auto d = random_poly(rng, vars, 3, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + d == a + (b + d));
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);
    }
}

TEST_CASE("differentiate after integrate is the identity") {
    std::mt19937_64 rng(777);
    const std::vector<std::string> vars = {"t", "x1", "g1"};
    for (int i = 0; i < 120; ++i) {
        auto p = random_poly(rng, vars, 4, 5);
        CHECK(differentiate(integrate(p, "t"), "t") == p);
    }
}

TEST_CASE("substitute is a ring homomorphism") {
    std::mt19937_64 rng(4242);
    const std::vector<std::string> vars = {"t", "x1"};
    for (int i = 0; i < 80; ++i) {
        auto a = random_poly(rng, vars, 3, 3);
        auto b = random_poly(rng, vars, 3, 3);
        std::map<std::string, MultiPoly> bind = {
            {"t", random_poly(rng, {"u", "w"}, 2, 3)},
            {"x1", random_poly(rng, {"u"}, 2, 2)},
        };
        CHECK(substitute(a * b, bind) == substitute(a, bind) * substitute(b, bind));
        CHECK(substitute(a + b, bind) == substitute(a, bind) + substitute(b, bind));
    }
}

TEST_CASE("coefficient extraction") {
    auto t = var("t");
    auto x = var("x1");
    auto p = c(2) * t * t * x + c(3) * t + c(5);
    CHECK(p.coefficient_of("t", 2) == c(2) * x);
    CHECK(p.coefficient_of("t", 1) == c(3));
    CHECK(p.coefficient_of("t", 0) == c(5));
    CHECK(p.coefficient_of("t", 3).is_zero());
    CHECK(p.degree_in("t") == 2);
    CHECK(p.total_degree() == 3);
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        auto p = random_poly(rng, {"t", "x1", "v0_1"}, 3, 5);
        auto j = p.to_json();
        CHECK(MultiPoly::from_json(j) == p);
        CHECK(MultiPoly::from_json(nlohmann::json::parse(j.dump())) == p);
    }
    // big integers survive
    auto big = MultiPoly::constant(Rational(mpz_class("123456789012345678901234567890"), mpz_class("7")));
    CHECK(MultiPoly::from_json(big.to_json()) == big);
}

TEST_CASE("string rendering is stable") {
    auto t = var("t");
    auto p = c(1, 2) * t * t - t + c(1);
    CHECK(p.str() == "1 - t + 1/2*t^2");
    CHECK(MultiPoly().str() == "0");
}
