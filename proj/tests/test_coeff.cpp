#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ospssv/ratfun.hpp"

#include <random>

using namespace ospssv;

namespace {

VarPoly w() { return VarPoly::variable(Var::Omega); }
VarPoly wc(long c) { return VarPoly::constant(Rational(c), Var::Omega); }

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

VarPoly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c)
        x = random_rational(rng);
    return VarPoly(Var::Omega, std::move(c));
}

RatFun random_ratfun(std::mt19937& rng) {
    VarPoly den = random_poly(rng, 2);
    while (den.is_zero())
        den = random_poly(rng, 2);
    return RatFun::of(random_poly(rng, 3), den);
}

} // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(-6, -8) == Rational(3, 4));
    CHECK(Rational(6, -8) == Rational(-3, 4));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0).denominator() == 1);
    CHECK(Rational(2, 3) + Rational(1, 3) == Rational(1));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DivisionByZero);
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational::from_string("22/7") == Rational(22, 7));
}

TEST_CASE("ratfun_normalize reduces to canonical form") {
    // (w^2 - 1, w - 1) -> w + 1
    RatFun f = RatFun::of(w() * w() - wc(1), w() - wc(1));
    CHECK(f == RatFun(w() + wc(1)));
    CHECK(f.is_polynomial());

    // (0, w + 2) -> 0
    CHECK(RatFun::of(VarPoly::zero(Var::Omega), w() + wc(2)).is_zero());

    // (2w, 2w + 4) -> w / (w + 2)
    RatFun g = RatFun::of(wc(2) * w(), wc(2) * w() + wc(4));
    CHECK(g.num() == w());
    CHECK(g.den() == w() + wc(2));

    CHECK_THROWS_AS(RatFun::of(w(), VarPoly::zero(Var::Omega)), DivisionByZero);
}

TEST_CASE("ratfun_normalize is idempotent") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        RatFun f = random_ratfun(rng);
        CHECK(RatFun::of(f.num(), f.den()) == f);
    }
}

TEST_CASE("ratfun_eval") {
    RatFun g = RatFun::of(w(), w() + wc(2));
    CHECK(g.eval(Rational(1)) == Rational(1, 3));
    CHECK_THROWS_AS(g.eval(Rational(-2)), PoleAtEvaluation);
    CHECK_FALSE(g.pole_free_at(Rational(-2)));

    // gamma_3 = (w+1)/(w+4) vanishes at w = -1
    CHECK(gamma_factor(3).eval(Rational(-1)) == Rational(0));
    CHECK(gamma_factor(3) == RatFun::of(w() + wc(1), w() + wc(4)));
}

TEST_CASE("eval is multiplicative where defined") {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        RatFun f = random_ratfun(rng);
        RatFun g = random_ratfun(rng);
        Rational x = random_rational(rng);
        if (f.pole_free_at(x) && g.pole_free_at(x) && (f * g).pole_free_at(x))
            CHECK((f * g).eval(x) == f.eval(x) * g.eval(x));
    }
}

TEST_CASE("half_binomial") {
    CHECK(half_binomial(2, 0) == wc(1));
    CHECK(half_binomial(2, 1) == VarPoly(Var::Omega, {Rational(0), Rational(1, 2)}));
    CHECK(half_binomial(3, 1) == VarPoly(Var::Omega, {Rational(1), Rational(1, 2)}));
    CHECK(half_binomial(4, 2).degree() == 2);
    CHECK_THROWS_AS(half_binomial(2, -1), InvalidArgument);
}

TEST_CASE("ring axioms on randomized inputs") {
    std::mt19937 rng(3);
    for (int i = 0; i < 40; ++i) {
        RatFun a = random_ratfun(rng), b = random_ratfun(rng), c = random_ratfun(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + RatFun(0) == a);
        CHECK(a * RatFun(1) == a);
        CHECK(a - a == RatFun(0));
        if (!a.is_zero())
            CHECK(a * a.inverse() == RatFun(1));
    }
}

TEST_CASE("polynomial divmod and gcd") {
    VarPoly a = (w() + wc(1)) * (w() + wc(2)) * (w() - wc(3));
    VarPoly b = (w() + wc(2)) * (w() + wc(5));
    CHECK(VarPoly::gcd(a, b) == w() + wc(2));
    VarPoly q, r;
    VarPoly::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(VarPoly::gcd(VarPoly::zero(), b) == b.monic());
}

TEST_CASE("canonical text rendering") {
    VarPoly p = (w() * w() + wc(3) * w() + wc(2)) * Rational(1, 12);
    CHECK(p.str() == "(ω^2 + 3ω + 2)/12");
    RatFun g = RatFun::of(w(), w() + wc(2));
    CHECK(g.str() == "ω/(ω + 2)");
    CHECK(VarPoly::zero().str() == "0");
    CHECK(wc(-5).str() == "-5");
    VarPoly k = VarPoly::variable(Var::K) + VarPoly::constant(Rational(1), Var::K);
    CHECK(k.str() == "K + 1");
}

TEST_CASE("K-polynomials stay separate from omega") {
    VarPoly k = VarPoly::variable(Var::K);
    CHECK_THROWS_AS(k + w(), InvalidArgument);
    CHECK((k + VarPoly::constant(Rational(2), Var::K)).eval(Rational(-2)) == Rational(0));
}
