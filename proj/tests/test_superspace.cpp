#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ospssv/rep.hpp"
#include "oracle_dense.hpp"

#include <random>

using namespace ospssv;
using ospssv::testing::DenseAction;

namespace {

TensorOperator<Rational> random_op(Signature sig, int legs, int terms, std::mt19937& rng) {
    TensorOperator<Rational> x(sig, legs);
    std::uniform_int_distribution<int> idx(1, sig.dim());
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<int> row(static_cast<std::size_t>(legs)), col(static_cast<std::size_t>(legs));
    for (int t = 0; t < terms; ++t) {
        for (int a = 0; a < legs; ++a) {
            row[static_cast<std::size_t>(a)] = idx(rng);
            col[static_cast<std::size_t>(a)] = idx(rng);
        }
        x.add_term(row, col, Rational(coeff(rng)));
    }
    return x;
}

} // namespace

TEST_CASE("signature index data") {
    Signature s(3, 1); // indices 1..5, odd ones are 1 and 5
    CHECK(s.dim() == 5);
    CHECK(s.superdim() == 1);
    CHECK(s.dual_coxeter() == -1);
    for (int i = 1; i <= 5; ++i)
        CHECK(s.prime(s.prime(i)) == i);
    CHECK(s.parity(1) == 1);
    CHECK(s.parity(2) == 0);
    CHECK(s.parity(4) == 0);
    CHECK(s.parity(5) == 1);
    for (int i = 1; i <= 5; ++i)
        CHECK(s.parity(i) == s.parity(s.prime(i)));
    CHECK(s.sign(4) == 1);
    CHECK(s.sign(5) == -1);
    int sdim = 0;
    for (int i = 1; i <= 5; ++i)
        sdim += s.parity(i) ? -1 : 1;
    CHECK(sdim == s.superdim());
}

TEST_CASE("compose agrees with the dense action oracle") {
    std::mt19937 rng(23);
    for (Signature sig : {Signature(1, 1), Signature(2, 1), Signature(3, 0)}) {
        for (int legs : {1, 2, 3}) {
            for (int t = 0; t < 6; ++t) {
                auto x = random_op(sig, legs, 6, rng);
                auto y = random_op(sig, legs, 6, rng);
                auto z = compose(x, y);
                CHECK(DenseAction::of(z) == matmul(DenseAction::of(x), DenseAction::of(y)));
            }
        }
    }
}

TEST_CASE("P and Q satisfy their defining squares") {
    Signature sig(1, 1);
    auto P = build_P(1, 2, 2, sig);
    auto Q = build_Q(1, 2, 2, sig);
    CHECK(compose(P, P) == TensorOperator<Rational>::identity(sig, 2, Rational(1)));
    TensorOperator<Rational> scaled = Q;
    scaled.scale(Rational(sig.superdim()));
    CHECK(compose(Q, Q) == scaled); // (M-2n) Q = -Q here
    CHECK(compose(P, Q) == Q);
    CHECK(compose(Q, P) == Q);
}

TEST_CASE("supertrace examples") {
    for (Signature sig : {Signature(1, 1), Signature(2, 1), Signature(3, 1)}) {
        auto Q = build_Q(1, 2, 2, sig);
        CHECK(Q.partial_supertrace({2}) ==
              TensorOperator<Rational>::identity(sig, 1, Rational(1)));
        auto P = build_P(1, 2, 2, sig);
        CHECK(P.partial_supertrace({1}) ==
              TensorOperator<Rational>::identity(sig, 1, Rational(1)));
        CHECK(P.partial_supertrace({1, 2}).scalar() == Rational(sig.superdim()));
    }
    Signature s31(3, 1);
    auto id3 = TensorOperator<Rational>::identity(s31, 3, Rational(1));
    CHECK(id3.partial_supertrace({1, 2, 3}).scalar() == Rational(1)); // (3-2)^3
}

TEST_CASE("iterated partial traces match a single joint trace") {
    std::mt19937 rng(29);
    Signature sig(2, 1);
    for (int t = 0; t < 8; ++t) {
        auto x = random_op(sig, 3, 10, rng);
        CHECK(x.partial_supertrace({1}).partial_supertrace({1}) ==
              x.partial_supertrace({1, 2}));
        CHECK(x.partial_supertrace({3}).partial_supertrace({1}) ==
              x.partial_supertrace({1, 3}));
    }
}

TEST_CASE("rho on generators and the symmetriser") {
    Signature sig(1, 1);
    CHECK(rho(generator(GenKind::Transposition, 1, 2, 2), sig) == build_P(1, 2, 2, sig));
    CHECK(rho(generator(GenKind::Contraction, 1, 2, 2), sig) == build_Q(1, 2, 2, sig));

    // s^(2) at omega = -1: (1 + P)/2 + Q
    auto s2 = rho(brauer_symmetriser(2, 2), sig);
    auto expected = TensorOperator<Rational>::identity(sig, 2, Rational(1));
    expected += build_P(1, 2, 2, sig);
    expected.scale(Rational(1, 2));
    expected += build_Q(1, 2, 2, sig);
    CHECK(s2 == expected);
    CHECK(compose(s2, s2) == s2);

    CHECK_THROWS_AS(rho(brauer_symmetriser(2, 2), Signature(0, 0)), PoleAtEvaluation);
}

TEST_CASE("rho respects long generators") {
    Signature sig(2, 1);
    CHECK(rho(generator(GenKind::Transposition, 1, 3, 3), sig) == build_P(1, 3, 3, sig));
    CHECK(rho(generator(GenKind::Contraction, 1, 3, 3), sig) == build_Q(1, 3, 3, sig));
}

TEST_CASE("rho is multiplicative on random elements") {
    std::mt19937_64 seed_rng(5);
    VerificationReport rep = rep_relations_check(Signature(1, 1), 3, 7);
    CHECK(rep.all_passed());
}

TEST_CASE("qxq identity") {
    VerificationReport rep = qxq_check(Signature(1, 1), 2, 3);
    for (const auto& c : rep.checks)
        CHECK_MESSAGE(c.status == CheckStatus::Pass, c.name);
    VerificationReport rep2 = qxq_check(Signature(2, 1), 2, 4);
    CHECK(rep2.all_passed());
}

TEST_CASE("embed pads with identity legs") {
    Signature sig(1, 1);
    auto P = build_P(1, 2, 2, sig);
    auto lifted = P.embed({1, 2}, 3);
    CHECK(lifted == build_P(1, 2, 3, sig));
    auto shifted = P.embed({2, 3}, 3);
    CHECK(shifted == build_P(2, 3, 3, sig));
}
