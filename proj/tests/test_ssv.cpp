#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ospssv/rep.hpp"
#include "ospssv/ssv.hpp"

using namespace ospssv;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<Partition>& ps) {
    std::vector<std::vector<int>> out;
    for (const auto& p : ps)
        out.push_back(p.parts);
    return out;
}

} // namespace

TEST_CASE("even-length partitions in reverse-lex order") {
    CHECK(parts_of(partitions_even_length(2)) == std::vector<std::vector<int>>{{1, 1}});
    CHECK(parts_of(partitions_even_length(3)) == std::vector<std::vector<int>>{{2, 1}});
    CHECK(parts_of(partitions_even_length(4)) ==
          std::vector<std::vector<int>>{{3, 1}, {2, 2}, {1, 1, 1, 1}});
    CHECK_THROWS_AS(partitions_even_length(1), InvalidArgument);
}

TEST_CASE("cycle counts") {
    CHECK(cycle_count(Partition({1, 1})) == Rational(1));
    CHECK(cycle_count(Partition({2, 1})) == Rational(3));
    CHECK(cycle_count(Partition({2, 2})) == Rational(3));
    Rational total(0);
    for (const auto& p : all_partitions(4))
        total += cycle_count(p);
    CHECK(total == Rational(24));
}

TEST_CASE("weight polynomials") {
    CHECK(y_poly(2, 2) == VarPoly::constant(Rational(1), Var::T));
    VarPoly t = VarPoly::variable(Var::T);
    CHECK(y_poly(3, 2) == (t + VarPoly::constant(Rational(2), Var::T)) * Rational(1, 3));
    CHECK(y_poly(4, 2) == (t + VarPoly::constant(Rational(2), Var::T)) *
                              (t + VarPoly::constant(Rational(3), Var::T)) * Rational(1, 12));
    CHECK_THROWS_AS(y_poly(3, 1), InvalidArgument);
}

TEST_CASE("phi_2 is the half-P contribution") {
    // str_a F[r]_a = 0 kills the identity part of H^(2), so
    // phi_2 = (1/2) str_{1,2} P_12 F[-1]_1 F[-1]_2
    for (Signature sig : {Signature(1, 1), Signature(3, 0)}) {
        Uea uea(sig);
        SSVector phi = phi_integral(sig, 2);
        UTensorOp acc = lift(build_P(1, 2, 2, sig));
        acc = compose(acc, f_matrix(-1, 1, 2, uea));
        acc = compose(acc, f_matrix(-1, 2, 2, uea));
        VacuumElement direct = vacuum_apply(acc.partial_supertrace({1, 2}).scalar(), uea);
        direct.scale(Rational(1, 2));
        CHECK(phi.value == direct);
        CHECK_FALSE(phi.value.is_zero());
        CHECK(phi.value.is_even());
        CHECK(phi.value.max_K_degree() == 0);
    }
}

TEST_CASE("phi_3 carries the superdimension prefactor") {
    for (Signature sig : {Signature(3, 0), Signature(0, 1)}) {
        Uea uea(sig);
        SSVector phi = phi_integral(sig, 3);
        UTensorOp acc = lift(rho(group_symmetriser(2, 2), sig));
        acc = compose(acc, f_matrix(-2, 1, 2, uea));
        acc = compose(acc, f_matrix(-1, 2, 2, uea));
        VacuumElement direct = vacuum_apply(acc.partial_supertrace({1, 2}).scalar(), uea);
        direct.scale(Rational(sig.superdim() + 1));
        CHECK(phi.value == direct);
    }
    // (1,1): Y_{3,2}(M-2n-1) = 0, so phi_3 vanishes identically
    CHECK(phi_integral(Signature(1, 1), 3).value.is_zero());
}

TEST_CASE("annihilation at the critical level, small instances") {
    for (Signature sig : {Signature(1, 1), Signature(3, 0), Signature(0, 1)}) {
        VerificationReport rep = verify_annihilation(sig, 2);
        for (const auto& c : rep.checks)
            CHECK_MESSAGE(c.status == CheckStatus::Pass, rep.campaign, "/", c.name, ": ",
                          c.witness);
    }
}

TEST_CASE("commutativity of phi_2 and phi_3") {
    VerificationReport rep = verify_commutativity(Signature(3, 0), {2, 3});
    for (const auto& c : rep.checks)
        CHECK_MESSAGE(c.status == CheckStatus::Pass, c.name, ": ", c.witness);
}

TEST_CASE("integral and rational forms") {
    VerificationReport a = integral_rational_equivalence(Signature(3, 0), 2);
    CHECK(a.all_passed());
    CHECK(a.skipped() == 0);

    VerificationReport b = integral_rational_equivalence(Signature(1, 1), 2);
    CHECK(b.all_passed());
    CHECK(b.skipped() == 0);

    // (2,1): omega = 0 is a pole of s^(2); must be reported as singular
    VerificationReport c = integral_rational_equivalence(Signature(2, 1), 2);
    CHECK(c.all_passed());
    CHECK(c.skipped() == 1);

    // (0,1): gamma_2 has a pole at omega = -2
    VerificationReport d = integral_rational_equivalence(Signature(0, 1), 2);
    CHECK(d.skipped() == 1);
}

TEST_CASE("rep identities, small run") {
    VerificationReport rep = verify_rep_identities(Signature(1, 1), 2, 11, 6);
    for (const auto& c : rep.checks)
        CHECK_MESSAGE(c.status == CheckStatus::Pass, c.name, ": ", c.witness);
}

TEST_CASE("cyclic property 1, explicit instance") {
    // x = s_1, y = f[-1]_1 f[-1]_2 at k = m = 2 on labels 0..4
    Signature sig(1, 1);
    Uea uea(sig);
    const int m = 2, legs = 2 * m + 1;
    UTensorOp q2 = compose(lift(build_Q(2, 4, legs, sig)), lift(build_Q(3, 5, legs, sig)));
    UTensorOp x = lift(build_P(2, 3, legs, sig));
    UTensorOp y = compose(f_matrix(-1, 2, legs, uea), f_matrix(-1, 3, legs, uea));
    UTensorOp lhs = compose(compose(q2, compose(x, y)), q2);
    UTensorOp rhs = compose(compose(q2, compose(y, x)), q2);
    CHECK(normalize_entries(lhs, uea, true) == normalize_entries(rhs, uea, true));
}

TEST_CASE("psi relation at k = m = 2") {
    VerificationReport rep = psi_relation_check(Signature(3, 0), 2, 2);
    for (const auto& c : rep.checks)
        CHECK_MESSAGE(c.status == CheckStatus::Pass, c.name, ": ", c.witness);
    CHECK(rep.checks.size() == 3);
}

TEST_CASE("evaluation centrality") {
    VerificationReport rep = ev_centrality_check(Signature(1, 1), 2, Rational(1));
    for (const auto& c : rep.checks)
        CHECK_MESSAGE(c.status == CheckStatus::Pass, c.name, ": ", c.witness);
    VerificationReport rep2 = ev_centrality_check(Signature(0, 1), 2, Rational(2));
    CHECK(rep2.all_passed());
}

TEST_CASE("jm suite") {
    VerificationReport rep = jm_suite(3, 3);
    CHECK(rep.all_passed());
}

TEST_CASE("ssvector json shape") {
    SSVector phi = phi_integral(Signature(1, 1), 2);
    auto j = phi.to_json();
    CHECK(j["M"] == 1);
    CHECK(j["n"] == 1);
    CHECK(j["m"] == 2);
    CHECK(j["terms"].is_array());
    CHECK(j["expansion"].size() == 1);
    CHECK(j["expansion"][0]["lambda"] == nlohmann::json::array({1, 1}));
}
