#include "ospssv/brauer.hpp"
#include "ospssv/report.hpp"

#include <sstream>

namespace ospssv {

namespace {

RatFun omega_plus(long c) {
    return RatFun(VarPoly::variable(Var::Omega) + VarPoly::constant(Rational(c), Var::Omega));
}

// Generators of B_{2m+1} in the 0-based labelling 0..2m.
BrauerElement s0(int a, int b, int big) { return generator(GenKind::Transposition, a + 1, b + 1, big); }
BrauerElement e0(int a, int b, int big) { return generator(GenKind::Contraction, a + 1, b + 1, big); }
BrauerElement phi0(int a, int b, int big) { return s0(a, b, big) - e0(a, b, big); }

// s^(k) on labels 1..k of B_{2m+1}.
BrauerElement sym_shifted(int k, int big) {
    return brauer_symmetriser(k, k).shift_into(1, big);
}

void check_equal(VerificationReport& rep, const std::string& name, const BrauerElement& lhs,
                 const BrauerElement& rhs) {
    if (lhs == rhs) {
        rep.add(Check::pass(name));
    } else {
        rep.add(Check::fail(name, "lhs = " + lhs.str() + "; rhs = " + rhs.str()));
    }
}

void defining_relations(VerificationReport& rep, int n) {
    const RatFun w = RatFun::omega();
    bool ok = true;
    std::string witness;
    auto expect = [&](const BrauerElement& a, const BrauerElement& b, const char* what, int x,
                      int y) {
        if (ok && !(a == b)) {
            ok = false;
            std::ostringstream os;
            os << what << " a=" << x << " b=" << y;
            witness = os.str();
        }
    };
    auto s = [&](int a) { return generator(GenKind::Transposition, a, a + 1, n); };
    auto e = [&](int a) { return generator(GenKind::Contraction, a, a + 1, n); };
    const BrauerElement one = BrauerElement::one(n);
    for (int a = 1; a < n; ++a) {
        expect(s(a) * s(a), one, "s_a^2=1", a, 0);
        expect(e(a) * e(a), w * e(a), "e_a^2=w e_a", a, 0);
        expect(s(a) * e(a), e(a), "s_a e_a=e_a", a, 0);
        expect(e(a) * s(a), e(a), "e_a s_a=e_a", a, 0);
    }
    for (int a = 1; a < n; ++a) {
        for (int b = a + 2; b < n; ++b) {
            expect(s(a) * s(b), s(b) * s(a), "s_a s_b=s_b s_a", a, b);
            expect(e(a) * e(b), e(b) * e(a), "e_a e_b=e_b e_a", a, b);
            expect(s(a) * e(b), e(b) * s(a), "s_a e_b=e_b s_a", a, b);
        }
    }
    for (int a = 1; a + 1 < n; ++a) {
        expect(s(a) * s(a + 1) * s(a), s(a + 1) * s(a) * s(a + 1), "braid", a, a + 1);
        expect(e(a) * e(a + 1) * e(a), e(a), "e_a e_{a+1} e_a=e_a", a, a + 1);
        expect(e(a + 1) * e(a) * e(a + 1), e(a + 1), "e_{a+1} e_a e_{a+1}=e_{a+1}", a, a + 1);
        expect(s(a) * e(a + 1) * e(a), s(a + 1) * e(a), "s_a e_{a+1} e_a=s_{a+1} e_a", a, a + 1);
        expect(e(a + 1) * e(a) * s(a + 1), e(a + 1) * s(a), "e_{a+1} e_a s_{a+1}=e_{a+1} s_a", a,
               a + 1);
    }
    std::string name = "defining-relations/B" + std::to_string(n);
    rep.add(ok ? Check::pass(name) : Check::fail(name, witness));
}

void generator_words(VerificationReport& rep, int n) {
    bool ok = true;
    std::string witness;
    auto s = [&](int a) { return generator(GenKind::Transposition, a, a + 1, n); };
    auto e = [&](int a) { return generator(GenKind::Contraction, a, a + 1, n); };
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            BrauerElement sw = BrauerElement::one(n);
            for (int c = a; c < b; ++c)
                sw = sw * s(c);
            for (int c = b - 2; c >= a; --c)
                sw = sw * s(c);
            BrauerElement ew = BrauerElement::one(n);
            for (int c = a; c < b - 1; ++c)
                ew = ew * s(c);
            ew = ew * e(b - 1);
            for (int c = b - 2; c >= a; --c)
                ew = ew * s(c);
            if (!(sw == generator(GenKind::Transposition, a, b, n)) ||
                !(ew == generator(GenKind::Contraction, a, b, n))) {
                ok = false;
                witness = "a=" + std::to_string(a) + " b=" + std::to_string(b);
            }
        }
    }
    std::string name = "generator-words/B" + std::to_string(n);
    rep.add(ok ? Check::pass(name) : Check::fail(name, witness));
}

void symmetriser_properties(VerificationReport& rep, int k) {
    BrauerElement s_k = brauer_symmetriser(k, k);
    bool ok = (s_k * s_k == s_k);
    std::string witness = ok ? "" : "not idempotent";
    for (int a = 1; a < k && ok; ++a) {
        BrauerElement sa = generator(GenKind::Transposition, a, a + 1, k);
        BrauerElement ea = generator(GenKind::Contraction, a, a + 1, k);
        if (!(sa * s_k == s_k) || !(s_k * sa == s_k)) {
            ok = false;
            witness = "s_a absorption fails at a=" + std::to_string(a);
        } else if (!(ea * s_k).is_zero() || !(s_k * ea).is_zero()) {
            ok = false;
            witness = "e_a annihilation fails at a=" + std::to_string(a);
        }
    }
    for (int a = 1; a <= k && ok; ++a) {
        for (int b = a + 1; b <= k && ok; ++b) {
            BrauerElement sab = generator(GenKind::Transposition, a, b, k);
            BrauerElement eab = generator(GenKind::Contraction, a, b, k);
            if (!(sab * s_k == s_k) || !(s_k * sab == s_k)) {
                ok = false;
                witness = "s_ab absorption fails";
            } else if (!(eab * s_k).is_zero() || !(s_k * eab).is_zero()) {
                ok = false;
                witness = "e_ab annihilation fails";
            }
        }
    }
    std::string name = "symmetriser/defining-properties/k" + std::to_string(k);
    rep.add(ok ? Check::pass(name) : Check::fail(name, witness));

    check_equal(rep, "symmetriser/closed-vs-recursion/k" + std::to_string(k), s_k,
                brauer_symmetriser_recursion(k, k));
    check_equal(rep, "symmetriser/closed-vs-recursion2/k" + std::to_string(k), s_k,
                brauer_symmetriser_recursion2(k, k));

    BrauerElement h_k = group_symmetriser(k, k);
    bool hok = (h_k * h_k == h_k);
    for (int a = 1; a < k && hok; ++a) {
        BrauerElement sa = generator(GenKind::Transposition, a, a + 1, k);
        hok = (sa * h_k == h_k) && (h_k * sa == h_k);
    }
    std::string hname = "group-symmetriser/idempotent/k" + std::to_string(k);
    rep.add(hok ? Check::pass(hname) : Check::fail(hname, "h^(k) properties fail"));
}

void cyclic_diagram_relations(VerificationReport& rep, int m) {
    const int big = 2 * m + 1;
    bool ok = true;
    std::string witness;
    auto expect = [&](bool cond, const std::string& what) {
        if (ok && !cond) {
            ok = false;
            witness = what;
        }
    };
    for (int a = 1; a <= m; ++a) {
        for (int b = a + 1; b <= m; ++b) {
            BrauerElement pre = e0(a, m + a, big) * e0(b, m + b, big);
            expect(pre * s0(a, b, big) == pre * s0(m + a, m + b, big),
                   "eamaebmb-s a=" + std::to_string(a) + " b=" + std::to_string(b));
            expect(pre * e0(a, b, big) == pre * e0(m + a, m + b, big),
                   "eamaebmb-e a=" + std::to_string(a) + " b=" + std::to_string(b));
            expect(s0(m + a, m + b, big) * pre == s0(a, b, big) * pre,
                   "s-eamaebmb a=" + std::to_string(a) + " b=" + std::to_string(b));
            expect(e0(m + a, m + b, big) * pre == e0(a, b, big) * pre,
                   "e-eamaebmb a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
    }
    std::string name = "cyclic1-diagram-relations/m" + std::to_string(m);
    rep.add(ok ? Check::pass(name) : Check::fail(name, witness));

    ok = true;
    witness.clear();
    for (int a = 1; a <= m; ++a) {
        BrauerElement eama = e0(a, m + a, big);
        expect(eama * s0(0, a, big) == eama * e0(0, m + a, big), "c2-1 a=" + std::to_string(a));
        expect(e0(0, m + a, big) * eama == s0(0, a, big) * eama, "c2-2 a=" + std::to_string(a));
        expect(eama * e0(0, a, big) == eama * s0(0, m + a, big), "c2-3 a=" + std::to_string(a));
        expect(s0(0, m + a, big) * eama == e0(0, a, big) * eama, "c2-4 a=" + std::to_string(a));
    }
    std::string name2 = "cyclic2-diagram-relations/m" + std::to_string(m);
    rep.add(ok ? Check::pass(name2) : Check::fail(name2, witness));
}

void qelleq_relations(VerificationReport& rep, int m) {
    const int big = 2 * m + 1;
    bool ok = true;
    std::string witness;
    for (int ell = 1; ell <= m; ++ell) {
        BrauerElement q = q_element(ell, m);
        for (int b = 1; b <= ell && ok; ++b) {
            if (!(q == q * s0(b, m + b, big)) || !(q == s0(b, m + b, big) * q)) {
                ok = false;
                witness = "q absorption ell=" + std::to_string(ell) + " b=" + std::to_string(b);
            }
        }
        for (int a = 1; a <= ell && ok; ++a) {
            for (int b = 1; b <= ell && ok; ++b) {
                if (a == b)
                    continue;
                BrauerElement lhs = q * (s0(a, b, big) + e0(a, b, big));
                BrauerElement rhs = q * (s0(a, m + b, big) + e0(a, m + b, big));
                if (!(lhs == rhs)) {
                    ok = false;
                    witness = "qelleq ell=" + std::to_string(ell) + " a=" + std::to_string(a) +
                              " b=" + std::to_string(b);
                }
            }
        }
    }
    std::string name = "qelleq/m" + std::to_string(m);
    rep.add(ok ? Check::pass(name) : Check::fail(name, witness));
}

void lemma_817_and_132(VerificationReport& rep, int m) {
    const int big = 2 * m + 1;
    for (int k = 1; k <= m; ++k) {
        BrauerElement ekmk = e0(k, m + k, big);
        BrauerElement s_k = sym_shifted(k, big);
        BrauerElement s_km1 = k >= 2 ? sym_shifted(k - 1, big) : BrauerElement::one(big);

        // lem817: e s^(k) phi_0k e = (w+2k-2)/(k(w+2k-4)) s^(k-1) (sum phi_0a) e
        BrauerElement lhs = ekmk * s_k * phi0(0, k, big) * ekmk;
        BrauerElement phi_sum = BrauerElement::zero(big);
        for (int a = 1; a < k; ++a)
            phi_sum += phi0(0, a, big);
        RatFun coeff = omega_plus(2 * k - 2) / (RatFun(Rational(k)) * omega_plus(2 * k - 4));
        BrauerElement rhs = coeff * (s_km1 * phi_sum * ekmk);
        check_equal(rep, "lem817/m" + std::to_string(m) + "/k" + std::to_string(k), lhs, rhs);

        // lemma132: e s^(k) e = (w+k-3)(w+2k-2)/(k(w+2k-4)) s^(k-1) e
        BrauerElement lhs2 = ekmk * s_k * ekmk;
        RatFun coeff2 = omega_plus(k - 3) * omega_plus(2 * k - 2) /
                        (RatFun(Rational(k)) * omega_plus(2 * k - 4));
        BrauerElement rhs2 = coeff2 * (s_km1 * ekmk);
        check_equal(rep, "lemma132/m" + std::to_string(m) + "/k" + std::to_string(k), lhs2, rhs2);

        // the four sandwich relations used in the proof of lem817
        bool ok = (ekmk * phi0(0, k, big) * ekmk).is_zero();
        std::string witness = ok ? "" : "e phi e != 0";
        for (int a = 1; a < k && ok; ++a) {
            if (!(ekmk * s0(a, k, big) * phi0(0, k, big) * ekmk == phi0(0, a, big) * ekmk)) {
                ok = false;
                witness = "e s_ak phi e";
            } else if (!(ekmk * e0(a, k, big) * phi0(0, k, big) * ekmk ==
                         -(phi0(0, a, big) * ekmk))) {
                ok = false;
                witness = "e e_ak phi e";
            }
            for (int b = 1; b < k && ok; ++b) {
                if (b == a)
                    continue;
                if (!(ekmk * s0(a, k, big) * e0(b, k, big) * phi0(0, k, big) * ekmk ==
                      e0(a, b, big) * phi0(0, a, big) * ekmk)) {
                    ok = false;
                    witness = "e s_ak e_bk phi e";
                }
            }
        }
        std::string name = "lem817-sandwich-relations/m" + std::to_string(m) + "/k" + std::to_string(k);
        rep.add(ok ? Check::pass(name) : Check::fail(name, witness));
    }
}

void phi_absorption(VerificationReport& rep, int m) {
    const int big = 2 * m + 1;
    BrauerElement s_m = sym_shifted(m, big);
    bool ok = true;
    std::string witness;
    for (int a = 1; a < m; ++a) {
        BrauerElement l1 = s_m * phi0(0, m, big) * phi0(a, m, big);
        BrauerElement r1 = s_m * phi0(0, a, big);
        BrauerElement l2 = phi0(a, m, big) * phi0(0, m, big) * s_m;
        BrauerElement r2 = phi0(0, a, big) * s_m;
        if (!(l1 == r1) || !(l2 == r2)) {
            ok = false;
            witness = "a=" + std::to_string(a);
            break;
        }
        if (!(s_m * phi0(0, m, big) * e0(a, m, big)).is_zero()) {
            ok = false;
            witness = "s phi e_am != 0, a=" + std::to_string(a);
            break;
        }
    }
    std::string name = "phi-absorption/m" + std::to_string(m);
    rep.add(ok ? Check::pass(name) : Check::fail(name, witness));
}

} // namespace

VerificationReport identity_suite(int m_max) {
    if (m_max < 1 || m_max > 4)
        throw InvalidArgument("identity_suite supports m_max in 1..4");
    VerificationReport rep;
    rep.campaign = "brauer-identities";
    rep.params["m_max"] = m_max;

    for (int n = 2; n <= 2 * m_max + 1; ++n) {
        defining_relations(rep, n);
        generator_words(rep, n);
    }
    for (int k = 1; k <= m_max; ++k)
        symmetriser_properties(rep, k);
    for (int m = 1; m <= m_max; ++m) {
        cyclic_diagram_relations(rep, m);
        qelleq_relations(rep, m);
        lemma_817_and_132(rep, m);
        phi_absorption(rep, m);
    }

    // the closed coefficient of lemma132 at k=2 inside B_5 (labels 0..4)
    {
        BrauerElement e24 = e0(2, 4, 5);
        BrauerElement s2 = sym_shifted(2, 5);
        VarPoly w = VarPoly::variable(Var::Omega);
        RatFun coeff = RatFun::of((w - VarPoly::constant(1, Var::Omega)) *
                                      (w + VarPoly::constant(2, Var::Omega)),
                                  VarPoly::constant(2, Var::Omega) * w);
        check_equal(rep, "lemma132/B5-explicit-coefficient", e24 * s2 * e24, coeff * e24);
    }

    rep.sort_checks();
    return rep;
}

} // namespace ospssv
