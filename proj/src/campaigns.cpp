#include <random>
#include <sstream>

#include "ospssv/rep.hpp"
#include "ospssv/ssv.hpp"

namespace ospssv {

namespace {

std::string sig_tag(Signature sig) {
    return "M" + std::to_string(sig.M) + "n" + std::to_string(sig.n);
}

VarPoly kvar() { return VarPoly::variable(Var::K); }

} // namespace

VerificationReport verify_annihilation(Signature sig, int m, const std::set<int>& modes) {
    VerificationReport rep;
    rep.campaign = "annihilation";
    rep.params = {{"M", sig.M}, {"n", sig.n}, {"m", m}};
    Uea uea(sig);
    const OspStructure& S = uea.structure();
    const Rational critical(-(sig.superdim() - 2));

    SSVector phi = phi_integral(sig, m);
    const bool nonzero = !phi.value.is_zero();
    rep.add(Check::pass(std::string("phi-status/") + (nonzero ? "nonzero" : "zero")));
    rep.require("phi-even", phi.value.is_even(), "odd monomial in phi");
    rep.require("phi-K-free", phi.value.max_K_degree() == 0, "unexpected K dependence");

    bool control_broken = false;
    for (int r : modes) {
        for (int alpha = 0; alpha < S.dim(); ++alpha) {
            VacuumElement res = uea.apply_gen(uea.gen(alpha, r), phi.value, true);
            std::string name = "F[" + std::to_string(alpha) + "," + std::to_string(r) + "]phi";
            if (r == 0) {
                // level-independent: must vanish identically in K
                rep.require(name + "=0 (identically in K)", res.is_zero(), res.str());
            } else {
                rep.require(name + "=0 at K=" + critical.str(),
                            res.substitute_K(critical).is_zero(),
                            res.substitute_K(critical).str());
                if (!critical.is_zero() && !res.substitute_K(Rational(0)).is_zero())
                    control_broken = true;
            }
        }
    }
    if (modes.count(1) && nonzero) {
        rep.require("negative-control (some F[a,1]phi != 0 at K=0)", control_broken,
                    "annihilation also holds at the non-critical level K=0");
    }
    rep.sort_checks();
    return rep;
}

VerificationReport verify_commutativity(Signature sig, const std::set<int>& degrees) {
    VerificationReport rep;
    rep.campaign = "commutativity";
    rep.params = {{"M", sig.M}, {"n", sig.n}};
    Uea uea(sig);
    std::map<int, VacuumElement> phis;
    for (int m : degrees) {
        if (m < 2 || m > 4)
            throw InvalidArgument("verify_commutativity supports degrees in {2,3,4}");
        phis.emplace(m, phi_integral(sig, m).value);
    }
    for (auto it = phis.begin(); it != phis.end(); ++it) {
        for (auto jt = it; jt != phis.end(); ++jt) {
            VacuumElement comm = uea.u_multiply(it->second, jt->second) -
                                 uea.u_multiply(jt->second, it->second);
            rep.require("[phi_" + std::to_string(it->first) + ",phi_" +
                            std::to_string(jt->first) + "]=0",
                        comm.is_zero(), comm.str());
        }
    }
    rep.sort_checks();
    return rep;
}

VerificationReport integral_rational_equivalence(Signature sig, int m) {
    VerificationReport rep;
    rep.campaign = "integral-rational";
    rep.params = {{"M", sig.M}, {"n", sig.n}, {"m", m}};
    SSVector integral = phi_integral(sig, m);
    try {
        SSVector rational = phi_rational(sig, m);
        rep.require("phi_rational=phi_integral/" + sig_tag(sig) + "m" + std::to_string(m),
                    rational.value == integral.value,
                    "rational: " + rational.value.str() + "; integral: " + integral.value.str());
    } catch (const PoleAtEvaluation& e) {
        rep.add(Check::skipped("phi_rational/" + sig_tag(sig) + "m" + std::to_string(m),
                               e.what()));
    }
    rep.sort_checks();
    return rep;
}

// ---------------------------------------------------------------------------
// representation-level identity campaigns on 2m+1 legs (labels 0..2m)

namespace {

struct RepContext {
    Signature sig;
    int m;
    int legs; // 2m+1
    Uea uea;
    std::map<std::pair<int, int>, UTensorOp> pcache, qcache;

    RepContext(Signature s, int m_) : sig(s), m(m_), legs(2 * m_ + 1), uea(s) {}

    const UTensorOp& P(int a, int b) { // 0-based labels
        auto key = std::minmax(a, b);
        auto it = pcache.find(key);
        if (it == pcache.end())
            it = pcache
                     .emplace(key,
                              lift(build_P(key.first + 1, key.second + 1, legs, sig)))
                     .first;
        return it->second;
    }
    const UTensorOp& Q(int a, int b) {
        auto key = std::minmax(a, b);
        auto it = qcache.find(key);
        if (it == qcache.end())
            it = qcache
                     .emplace(key,
                              lift(build_Q(key.first + 1, key.second + 1, legs, sig)))
                     .first;
        return it->second;
    }
    UTensorOp F(int r, int b) { return f_matrix(r, b + 1, legs, uea); }
    UTensorOp f_fac(int a) { return f_factor(a + 1, legs, uea); }
    UTensorOp qop(int k) {
        UTensorOp acc = Q(1, m + 1);
        for (int a = 2; a <= k; ++a)
            acc = compose(acc, Q(a, m + a));
        return acc;
    }
    UTensorOp sym(int k) { // rho of s^(k) on labels 1..k; may throw
        return lift(rho(brauer_symmetriser(k, k).shift_into(1, legs), sig));
    }
    UTensorOp hsym(int k) {
        return lift(rho(group_symmetriser(k, k).shift_into(1, legs), sig));
    }
    UTensorOp phi(int a, int b) {
        UTensorOp t = P(a, b);
        t -= Q(a, b);
        return t;
    }
    UTensorOp one() {
        return lift(TensorOperator<Rational>::identity(sig, legs, Rational(1)));
    }

    TensorOperator<VacuumElement> at_vacuum(const UTensorOp& x) {
        return normalize_entries(x, uea, true);
    }
};

// word atoms for the pseudo-random families
struct Atom {
    enum Kind { S, E, Fgen, Tau, Kmul } kind;
    int a = 0, b = 0, r = 0;
};

UTensorOp eval_word(RepContext& ctx, const std::vector<Atom>& word) {
    UTensorOp acc = ctx.one();
    for (const Atom& at : word) {
        switch (at.kind) {
        case Atom::S: acc = compose(acc, ctx.P(at.a, at.b)); break;
        case Atom::E: acc = compose(acc, ctx.Q(at.a, at.b)); break;
        case Atom::Fgen: acc = compose(acc, ctx.F(at.r, at.b)); break;
        case Atom::Tau: acc = compose(acc, tau_op(ctx.sig, ctx.legs)); break;
        case Atom::Kmul: acc.scale(kvar()); break;
        }
    }
    return acc;
}

std::string word_str(const std::vector<Atom>& word) {
    std::ostringstream os;
    for (const Atom& at : word) {
        switch (at.kind) {
        case Atom::S: os << "s(" << at.a << "," << at.b << ")"; break;
        case Atom::E: os << "e(" << at.a << "," << at.b << ")"; break;
        case Atom::Fgen: os << "f[" << at.r << "]_" << at.b; break;
        case Atom::Tau: os << "tau"; break;
        case Atom::Kmul: os << "K"; break;
        }
    }
    return os.str();
}

std::vector<Atom> random_brauer_word(int k, int len, std::mt19937_64& rng, int lo_label) {
    // words over s_a, e_a with lo_label <= a <= k-1 (adjacent generators)
    std::vector<Atom> w;
    std::uniform_int_distribution<int> leg(lo_label, k - 1);
    std::uniform_int_distribution<int> kind(0, 1);
    for (int i = 0; i < len; ++i) {
        int a = leg(rng);
        w.push_back({kind(rng) ? Atom::S : Atom::E, a, a + 1, 0});
    }
    return w;
}

std::vector<Atom> random_mixed_word(int k, int len, std::mt19937_64& rng, int lo_label) {
    // words over s_a, e_a (lo_label <= a <= k-1), f[r]_b (lo_label <= b <= k),
    // tau and K
    std::vector<Atom> w;
    const bool has_brauer = lo_label <= k - 1;
    std::uniform_int_distribution<int> pick(0, 9);
    std::uniform_int_distribution<int> leg(lo_label, has_brauer ? k - 1 : lo_label);
    std::uniform_int_distribution<int> fleg(lo_label, k);
    std::uniform_int_distribution<int> mode(-2, 2);
    for (int i = 0; i < len; ++i) {
        int p = pick(rng);
        if (p < 3 && has_brauer) {
            int a = leg(rng);
            w.push_back({p % 2 ? Atom::S : Atom::E, a, a + 1, 0});
        } else if (p < 8) {
            w.push_back({Atom::Fgen, 0, fleg(rng), mode(rng)});
        } else if (p < 9) {
            w.push_back({Atom::Tau, 0, 0, 0});
        } else {
            w.push_back({Atom::Kmul, 0, 0, 0});
        }
    }
    return w;
}

} // namespace

VerificationReport verify_rep_identities(Signature sig, int m, std::uint64_t seed,
                                         int instances) {
    if (m > 3)
        throw InvalidArgument("verify_rep_identities supports m <= 3");
    VerificationReport rep;
    rep.campaign = "rep-identities";
    rep.params = {{"M", sig.M}, {"n", sig.n}, {"m", m}, {"seed", seed}};
    RepContext ctx(sig, m);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_k(1, m);
    std::uniform_int_distribution<int> short_len(1, 2);
    std::uniform_int_distribution<int> mid_len(1, 3);

    // cyclic property 1: q^k x y q^k = q^k y x q^k
    for (int t = 0; t < instances; ++t) {
        int k = pick_k(rng);
        std::vector<Atom> x =
            k >= 2 ? random_brauer_word(k, short_len(rng), rng, 1) : std::vector<Atom>{};
        std::vector<Atom> y = random_mixed_word(k, mid_len(rng), rng, 0);
        UTensorOp qk = ctx.qop(k);
        UTensorOp lhs = compose(compose(qk, compose(eval_word(ctx, x), eval_word(ctx, y))), qk);
        UTensorOp rhs = compose(compose(qk, compose(eval_word(ctx, y), eval_word(ctx, x))), qk);
        rep.require("cyclic1/t" + std::to_string(t),
                    ctx.at_vacuum(lhs) == ctx.at_vacuum(rhs),
                    "k=" + std::to_string(k) + " x=" + word_str(x) + " y=" + word_str(y));
    }

    // cyclic property 2: x over labels >= 1, y in {s_{0a}, e_{0a}}
    for (int t = 0; t < instances; ++t) {
        int k = pick_k(rng);
        std::vector<Atom> x = random_mixed_word(k, mid_len(rng), rng, 1);
        std::uniform_int_distribution<int> pa(1, k);
        std::uniform_int_distribution<int> which(0, 1);
        int a = pa(rng);
        std::vector<Atom> y{
            {which(rng) ? Atom::S : Atom::E, 0, a, 0}};
        UTensorOp qk = ctx.qop(k);
        UTensorOp lhs = compose(compose(qk, compose(eval_word(ctx, x), eval_word(ctx, y))), qk);
        UTensorOp rhs = compose(compose(qk, compose(eval_word(ctx, y), eval_word(ctx, x))), qk);
        rep.require("cyclic2/t" + std::to_string(t),
                    ctx.at_vacuum(lhs) == ctx.at_vacuum(rhs),
                    "k=" + std::to_string(k) + " x=" + word_str(x) + " y=" + word_str(y));
    }

    // absorption: s_ab f_1...f_k s^(k) = f_1...f_k s^(k)
    for (int k = 1; k <= m; ++k) {
        try {
            UTensorOp sk = ctx.sym(k);
            UTensorOp fs = ctx.one();
            for (int a = 1; a <= k; ++a)
                fs = compose(fs, ctx.f_fac(a));
            UTensorOp rhs = compose(fs, sk);
            auto rhs_vac = ctx.at_vacuum(rhs);
            for (int a = 1; a <= k; ++a) {
                for (int b = a + 1; b <= k; ++b) {
                    UTensorOp lhs = compose(ctx.P(a, b), rhs);
                    rep.require("manin/k" + std::to_string(k) + "/s" + std::to_string(a) +
                                    std::to_string(b),
                                ctx.at_vacuum(lhs) == rhs_vac, "absorption fails");
                }
            }
        } catch (const PoleAtEvaluation& e) {
            rep.add(Check::skipped("manin/k" + std::to_string(k), e.what()));
            continue;
        }
    }

    // q^k s^k phi_{0a} f_1...f_k q^k is independent of a
    for (int k = 2; k <= m; ++k) {
        try {
        UTensorOp sk = ctx.sym(k);
        UTensorOp qk = ctx.qop(k);
        UTensorOp fs = ctx.one();
        for (int a = 1; a <= k; ++a)
            fs = compose(fs, ctx.f_fac(a));
        std::vector<TensorOperator<VacuumElement>> values;
        for (int a = 1; a <= k; ++a) {
            UTensorOp v = compose(compose(qk, compose(sk, compose(ctx.phi(0, a), fs))), qk);
            values.push_back(ctx.at_vacuum(v));
        }
        for (int a = 1; a < k; ++a)
            rep.require("phi0a-independence/k" + std::to_string(k) + "/a" + std::to_string(a),
                        values[static_cast<std::size_t>(a - 1)] ==
                            values[static_cast<std::size_t>(a)],
                        "values differ between a and a+1");
        } catch (const PoleAtEvaluation& e) {
            rep.add(Check::skipped("phi0a-independence/k" + std::to_string(k), e.what()));
        }
    }

    // expansion of f[1]_0 q^m s^m f_1...f_m q^m, K symbolic
    try {
        RatFun ratio = RatFun(VarPoly::variable(Var::Omega) +
                              VarPoly::constant(Rational(2 * m - 2), Var::Omega)) /
                       RatFun(VarPoly::variable(Var::Omega) +
                              VarPoly::constant(Rational(2 * m - 4), Var::Omega));
        if (!ratio.pole_free_at(Rational(sig.superdim())))
            throw PoleAtEvaluation("pole in (w+2m-2)/(w+2m-4)");
        UTensorOp sm = ctx.sym(m);
        UTensorOp sm1 = m >= 2 ? ctx.sym(m - 1) : ctx.one();
        {
            UTensorOp qm = ctx.qop(m);
            UTensorOp qm1 = m >= 2 ? ctx.qop(m - 1) : ctx.one();
            UTensorOp fs_m = ctx.one();
            for (int a = 1; a <= m; ++a)
                fs_m = compose(fs_m, ctx.f_fac(a));
            UTensorOp fs_m1 = ctx.one();
            for (int a = 1; a <= m - 1; ++a)
                fs_m1 = compose(fs_m1, ctx.f_fac(a));

            UTensorOp lhs = compose(ctx.F(1, 0), compose(compose(qm, compose(sm, fs_m)), qm));

            // interior sum of the first right-hand term
            UTensorOp sum(ctx.sig, ctx.legs);
            for (int a = 1; a <= m - 1; ++a) {
                UTensorOp t =
                    compose(compose(qm1, compose(sm1, compose(ctx.phi(0, a), fs_m1))), qm1);
                sum += t;
            }
            VarPoly wk = kvar() + VarPoly::constant(Rational(sig.superdim() - 2), Var::K);
            UTensorOp t1 = compose(sum, ctx.Q(m, 2 * m));
            t1.scale(wk * ratio.eval(Rational(sig.superdim())));

            Rational mm(m);
            UTensorOp t2 =
                compose(compose(qm, compose(ctx.phi(0, m), compose(sm, compose(fs_m1, ctx.F(0, m))))),
                        qm);
            t2.scale(-mm);
            UTensorOp t3 = compose(compose(compose(qm, compose(sm, fs_m1)), qm), ctx.F(0, 0));
            t3.scale(mm);
            UTensorOp t4 =
                compose(compose(qm, compose(sm, compose(ctx.phi(0, m), compose(fs_m1, ctx.F(0, m))))),
                        qm);
            t4.scale(mm);
            UTensorOp t5 = compose(compose(compose(qm, compose(sm, fs_m)), qm), ctx.F(1, 0));

            UTensorOp rhs = t1;
            rhs += t2;
            rhs += t3;
            rhs += t4;
            rhs += t5;
            rep.require("f1-expansion/m" + std::to_string(m),
                        ctx.at_vacuum(lhs) == ctx.at_vacuum(rhs), "expansion mismatch");
        }
    } catch (const PoleAtEvaluation& e) {
        rep.add(Check::skipped("f1-expansion/m" + std::to_string(m), e.what()));
    }

    // gamma_l q^l s^l f[-lambda] q^m = q^l h^l f[-lambda] q^m, and the
    // odd-length vanishing of the h^(l) form
    {
        UTensorOp qm = ctx.qop(m);
        for (const Partition& lambda : all_partitions(m)) {
            const int ell = lambda.length();
            UTensorOp flam = ctx.one();
            for (int i = 1; i <= ell; ++i)
                flam = compose(flam, ctx.F(-lambda.parts[static_cast<std::size_t>(i - 1)], i));
            UTensorOp ql = ctx.qop(ell);
            UTensorOp hl = ctx.hsym(ell);
            UTensorOp rhs = compose(compose(ql, compose(hl, flam)), qm);
            std::string name = "lkm/lambda" + lambda.str();
            try {
                RatFun g = gamma_factor(ell);
                if (!g.pole_free_at(Rational(sig.superdim())))
                    throw PoleAtEvaluation("gamma_l pole");
                UTensorOp sl = ctx.sym(ell);
                UTensorOp lhs = compose(compose(ql, compose(sl, flam)), qm);
                lhs.scale(g.eval(Rational(sig.superdim())));
                rep.require(name, ctx.at_vacuum(lhs) == ctx.at_vacuum(rhs), "forms differ");
            } catch (const PoleAtEvaluation& e) {
                rep.add(Check::skipped(name, e.what()));
            }
            if (ell % 2 == 1) {
                rep.require("odd-length-vanishing/lambda" + lambda.str(),
                            ctx.at_vacuum(rhs).is_zero(), "q^l h^l f[-lambda] q^m != 0");
            }
        }
    }

    // matrix relations on the 2m+1-leg instances
    {
        bool ok = true;
        std::string witness;
        auto expect = [&](bool cond, const std::string& what) {
            if (ok && !cond) {
                ok = false;
                witness = what;
            }
        };
        for (int a = 0; a < m && ok; ++a) {
            for (int b = a + 1; b <= m && ok; ++b) {
                for (int r = -2; r <= 2 && ok; ++r) {
                    UTensorOp fa = ctx.F(r, a);
                    UTensorOp fb = ctx.F(r, b);
                    expect(normalize_entries(compose(compose(ctx.Q(a, b), fa), ctx.Q(a, b)),
                                             ctx.uea, false)
                               .is_zero(),
                           "QFQ!=0");
                    expect(normalize_entries(compose(ctx.P(a, b), fa), ctx.uea, false) ==
                               normalize_entries(compose(fb, ctx.P(a, b)), ctx.uea, false),
                           "PF!=FP");
                    UTensorOp s = fa;
                    s += fb;
                    expect(normalize_entries(compose(ctx.Q(a, b), s), ctx.uea, false).is_zero(),
                           "Q(Fa+Fb)!=0");
                    expect(normalize_entries(compose(s, ctx.Q(a, b)), ctx.uea, false).is_zero(),
                           "(Fa+Fb)Q!=0");
                    if (b + 1 <= m) {
                        UTensorOp fc = ctx.F(r, b + 1);
                        expect(normalize_entries(compose(ctx.P(a, b), fc), ctx.uea, false) ==
                                   normalize_entries(compose(fc, ctx.P(a, b)), ctx.uea, false),
                               "P commute c");
                        expect(normalize_entries(compose(ctx.Q(a, b), fc), ctx.uea, false) ==
                                   normalize_entries(compose(fc, ctx.Q(a, b)), ctx.uea, false),
                               "Q commute c");
                    }
                }
                // commutator relation with K symbolic on a reduced mode grid
                for (auto [r, s] : std::vector<std::pair<int, int>>{
                         {-1, -1}, {0, 1}, {1, -1}, {-2, 2}, {2, -1}}) {
                    if (!ok)
                        break;
                    UTensorOp fa = ctx.F(r, a);
                    UTensorOp fb = ctx.F(s, b);
                    UTensorOp lhs = compose(fa, fb);
                    lhs -= compose(fb, fa);
                    UTensorOp fab = ctx.F(r + s, b);
                    UTensorOp rhs = compose(ctx.phi(a, b), fab);
                    rhs -= compose(fab, ctx.phi(a, b));
                    if (r != 0 && r == -s) {
                        UTensorOp central = ctx.phi(a, b);
                        central.scale(VarPoly::monomial(Rational(r), 1, Var::K));
                        rhs += central;
                    }
                    expect(normalize_entries(lhs, ctx.uea, false) ==
                               normalize_entries(rhs, ctx.uea, false),
                           "commutator relation r=" + std::to_string(r) +
                               " s=" + std::to_string(s));
                }
            }
        }
        rep.add(ok ? Check::pass("matrix-relations") : Check::fail("matrix-relations", witness));
    }

    rep.sort_checks();
    return rep;
}

VerificationReport psi_relation_check(Signature sig, int m, int k) {
    if (k > m || m > 3)
        throw InvalidArgument("psi_relation_check needs k <= m <= 3");
    VerificationReport rep;
    rep.campaign = "psi-relation";
    rep.params = {{"M", sig.M}, {"n", sig.n}, {"m", m}, {"k", k}};
    Uea uea(sig);
    const Rational w0(sig.superdim());

    // tau-polynomial of gamma_j str_{1..j} S^(j) (tau+F[-1]_1)...(tau+F[-1]_j)
    auto tau_poly = [&](int j) -> std::map<int, VacuumElement> {
        std::map<int, VacuumElement> out;
        if (j == 0) {
            VacuumElement one;
            one.add({}, VarPoly::constant(Rational(1), Var::K));
            out.emplace(0, one);
            return out;
        }
        Rational g = gamma_factor(j).eval(w0); // may throw PoleAtEvaluation
        UTensorOp acc = lift(rho(brauer_symmetriser(j, j), sig));
        for (int a = 1; a <= j; ++a)
            acc = compose(acc, f_factor(a, j, uea));
        std::set<int> legs;
        for (int a = 1; a <= j; ++a)
            legs.insert(a);
        UCoeff traced = acc.partial_supertrace(legs).scalar();
        for (auto& [deg, coeff] : tau_coefficients(traced)) {
            VacuumElement v = vacuum_apply(coeff, uea);
            v.scale(g);
            if (!v.is_zero())
                out.emplace(deg, std::move(v));
        }
        return out;
    };

    try {
        std::map<int, VacuumElement> poly_k = tau_poly(k);
        VarPoly wshift(Var::Omega, {Rational(k - 2), Rational(1)}); // ω + k - 2
        for (int a = 0; a <= k; ++a) {
            std::map<int, VacuumElement> poly_a = tau_poly(a);
            Rational binom = poly_binomial(wshift, k - a).eval(w0);
            VacuumElement lhs = poly_k.count(k - a) ? poly_k.at(k - a) : VacuumElement();
            VacuumElement rhs = poly_a.count(0) ? poly_a.at(0) : VacuumElement();
            rhs.scale(binom);
            rep.require("psi[" + std::to_string(k) + "," + std::to_string(a) + "]",
                        lhs == rhs, "binomial relation fails");
        }
    } catch (const PoleAtEvaluation& e) {
        rep.add(Check::skipped("psi/k" + std::to_string(k), e.what()));
    }
    rep.sort_checks();
    return rep;
}

VerificationReport ev_centrality_check(Signature sig, int m, const Rational& z) {
    if (m < 2 || m > 3)
        throw InvalidArgument("ev_centrality_check supports m in {2,3}");
    if (z.is_zero())
        throw InvalidArgument("z must be nonzero");
    VerificationReport rep;
    rep.campaign = "ev-centrality";
    rep.params = {{"M", sig.M}, {"n", sig.n}, {"m", m}, {"z", z.str()}};
    Uea uea(sig);
    const OspStructure& S = uea.structure();

    SSVector phi = phi_integral(sig, m);

    auto ev = [&](const VacuumElement& x, const Rational& zz) {
        VacuumElement out;
        for (const auto& [w, c] : x.terms()) {
            int total = 0;
            Word image;
            for (const Gen& g : w) {
                total += -g.mode;
                image.push_back({g.basis, 0, g.parity});
            }
            Rational scalefac(1);
            for (int t = 0; t < total; ++t)
                scalefac *= zz.inverse();
            out += uea.normal_order(c * scalefac, image, false);
        }
        return out;
    };

    VacuumElement image = ev(phi.value, z);
    rep.require("ev_z(phi) computed", true, "");

    // homogeneity: ev_z(phi_m) = z^{-m} ev_1(phi_m)
    VacuumElement at_one = ev(phi.value, Rational(1));
    Rational zm(1);
    for (int t = 0; t < m; ++t)
        zm *= z.inverse();
    at_one.scale(zm);
    rep.require("scaling ev_z=z^-m ev_1", image == at_one, "homogeneity fails");

    for (int alpha = 0; alpha < S.dim(); ++alpha) {
        VacuumElement lhs;
        VacuumElement rhs;
        for (const auto& [w, c] : image.terms()) {
            Word left = w;
            left.push_back(uea.gen(alpha, 0));
            lhs += uea.normal_order(c, left, false);
            Word right;
            right.push_back(uea.gen(alpha, 0));
            right.insert(right.end(), w.begin(), w.end());
            rhs += uea.normal_order(c, right, false);
        }
        rep.require("[ev_z(phi),F_" + std::to_string(alpha) + "]=0", lhs == rhs,
                    "not central");
    }
    rep.sort_checks();
    return rep;
}

VerificationReport jm_suite(int k_max, int l_max) {
    VerificationReport rep;
    rep.campaign = "jm-membership";
    rep.params = {{"k_max", k_max}, {"l_max", l_max}};
    for (int k = 1; k <= k_max; ++k) {
        BrauerElement target =
            gamma_factor(k) * brauer_symmetriser(k, k) - group_symmetriser(k, k);
        auto cert = jm_membership(target, k, k);
        bool ok = cert.has_value() && cert->expand(k) == target;
        rep.require("gamma_k*s^k-h^k in J_k/k" + std::to_string(k), ok, "no certificate");
    }
    for (int l = 1; l <= l_max; l += 2) {
        BrauerElement target = group_symmetriser(l, l);
        auto cert = jm_membership(target, l, l);
        bool ok = cert.has_value() && cert->expand(l) == target;
        rep.require("h^l in J_l/l" + std::to_string(l), ok, "no certificate");
    }
    rep.sort_checks();
    return rep;
}

} // namespace ospssv
