#include "ospssv/rep.hpp"

#include <algorithm>
#include <random>

namespace ospssv {

TensorOperator<Rational> build_P(int a, int b, int legs, Signature sig) {
    if (a < 1 || b < 1 || a > legs || b > legs || a == b)
        throw InvalidArgument("build_P legs out of range");
    if (a > b)
        std::swap(a, b);
    TensorOperator<Rational> two(sig, 2);
    std::vector<int> row(2), col(2);
    for (int i = 1; i <= sig.dim(); ++i) {
        for (int j = 1; j <= sig.dim(); ++j) {
            row[0] = i;
            col[0] = j;
            row[1] = j;
            col[1] = i;
            two.add_term(row, col, Rational(sig.parity(j) ? -1 : 1));
        }
    }
    return two.embed({a, b}, legs);
}

TensorOperator<Rational> build_Q(int a, int b, int legs, Signature sig) {
    if (a < 1 || b < 1 || a > legs || b > legs || a == b)
        throw InvalidArgument("build_Q legs out of range");
    if (a > b)
        std::swap(a, b);
    TensorOperator<Rational> two(sig, 2);
    std::vector<int> row(2), col(2);
    for (int i = 1; i <= sig.dim(); ++i) {
        for (int j = 1; j <= sig.dim(); ++j) {
            int pi = sig.parity(i), pj = sig.parity(j);
            int s = ((pi * pj + pi + pj) % 2 ? -1 : 1) * sig.sign(i) * sig.sign(j);
            row[0] = i;
            col[0] = j;
            row[1] = sig.prime(i);
            col[1] = sig.prime(j);
            two.add_term(row, col, Rational(s));
        }
    }
    return two.embed({a, b}, legs);
}

std::vector<GenFactor> factor_diagram(const BrauerDiagram& d) {
    const int m = d.size();
    std::vector<std::pair<int, int>> top_arcs, bottom_arcs, through;
    for (int leg = 1; leg <= m; ++leg) {
        int t = d.top_node(leg), p = d.partner(t);
        if (p < m) {
            if (p > t)
                top_arcs.emplace_back(leg, p + 1);
        } else {
            through.emplace_back(leg, p - m + 1);
        }
        int bnode = d.bottom_node(leg), q = d.partner(bnode);
        if (q >= m && q > bnode)
            bottom_arcs.emplace_back(leg, q - m + 1);
    }
    const int r = static_cast<int>(top_arcs.size());

    // d = U . E_r . V with permutations u, v and E_r = ε_12 ε_34 ... :
    // v routes top arcs onto (1,2),...,(2r-1,2r), u routes them back.
    std::vector<int> v(static_cast<std::size_t>(m) + 1, 0), u(static_cast<std::size_t>(m) + 1, 0);
    for (int j = 0; j < r; ++j) {
        v[static_cast<std::size_t>(top_arcs[static_cast<std::size_t>(j)].first)] = 2 * j + 1;
        v[static_cast<std::size_t>(top_arcs[static_cast<std::size_t>(j)].second)] = 2 * j + 2;
        u[static_cast<std::size_t>(2 * j + 1)] =
            bottom_arcs[static_cast<std::size_t>(j)].first;
        u[static_cast<std::size_t>(2 * j + 2)] =
            bottom_arcs[static_cast<std::size_t>(j)].second;
    }
    for (std::size_t i = 0; i < through.size(); ++i) {
        v[static_cast<std::size_t>(through[i].first)] = 2 * r + static_cast<int>(i) + 1;
        u[static_cast<std::size_t>(2 * r + static_cast<int>(i) + 1)] = through[i].second;
    }

    // permutation -> transposition word; products compose as maps
    auto decompose = [m](std::vector<int> perm) {
        std::vector<GenFactor> word;
        for (int i = 1; i <= m; ++i) {
            while (perm[static_cast<std::size_t>(i)] != i) {
                int j = perm[static_cast<std::size_t>(i)];
                word.push_back({GenKind::Transposition, i, j});
                std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
            }
        }
        // built as τ_k ... τ_1 perm = id, so perm = τ_1^{-1} ... = reverse order
        std::reverse(word.begin(), word.end());
        return word;
    };

    std::vector<GenFactor> word = decompose(u);
    for (int j = 0; j < r; ++j)
        word.push_back({GenKind::Contraction, 2 * j + 1, 2 * j + 2});
    auto vword = decompose(v);
    word.insert(word.end(), vword.begin(), vword.end());

    // recomposition check
    BrauerDiagram acc = BrauerDiagram::identity(m);
    int loops = 0;
    for (const auto& g : word) {
        auto [next, l] = compose_diagrams(acc, generator_diagram(g.kind, g.a, g.b, m));
        acc = next;
        loops += l;
    }
    if (!(acc == d) || loops != 0)
        throw InvalidArgument("internal: diagram factorization failed");
    return word;
}

TensorOperator<Rational> rho_diagram(const BrauerDiagram& d, Signature sig) {
    const int m = d.size();
    TensorOperator<Rational> op = TensorOperator<Rational>::identity(sig, m, Rational(1));
    for (const auto& g : factor_diagram(d)) {
        TensorOperator<Rational> gen = g.kind == GenKind::Transposition
                                           ? build_P(g.a, g.b, m, sig)
                                           : build_Q(g.a, g.b, m, sig);
        op = compose(op, gen);
    }
    return op;
}

TensorOperator<Rational> rho(const BrauerElement& x, Signature sig) {
    const Rational w0(sig.superdim());
    TensorOperator<Rational> out(sig, x.size());
    for (const auto& [d, c] : x.terms()) {
        Rational cv = c.eval(w0); // may throw PoleAtEvaluation
        if (cv.is_zero())
            continue;
        TensorOperator<Rational> t = rho_diagram(d, sig);
        t.scale(cv);
        out += t;
    }
    return out;
}

namespace {

BrauerElement random_brauer_element(int m, std::mt19937_64& rng) {
    auto all = BrauerDiagram::all(m);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    BrauerElement x(m);
    for (int t = 0; t < 3; ++t)
        x.add(all[pick(rng)], RatFun(Rational(coeff(rng))));
    return x;
}

TensorOperator<Rational> random_operator(Signature sig, int legs, int nterms,
                                         std::mt19937_64& rng) {
    TensorOperator<Rational> x(sig, legs);
    std::uniform_int_distribution<int> idx(1, sig.dim());
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<int> row(static_cast<std::size_t>(legs)), col(static_cast<std::size_t>(legs));
    for (int t = 0; t < nterms; ++t) {
        for (int a = 0; a < legs; ++a) {
            row[static_cast<std::size_t>(a)] = idx(rng);
            col[static_cast<std::size_t>(a)] = idx(rng);
        }
        x.add_term(row, col, Rational(coeff(rng)));
    }
    return x;
}

} // namespace

VerificationReport rep_relations_check(Signature sig, int m_max, std::uint64_t seed) {
    VerificationReport rep;
    rep.campaign = "rep-relations";
    rep.params = {{"M", sig.M}, {"n", sig.n}, {"m_max", m_max}, {"seed", seed}};
    const Rational w(sig.superdim());
    std::mt19937_64 rng(seed);

    for (int m = 2; m <= m_max; ++m) {
        auto P = [&](int a) { return build_P(a, a + 1, m, sig); };
        auto Q = [&](int a) { return build_Q(a, a + 1, m, sig); };
        auto one = TensorOperator<Rational>::identity(sig, m, Rational(1));
        std::string tag = "/M" + std::to_string(sig.M) + "n" + std::to_string(sig.n) + "m" +
                          std::to_string(m);

        bool ok = true;
        std::string witness;
        auto expect = [&](bool cond, const std::string& what) {
            if (ok && !cond) {
                ok = false;
                witness = what;
            }
        };
        for (int a = 1; a < m; ++a) {
            expect(compose(P(a), P(a)) == one, "P^2=1 a=" + std::to_string(a));
            TensorOperator<Rational> qq = compose(Q(a), Q(a));
            TensorOperator<Rational> wq = Q(a);
            wq.scale(w);
            expect(qq == wq, "Q^2=wQ a=" + std::to_string(a));
            expect(compose(P(a), Q(a)) == Q(a), "PQ=Q a=" + std::to_string(a));
            expect(compose(Q(a), P(a)) == Q(a), "QP=Q a=" + std::to_string(a));
        }
        for (int a = 1; a < m; ++a) {
            for (int b = a + 2; b < m; ++b) {
                expect(compose(P(a), P(b)) == compose(P(b), P(a)), "PP far commute");
                expect(compose(Q(a), Q(b)) == compose(Q(b), Q(a)), "QQ far commute");
                expect(compose(P(a), Q(b)) == compose(Q(b), P(a)), "PQ far commute");
            }
        }
        for (int a = 1; a + 1 < m; ++a) {
            expect(compose(compose(P(a), P(a + 1)), P(a)) ==
                       compose(compose(P(a + 1), P(a)), P(a + 1)),
                   "braid");
            expect(compose(compose(Q(a), Q(a + 1)), Q(a)) == Q(a), "QQQ down");
            expect(compose(compose(Q(a + 1), Q(a)), Q(a + 1)) == Q(a + 1), "QQQ up");
            expect(compose(compose(P(a), Q(a + 1)), Q(a)) == compose(P(a + 1), Q(a)),
                   "PQQ=PQ shift");
            expect(compose(compose(Q(a + 1), Q(a)), P(a + 1)) == compose(Q(a + 1), P(a)),
                   "QQP=QP shift");
        }
        rep.add(ok ? Check::pass("relations" + tag) : Check::fail("relations" + tag, witness));

        bool mok = true;
        for (int t = 0; t < 6 && mok; ++t) {
            BrauerElement x = random_brauer_element(m, rng);
            BrauerElement y = random_brauer_element(m, rng);
            mok = (rho(x * y, sig) == compose(rho(x, sig), rho(y, sig)));
        }
        rep.add(mok ? Check::pass("rho-multiplicative" + tag)
                    : Check::fail("rho-multiplicative" + tag, "rho(xy) != rho(x)rho(y)"));
    }

    // str_2(Q_12) = identity on leg 1; str_1 str_2 P_12 = superdimension
    {
        TensorOperator<Rational> q = build_Q(1, 2, 2, sig);
        TensorOperator<Rational> id1 = TensorOperator<Rational>::identity(sig, 1, Rational(1));
        rep.require("strQ/M" + std::to_string(sig.M) + "n" + std::to_string(sig.n),
                    q.partial_supertrace({2}) == id1, "str_2 Q_12 != id");
        TensorOperator<Rational> p = build_P(1, 2, 2, sig);
        rep.require("strP/M" + std::to_string(sig.M) + "n" + std::to_string(sig.n),
                    p.partial_supertrace({1, 2}).scalar() == w, "str P_12 != M-2n");
        TensorOperator<Rational> idf =
            TensorOperator<Rational>::identity(sig, 2, Rational(1));
        rep.require("str-id/M" + std::to_string(sig.M) + "n" + std::to_string(sig.n),
                    idf.partial_supertrace({1, 2}).scalar() == w * w,
                    "str of identity != (M-2n)^2");
    }
    rep.sort_checks();
    return rep;
}

VerificationReport qxq_check(Signature sig, int m, std::uint64_t seed) {
    if (m > 3)
        throw InvalidArgument("qxq_check supports m <= 3");
    VerificationReport rep;
    rep.campaign = "qxq";
    rep.params = {{"M", sig.M}, {"n", sig.n}, {"m", m}, {"seed", seed}};
    std::mt19937_64 rng(seed);

    std::vector<int> base_positions(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        base_positions[static_cast<std::size_t>(i)] = i + 1;

    auto run = [&](const TensorOperator<Rational>& x, const std::string& name) {
        for (int a = 1; a <= m; ++a) {
            TensorOperator<Rational> lifted = x.embed(base_positions, m + 1);
            TensorOperator<Rational> q = build_Q(a, m + 1, m + 1, sig);
            TensorOperator<Rational> lhs = compose(compose(q, lifted), q);
            TensorOperator<Rational> strx = x.partial_supertrace({a});
            std::vector<int> pos;
            for (int p = 1; p <= m; ++p)
                if (p != a)
                    pos.push_back(p);
            TensorOperator<Rational> rhs = compose(strx.embed(pos, m + 1), q);
            rep.require(name + "/a" + std::to_string(a), lhs == rhs, "qxq identity fails");
        }
    };

    run(TensorOperator<Rational>::identity(sig, m, Rational(1)), "identity");
    if (m >= 2) {
        for (int c = 2; c <= m; ++c)
            run(build_P(1, c, m, sig), "P_1" + std::to_string(c));
    }
    for (int t = 0; t < 5; ++t)
        run(random_operator(sig, m, 5, rng), "random" + std::to_string(t));
    rep.sort_checks();
    return rep;
}

} // namespace ospssv
