#include "ospssv/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ospssv {

void BrauerElement::add(const BrauerDiagram& d, const RatFun& c) {
    if (d.size() != m_)
        throw SizeMismatch("diagram size does not match element size");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

BrauerElement BrauerElement::operator-() const {
    BrauerElement r(m_);
    for (const auto& [d, c] : terms_)
        r.terms_.emplace(d, -c);
    return r;
}

BrauerElement& BrauerElement::operator+=(const BrauerElement& o) {
    if (m_ != o.m_)
        throw SizeMismatch("element sizes differ");
    for (const auto& [d, c] : o.terms_)
        add(d, c);
    return *this;
}

BrauerElement& BrauerElement::operator-=(const BrauerElement& o) {
    if (m_ != o.m_)
        throw SizeMismatch("element sizes differ");
    for (const auto& [d, c] : o.terms_)
        add(d, -c);
    return *this;
}

BrauerElement operator*(const BrauerElement& a, const BrauerElement& b) {
    if (a.size() != b.size())
        throw SizeMismatch("element sizes differ");
    BrauerElement r(a.size());
    const RatFun omega = RatFun::omega();
    for (const auto& [dx, cx] : a.terms_) {
        for (const auto& [dy, cy] : b.terms_) {
            auto [d, loops] = compose_diagrams(dx, dy);
            RatFun c = cx * cy;
            for (int i = 0; i < loops; ++i)
                c *= omega;
            r.add(d, c);
        }
    }
    return r;
}

BrauerElement operator*(const RatFun& c, BrauerElement a) {
    BrauerElement r(a.size());
    if (c.is_zero())
        return r;
    for (auto& [d, x] : a.terms_)
        r.add(d, c * x);
    return r;
}

BrauerElement BrauerElement::partial_transpose(int a) const {
    BrauerElement r(m_);
    for (const auto& [d, c] : terms_)
        r.add(d.partial_transpose(a), c);
    return r;
}

BrauerElement BrauerElement::embed_into(int big_m) const {
    BrauerElement r(big_m);
    for (const auto& [d, c] : terms_)
        r.add(d.embed_into(big_m), c);
    return r;
}

BrauerElement BrauerElement::shift_into(int offset, int big_m) const {
    BrauerElement r(big_m);
    for (const auto& [d, c] : terms_)
        r.add(d.shift_into(offset, big_m), c);
    return r;
}

std::string BrauerElement::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first)
            os << " + ";
        os << "(" << c.str() << ")[" << d.str() << "]";
        first = false;
    }
    return os.str();
}

nlohmann::json BrauerElement::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [d, c] : terms_) {
        nlohmann::json t;
        t["coefficient"] = c.str();
        t["diagram"] = d.str();
        arr.push_back(t);
    }
    return arr;
}

BrauerDiagram generator_diagram(GenKind kind, int a, int b, int m) {
    if (a < 1 || b < 1 || a > m || b > m || a == b)
        throw InvalidArgument("generator legs out of range");
    if (a > b)
        std::swap(a, b);
    BrauerDiagram d = BrauerDiagram::identity(m);
    std::vector<std::pair<int, int>> pairs;
    for (int leg = 1; leg <= m; ++leg) {
        if (leg == a || leg == b)
            continue;
        pairs.emplace_back(d.top_node(leg), d.bottom_node(leg));
    }
    if (kind == GenKind::Transposition) {
        pairs.emplace_back(d.top_node(a), d.bottom_node(b));
        pairs.emplace_back(d.top_node(b), d.bottom_node(a));
    } else {
        pairs.emplace_back(d.top_node(a), d.top_node(b));
        pairs.emplace_back(d.bottom_node(a), d.bottom_node(b));
    }
    return BrauerDiagram::from_pairs(m, pairs);
}

BrauerElement generator(GenKind kind, int a, int b, int m) {
    return BrauerElement(generator_diagram(kind, a, b, m));
}

BrauerElement generator0(GenKind kind, int a, int b, int m) {
    return generator(kind, a + 1, b + 1, m);
}

BrauerElement group_symmetriser(int k, int m) {
    if (k < 1 || k > m)
        throw InvalidArgument("symmetriser size out of range");
    BrauerElement r(m);
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 1);
    RatFun c = RatFun(factorial(static_cast<unsigned>(k))).inverse();
    do {
        std::vector<std::pair<int, int>> pairs;
        BrauerDiagram id = BrauerDiagram::identity(m);
        for (int i = 1; i <= k; ++i)
            pairs.emplace_back(id.top_node(i), id.bottom_node(perm[static_cast<std::size_t>(i - 1)]));
        for (int leg = k + 1; leg <= m; ++leg)
            pairs.emplace_back(id.top_node(leg), id.bottom_node(leg));
        r.add(BrauerDiagram::from_pairs(m, pairs), c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

BrauerElement brauer_symmetriser(int k, int m) {
    if (k < 1 || k > m)
        throw InvalidArgument("symmetriser size out of range");
    BrauerElement s(k);
    RatFun kfac_inv = RatFun(factorial(static_cast<unsigned>(k))).inverse();
    for (const auto& d : BrauerDiagram::all(k)) {
        int r = d.top_arcs();
        if (2 * r > k)
            continue; // cannot happen: arcs pair tops among themselves
        RatFun c = kfac_inv / RatFun(half_binomial(k, r));
        if (r % 2 == 1)
            c = -c;
        s.add(d, c);
    }
    return s.embed_into(m);
}

BrauerElement brauer_symmetriser_recursion(int k, int m) {
    if (k < 1 || k > m)
        throw InvalidArgument("symmetriser size out of range");
    if (k == 1)
        return BrauerElement::one(m);
    BrauerElement prev = brauer_symmetriser_recursion(k - 1, m);
    BrauerElement phi_sum = BrauerElement::zero(m);
    for (int a = 1; a < k; ++a)
        phi_sum += generator(GenKind::Transposition, a, k, m) -
                   generator(GenKind::Contraction, a, k, m);
    VarPoly w = VarPoly::variable(Var::Omega);
    BrauerElement left = BrauerElement::one(m) + phi_sum;
    BrauerElement right =
        RatFun(w + VarPoly::constant(Rational(k - 3), Var::Omega)) * BrauerElement::one(m) +
        phi_sum;
    RatFun scale = RatFun::of(VarPoly::constant(1, Var::Omega),
                              VarPoly::constant(Rational(k), Var::Omega) *
                                  (w + VarPoly::constant(Rational(2 * k - 4), Var::Omega)));
    return scale * (left * (right * prev));
}

BrauerElement brauer_symmetriser_recursion2(int k, int m) {
    if (k < 1 || k > m)
        throw InvalidArgument("symmetriser size out of range");
    if (k == 1)
        return BrauerElement::one(m);
    BrauerElement prev = brauer_symmetriser_recursion2(k - 1, m);
    VarPoly w = VarPoly::variable(Var::Omega);
    RatFun two_over = RatFun::of(VarPoly::constant(2, Var::Omega),
                                 w + VarPoly::constant(Rational(2 * k - 4), Var::Omega));
    BrauerElement acc = BrauerElement::one(m);
    for (int a = 1; a < k; ++a)
        acc += generator(GenKind::Transposition, a, k, m);
    for (int a = 1; a < k; ++a)
        acc -= two_over * generator(GenKind::Contraction, a, k, m);
    for (int a = 1; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            acc -= two_over * (generator(GenKind::Transposition, a, k, m) *
                               generator(GenKind::Contraction, b, k, m));
    return RatFun(Rational(1, k)) * (acc * prev);
}

BrauerElement q_element(int k, int m) {
    if (k < 1 || k > m)
        throw InvalidArgument("q_element size out of range");
    const int big = 2 * m + 1;
    BrauerElement r = BrauerElement::one(big);
    for (int a = 1; a <= k; ++a)
        r = r * generator(GenKind::Contraction, a + 1, m + a + 1, big);
    return r;
}

BrauerElement JmCertificate::expand(int m) const {
    BrauerElement r(m);
    for (const auto& e : entries) {
        BrauerDiagram d = e.diagram.size() == m ? e.diagram : e.diagram.embed_into(m);
        r.add(d, e.coeff);
        r.add(d.partial_transpose(e.leg), e.coeff);
    }
    return r;
}

std::optional<JmCertificate> jm_membership(const BrauerElement& x, int k, int m) {
    if (k < 1 || k > m)
        throw InvalidArgument("jm_membership: bad k");
    for (const auto& [d, c] : x.terms())
        if (!d.identity_from(k))
            throw InvalidArgument("jm_membership: support extends beyond the first k legs");

    // Work inside B_k; the span vectors d + d^{t_a} have constant integer
    // coordinates, so elimination runs over Q and only the reduction of x
    // needs C(ω) arithmetic.
    const std::vector<BrauerDiagram> basis = BrauerDiagram::all(k);
    std::map<BrauerDiagram, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index.emplace(basis[i], static_cast<int>(i));

    struct Generator {
        BrauerDiagram d;
        int leg;
    };
    std::vector<Generator> gens;
    struct Row {
        std::map<int, Rational> v;            // sparse coordinates
        std::map<int, Rational> combo;        // expression in generators
    };
    std::vector<Row> echelon; // sorted insertion by pivot
    std::map<int, int> pivot_row;

    auto reduce = [&](Row& row) {
        while (!row.v.empty()) {
            int p = row.v.begin()->first;
            auto it = pivot_row.find(p);
            if (it == pivot_row.end())
                return;
            const Row& er = echelon[static_cast<std::size_t>(it->second)];
            Rational f = row.v.begin()->second; // echelon pivot is 1
            for (const auto& [j, c] : er.v) {
                auto& slot = row.v[j];
                slot -= f * c;
                if (slot.is_zero())
                    row.v.erase(j);
            }
            for (const auto& [g, c] : er.combo) {
                auto& slot = row.combo[g];
                slot -= f * c;
                if (slot.is_zero())
                    row.combo.erase(g);
            }
        }
    };

    for (int a = 1; a <= k; ++a) {
        for (const auto& d : basis) {
            BrauerDiagram dt = d.partial_transpose(a);
            if (dt < d)
                continue; // handle each t_a orbit once
            Row row;
            row.v[index.at(d)] += Rational(1);
            auto& slot = row.v[index.at(dt)];
            slot += Rational(1);
            if (slot.is_zero())
                row.v.erase(index.at(dt));
            int gid = static_cast<int>(gens.size());
            gens.push_back({d, a});
            row.combo[gid] = Rational(1);
            reduce(row);
            if (row.v.empty()) {
                gens.pop_back();
                continue;
            }
            Rational inv = row.v.begin()->second.inverse();
            for (auto& [j, c] : row.v)
                c *= inv;
            for (auto& [g, c] : row.combo)
                c *= inv;
            pivot_row[row.v.begin()->first] = static_cast<int>(echelon.size());
            echelon.push_back(std::move(row));
        }
    }

    // Reduce the target over C(ω) against the rational echelon rows.
    std::map<int, RatFun> target;
    for (const auto& [d, c] : x.terms())
        target[index.at(d.restrict_to(k))] = c;
    std::map<int, RatFun> gen_coeff;
    while (!target.empty()) {
        int p = target.begin()->first;
        auto it = pivot_row.find(p);
        if (it == pivot_row.end())
            return std::nullopt;
        const Row& er = echelon[static_cast<std::size_t>(it->second)];
        RatFun f = target.begin()->second;
        for (const auto& [j, c] : er.v) {
            auto& slot = target[j];
            slot -= f * RatFun(c);
            if (slot.is_zero())
                target.erase(j);
        }
        for (const auto& [g, c] : er.combo) {
            auto& slot = gen_coeff[g];
            slot += f * RatFun(c);
            if (slot.is_zero())
                gen_coeff.erase(g);
        }
    }

    JmCertificate cert;
    for (const auto& [g, c] : gen_coeff)
        cert.entries.push_back(
            {gens[static_cast<std::size_t>(g)].d, gens[static_cast<std::size_t>(g)].leg, c});
    // sanity: the certificate must re-expand to x exactly
    BrauerElement check = cert.expand(m);
    if (!((check - x).is_zero()))
        throw InvalidArgument("internal: certificate re-expansion mismatch");
    return cert;
}

} // namespace ospssv
