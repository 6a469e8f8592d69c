#include "ospssv/osp.hpp"

#include <mutex>
#include <sstream>

#include "ospssv/errors.hpp"

namespace ospssv {

void GlElement::add(int i, int j, const Rational& c) {
    if (i < 1 || j < 1 || i > sig.dim() || j > sig.dim())
        throw InvalidArgument("gl index out of range");
    if (c.is_zero())
        return;
    auto key = std::make_pair(i, j);
    auto [it, inserted] = coeff.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            coeff.erase(it);
    }
}

int GlElement::parity() const {
    if (coeff.empty())
        return 0;
    int p = -1;
    for (const auto& [ij, c] : coeff) {
        int q = (sig.parity(ij.first) + sig.parity(ij.second)) % 2;
        if (p < 0)
            p = q;
        else if (p != q)
            throw InvalidArgument("inhomogeneous gl element");
    }
    return p;
}

GlElement& GlElement::operator+=(const GlElement& o) {
    for (const auto& [ij, c] : o.coeff)
        add(ij.first, ij.second, c);
    return *this;
}

GlElement& GlElement::operator-=(const GlElement& o) {
    for (const auto& [ij, c] : o.coeff)
        add(ij.first, ij.second, -c);
    return *this;
}

GlElement GlElement::scaled(const Rational& c) const {
    GlElement r(sig);
    if (c.is_zero())
        return r;
    for (const auto& [ij, v] : coeff)
        r.coeff.emplace(ij, v * c);
    return r;
}

GlElement gl_bracket(const GlElement& x, const GlElement& y) {
    // [E_ij, E_kl] = δ_kj E_il - δ_il (-1)^{(bar i+bar j)(bar k+bar l)} E_kj
    GlElement r(x.sig);
    const Signature& sig = x.sig;
    for (const auto& [ij, cx] : x.coeff) {
        auto [i, j] = ij;
        int pij = (sig.parity(i) + sig.parity(j)) % 2;
        for (const auto& [kl, cy] : y.coeff) {
            auto [k, l] = kl;
            int pkl = (sig.parity(k) + sig.parity(l)) % 2;
            Rational c = cx * cy;
            if (k == j)
                r.add(i, l, c);
            if (i == l)
                r.add(k, j, (pij * pkl) % 2 ? c : -c);
        }
    }
    return r;
}

GlElement f_element(int i, int j, Signature sig) {
    if (i < 1 || j < 1 || i > sig.dim() || j > sig.dim())
        throw InvalidArgument("f_element index out of range");
    GlElement r(sig);
    r.add(i, j, Rational(1));
    int pi = sig.parity(i), pj = sig.parity(j);
    int s = ((pi * pj + pj) % 2 ? -1 : 1) * sig.sign(i) * sig.sign(j);
    r.add(sig.prime(j), sig.prime(i), Rational(-s));
    return r;
}

Rational kappa_f(int i, int j, int k, int l, Signature sig) {
    // (-1)^{bar i} δ_il δ_jk  -  (-1)^{bar i bar j} eps_i eps_j δ_{i k'} δ_{j l'}
    Rational r(0);
    if (i == l && j == k)
        r += Rational(sig.parity(i) ? -1 : 1);
    if (i == sig.prime(k) && j == sig.prime(l)) {
        int s = ((sig.parity(i) * sig.parity(j)) % 2 ? -1 : 1) * sig.sign(i) * sig.sign(j);
        r -= Rational(s);
    }
    return r;
}

struct OspStructure::Echelon {
    // rows in reduced form over the flattened E_ij coordinates, with each
    // row's expression in the chosen basis
    struct Row {
        std::map<int, Rational> v;
        std::map<int, Rational> combo;
    };
    std::vector<Row> rows;
    std::map<int, int> pivot_row;
    int dim_flat = 0;

    int flat(int i, int j, int d) const { return (i - 1) * d + (j - 1); }

    // reduce x against the rows; returns the residual and the combination
    std::pair<std::map<int, Rational>, std::map<int, Rational>>
    reduce(const GlElement& x, int d) const {
        std::map<int, Rational> v;
        for (const auto& [ij, c] : x.coeff)
            v[flat(ij.first, ij.second, d)] = c;
        std::map<int, Rational> combo;
        while (!v.empty()) {
            int p = v.begin()->first;
            auto it = pivot_row.find(p);
            if (it == pivot_row.end())
                break;
            const Row& row = rows[static_cast<std::size_t>(it->second)];
            Rational f = v.begin()->second;
            for (const auto& [j, c] : row.v) {
                auto& slot = v[j];
                slot -= f * c;
                if (slot.is_zero())
                    v.erase(j);
            }
            for (const auto& [g, c] : row.combo) {
                auto& slot = combo[g];
                slot += f * c;
                if (slot.is_zero())
                    combo.erase(g);
            }
        }
        return {std::move(v), std::move(combo)};
    }
};

OspStructure::OspStructure(Signature sig) : sig_(sig) {
    const int d = sig.dim();
    ech_ = std::make_shared<Echelon>();
    ech_->dim_flat = d * d;

    // Row reduction over the spanning set f_element(i,j) in lexicographic
    // order; vectors that increase the rank become basis elements.
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            GlElement f = f_element(i, j, sig);
            if (f.is_zero())
                continue;
            auto [residual, combo] = ech_->reduce(f, d);
            if (residual.empty())
                continue;
            int alpha = static_cast<int>(basis_ij_.size());
            basis_ij_.emplace_back(i, j);
            parity_.push_back(f.parity());
            Echelon::Row row;
            Rational inv = residual.begin()->second.inverse();
            for (auto& [p, c] : residual)
                row.v.emplace(p, c * inv);
            // residual = f - Σ combo_g basis_g, so f = residual + Σ combo;
            // express the new unit row in basis coordinates
            row.combo.emplace(alpha, inv);
            for (const auto& [g, c] : combo) {
                auto& slot = row.combo[g];
                slot -= inv * c;
                if (slot.is_zero())
                    row.combo.erase(g);
            }
            ech_->pivot_row[row.v.begin()->first] = static_cast<int>(ech_->rows.size());
            ech_->rows.push_back(std::move(row));
        }
    }

    const int dim_expected = sig.M * (sig.M - 1) / 2 + sig.n * (2 * sig.n + 1) +
                             2 * sig.M * sig.n;
    if (dim() != dim_expected)
        throw InvalidArgument("osp dimension mismatch against the closed formula");

    // cache coordinates of every F_kl
    coords_f_.assign(static_cast<std::size_t>(d) + 1, {});
    for (int k = 1; k <= d; ++k) {
        coords_f_[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(d) + 1, {});
        for (int l = 1; l <= d; ++l)
            coords_f_[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] =
                coords(f_element(k, l, sig));
    }

    // structure constants and the invariant form on basis pairs
    struct_.assign(static_cast<std::size_t>(dim()), {});
    kappa_.assign(static_cast<std::size_t>(dim()), {});
    for (int a = 0; a < dim(); ++a) {
        struct_[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(dim()), {});
        kappa_[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(dim()), Rational(0));
        for (int b = 0; b < dim(); ++b) {
            GlElement br = gl_bracket(basis_element(a), basis_element(b));
            struct_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = coords(br);
            auto [ia, ja] = basis_ij_[static_cast<std::size_t>(a)];
            auto [ib, jb] = basis_ij_[static_cast<std::size_t>(b)];
            kappa_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                kappa_f(ia, ja, ib, jb, sig);
        }
    }
}

GlElement OspStructure::basis_element(int alpha) const {
    auto [i, j] = basis_ij_[static_cast<std::size_t>(alpha)];
    return f_element(i, j, sig_);
}

std::vector<std::pair<int, Rational>> OspStructure::coords(const GlElement& x) const {
    auto [residual, combo] = ech_->reduce(x, sig_.dim());
    if (!residual.empty())
        throw InvalidArgument("element is not in the osp span");
    return {combo.begin(), combo.end()};
}

const std::vector<std::pair<int, Rational>>& OspStructure::coords_f(int k, int l) const {
    return coords_f_[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
}

const std::vector<std::pair<int, Rational>>& OspStructure::structconst(int alpha,
                                                                       int beta) const {
    return struct_[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(beta)];
}

const Rational& OspStructure::kappa(int alpha, int beta) const {
    return kappa_[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(beta)];
}

AffineBracketResult OspStructure::affine_bracket(int alpha, int r, int beta, int s) const {
    AffineBracketResult out;
    for (const auto& [gamma, c] : structconst(alpha, beta))
        out.linear[{gamma, r + s}] = c;
    out.central = (r != 0 && r == -s) ? Rational(r) * kappa(alpha, beta) : Rational(0);
    return out;
}

nlohmann::json OspStructure::to_json() const {
    nlohmann::json j;
    j["M"] = sig_.M;
    j["n"] = sig_.n;
    j["dim"] = dim();
    nlohmann::json basis = nlohmann::json::array();
    for (int a = 0; a < dim(); ++a) {
        nlohmann::json e;
        e["F"] = {basis_ij_[static_cast<std::size_t>(a)].first,
                  basis_ij_[static_cast<std::size_t>(a)].second};
        e["parity"] = parity_[static_cast<std::size_t>(a)];
        basis.push_back(e);
    }
    j["basis"] = basis;
    nlohmann::json form = nlohmann::json::array();
    for (int a = 0; a < dim(); ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (int b = 0; b < dim(); ++b)
            row.push_back(kappa_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].str());
        form.push_back(row);
    }
    j["form"] = form;
    nlohmann::json sc = nlohmann::json::array();
    for (int a = 0; a < dim(); ++a)
        for (int b = 0; b < dim(); ++b)
            for (const auto& [g, c] : structconst(a, b))
                sc.push_back({a, b, g, c.str()});
    j["structconst"] = sc;
    return j;
}

const OspStructure& OspStructure::get(Signature sig) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<OspStructure>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(sig.M, sig.n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<OspStructure>(new OspStructure(sig))).first;
    return *it->second;
}

} // namespace ospssv
