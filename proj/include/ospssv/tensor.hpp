#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ospssv/rational.hpp"
#include "ospssv/signature.hpp"

namespace ospssv {

inline int coeff_parity(const Rational&) { return 0; }
inline bool coeff_is_zero(const Rational& r) { return r.is_zero(); }

/// Multi-index pair (I, J) packed one nibble per index entry; row nibbles
/// first. Supports up to 8 legs with indices 1..15.
class TensorKey {
  public:
    static constexpr int max_legs = 8;

    static std::uint64_t pack(const std::vector<int>& row, const std::vector<int>& col) {
        std::uint64_t k = 0;
        const int legs = static_cast<int>(row.size());
        for (int a = 0; a < legs; ++a) {
            k |= static_cast<std::uint64_t>(row[static_cast<std::size_t>(a)]) << (4 * a);
            k |= static_cast<std::uint64_t>(col[static_cast<std::size_t>(a)]) << (4 * (legs + a));
        }
        return k;
    }
    static int row_at(std::uint64_t k, int a) { return static_cast<int>((k >> (4 * a)) & 0xF); }
    static int col_at(std::uint64_t k, int a, int legs) {
        return static_cast<int>((k >> (4 * (legs + a))) & 0xF);
    }
    static std::uint64_t row_part(std::uint64_t k, int legs) {
        return k & ((legs == max_legs) ? 0xFFFFFFFFull : ((1ull << (4 * legs)) - 1));
    }
    static std::uint64_t col_part(std::uint64_t k, int legs) { return k >> (4 * legs); }
};

/// Sparse operator on (C^{M|2n})^{⊗L} with coefficients in a super
/// coefficient ring R: Σ c_{I,J} e_{i1 j1} ⊗ ... ⊗ e_{iL jL} ⊗ c.
template <class R>
class TensorOperator {
  public:
    TensorOperator(Signature sig, int legs) : sig_(sig), legs_(legs) {
        if (legs < 0 || legs > TensorKey::max_legs)
            throw InvalidArgument("legs out of range");
        if (sig.dim() > 15)
            throw InvalidArgument("M + 2n too large for packed keys");
    }

    static TensorOperator identity(Signature sig, int legs, R unit) {
        TensorOperator t(sig, legs);
        std::vector<int> idx(static_cast<std::size_t>(legs), 1);
        if (legs == 0) {
            t.terms_[0] = std::move(unit);
            return t;
        }
        if (sig.dim() == 0)
            return t; // zero-dimensional space: empty operator
        while (true) {
            t.terms_[TensorKey::pack(idx, idx)] = unit;
            int a = 0;
            while (a < legs && idx[static_cast<std::size_t>(a)] == sig.dim()) {
                idx[static_cast<std::size_t>(a)] = 1;
                ++a;
            }
            if (a == legs)
                break;
            ++idx[static_cast<std::size_t>(a)];
        }
        return t;
    }

    const Signature& sig() const { return sig_; }
    int legs() const { return legs_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::uint64_t, R>& terms() const { return terms_; }

    void add_term(const std::vector<int>& row, const std::vector<int>& col, const R& c) {
        if (static_cast<int>(row.size()) != legs_ || static_cast<int>(col.size()) != legs_)
            throw SizeMismatch("multi-index length mismatch");
        add_key(TensorKey::pack(row, col), c);
    }

    void add_key(std::uint64_t key, const R& c) {
        if (coeff_is_zero(c))
            return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (coeff_is_zero(it->second))
                terms_.erase(it);
        }
    }

    TensorOperator operator-() const {
        TensorOperator t(sig_, legs_);
        for (const auto& [k, c] : terms_)
            t.terms_.emplace(k, -c);
        return t;
    }
    TensorOperator& operator+=(const TensorOperator& o) {
        check_shape(o);
        for (const auto& [k, c] : o.terms_)
            add_key(k, c);
        return *this;
    }
    TensorOperator& operator-=(const TensorOperator& o) {
        check_shape(o);
        for (const auto& [k, c] : o.terms_)
            add_key(k, -c);
        return *this;
    }
    friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
    friend TensorOperator operator-(TensorOperator a, const TensorOperator& b) { return a -= b; }

    template <class S>
    TensorOperator& scale(const S& c) {
        TensorOperator t(sig_, legs_);
        for (const auto& [k, v] : terms_)
            t.add_key(k, v * c);
        *this = std::move(t);
        return *this;
    }

    friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
        return a.sig_ == b.sig_ && a.legs_ == b.legs_ && a.terms_ == b.terms_;
    }

    /// Matrix-style contraction over the middle multi-index with the Koszul
    /// sign for tensor-factor and coefficient crossings.
    friend TensorOperator compose(const TensorOperator& x, const TensorOperator& y) {
        x.check_shape(y);
        const int legs = x.legs_;
        const Signature& sig = x.sig_;
        TensorOperator out(sig, legs);

        struct YTerm {
            std::uint64_t col;
            const R* coeff;
            std::uint32_t par_prefix[TensorKey::max_legs + 1]; // prefix sums of |y_a|
        };
        std::map<std::uint64_t, std::vector<YTerm>> by_row;
        for (const auto& [k, c] : y.terms_) {
            YTerm t;
            t.col = TensorKey::col_part(k, legs);
            t.coeff = &c;
            t.par_prefix[0] = 0;
            for (int a = 0; a < legs; ++a) {
                int pa = sig.parity(TensorKey::row_at(k, a)) ^
                         sig.parity(TensorKey::col_at(k, a, legs));
                t.par_prefix[a + 1] = t.par_prefix[a] + static_cast<std::uint32_t>(pa);
            }
            by_row[TensorKey::row_part(k, legs)].push_back(std::move(t));
        }

        for (const auto& [kx, cx] : x.terms_) {
            std::uint64_t mid = TensorKey::col_part(kx, legs);
            auto it = by_row.find(mid);
            if (it == by_row.end())
                continue;
            int xq[TensorKey::max_legs]; // |x_b| leg parities
            for (int b = 0; b < legs; ++b)
                xq[b] = sig.parity(TensorKey::row_at(kx, b)) ^
                        sig.parity(TensorKey::col_at(kx, b, legs));
            int cx_par = coeff_parity(cx) & 1;
            std::uint64_t xrow = TensorKey::row_part(kx, legs);
            for (const YTerm& yt : it->second) {
                std::uint32_t s = 0;
                for (int b = 0; b < legs; ++b)
                    if (xq[b])
                        s += yt.par_prefix[b]; // Σ_{a<b} |y_a| |x_b|
                s += static_cast<std::uint32_t>(cx_par) * yt.par_prefix[legs];
                R prod = cx * (*yt.coeff);
                if (s & 1)
                    prod = -prod;
                out.add_key(xrow | (yt.col << (4 * legs)), prod);
            }
        }
        return out;
    }

    /// Keep terms with equal row and column index on each traced leg, with a
    /// supertrace sign per traced leg; surviving legs keep their order.
    TensorOperator partial_supertrace(const std::set<int>& legs_to_trace) const {
        for (int a : legs_to_trace)
            if (a < 1 || a > legs_)
                throw InvalidArgument("trace leg out of range");
        const int new_legs = legs_ - static_cast<int>(legs_to_trace.size());
        TensorOperator out(sig_, new_legs);
        std::vector<int> row(static_cast<std::size_t>(new_legs)),
            col(static_cast<std::size_t>(new_legs));
        for (const auto& [k, c] : terms_) {
            int sign = 1;
            bool diag = true;
            int pos = 0;
            for (int a = 0; a < legs_; ++a) {
                int i = TensorKey::row_at(k, a), j = TensorKey::col_at(k, a, legs_);
                if (legs_to_trace.count(a + 1)) {
                    if (i != j) {
                        diag = false;
                        break;
                    }
                    if (sig_.parity(i))
                        sign = -sign;
                } else {
                    row[static_cast<std::size_t>(pos)] = i;
                    col[static_cast<std::size_t>(pos)] = j;
                    ++pos;
                }
            }
            if (!diag)
                continue;
            R v = sign < 0 ? -c : c;
            out.add_key(TensorKey::pack(row, col), v);
        }
        return out;
    }

    /// The coefficient of a zero-leg operator.
    R scalar() const {
        if (legs_ != 0)
            throw InvalidArgument("scalar() on an operator with legs");
        if (terms_.empty())
            return R{};
        return terms_.begin()->second;
    }

    /// Place this operator's legs at the given (1-based, increasing) target
    /// positions of a larger leg count; the remaining legs become identity.
    TensorOperator embed(const std::vector<int>& positions, int new_legs) const {
        if (static_cast<int>(positions.size()) != legs_)
            throw InvalidArgument("embed: one position per leg required");
        if (new_legs > TensorKey::max_legs)
            throw InvalidArgument("embed: too many legs");
        std::vector<bool> used(static_cast<std::size_t>(new_legs) + 1, false);
        for (int p : positions) {
            if (p < 1 || p > new_legs || used[static_cast<std::size_t>(p)])
                throw InvalidArgument("embed: bad positions");
            used[static_cast<std::size_t>(p)] = true;
        }
        std::vector<int> id_legs;
        for (int p = 1; p <= new_legs; ++p)
            if (!used[static_cast<std::size_t>(p)])
                id_legs.push_back(p);
        TensorOperator out(sig_, new_legs);
        const int extra = static_cast<int>(id_legs.size());
        std::vector<int> row(static_cast<std::size_t>(new_legs)),
            col(static_cast<std::size_t>(new_legs));
        for (const auto& [k, c] : terms_) {
            for (int a = 0; a < legs_; ++a) {
                row[static_cast<std::size_t>(positions[static_cast<std::size_t>(a)] - 1)] =
                    TensorKey::row_at(k, a);
                col[static_cast<std::size_t>(positions[static_cast<std::size_t>(a)] - 1)] =
                    TensorKey::col_at(k, a, legs_);
            }
            // sweep all diagonal assignments of the identity legs
            std::vector<int> idx(static_cast<std::size_t>(extra), 1);
            if (sig_.dim() == 0 && extra > 0)
                continue;
            while (true) {
                for (int t = 0; t < extra; ++t) {
                    row[static_cast<std::size_t>(id_legs[static_cast<std::size_t>(t)] - 1)] =
                        idx[static_cast<std::size_t>(t)];
                    col[static_cast<std::size_t>(id_legs[static_cast<std::size_t>(t)] - 1)] =
                        idx[static_cast<std::size_t>(t)];
                }
                out.add_key(TensorKey::pack(row, col), c);
                int t = 0;
                while (t < extra && idx[static_cast<std::size_t>(t)] == sig_.dim()) {
                    idx[static_cast<std::size_t>(t)] = 1;
                    ++t;
                }
                if (t == extra)
                    break;
                ++idx[static_cast<std::size_t>(t)];
            }
        }
        return out;
    }

    /// Map coefficients into another ring.
    template <class S, class F>
    TensorOperator<S> map_coeffs(F&& f) const {
        TensorOperator<S> out(sig_, legs_);
        for (const auto& [k, c] : terms_)
            out.add_key(k, f(c));
        return out;
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [k, c] : terms_) {
            nlohmann::json t;
            nlohmann::json I = nlohmann::json::array(), J = nlohmann::json::array();
            for (int a = 0; a < legs_; ++a) {
                I.push_back(TensorKey::row_at(k, a));
                J.push_back(TensorKey::col_at(k, a, legs_));
            }
            t["I"] = I;
            t["J"] = J;
            std::ostringstream os;
            os << c;
            t["coefficient"] = os.str();
            arr.push_back(t);
        }
        return arr;
    }

  private:
    void check_shape(const TensorOperator& o) const {
        if (!(sig_ == o.sig_) || legs_ != o.legs_)
            throw SizeMismatch("operator shapes differ");
    }

    Signature sig_;
    int legs_;
    std::map<std::uint64_t, R> terms_;

    template <class S>
    friend class TensorOperator;
};

/// P_ab = Σ_ij e_ij ⊗ e_ji (-1)^{bar j}, identity on the other legs.
TensorOperator<Rational> build_P(int a, int b, int legs, Signature sig);
/// Q_ab = Σ_ij e_ij ⊗ e_{i'j'} (-1)^{bar i bar j + bar i + bar j} eps_i eps_j.
TensorOperator<Rational> build_Q(int a, int b, int legs, Signature sig);

} // namespace ospssv
