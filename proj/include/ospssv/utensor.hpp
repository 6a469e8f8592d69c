#pragma once

#include <map>

#include "ospssv/tensor.hpp"
#include "ospssv/vacuum.hpp"

namespace ospssv {

/// Element of U as a lazy linear combination of (not yet normal-ordered)
/// words; products concatenate, normalization happens at extraction time.
class UCoeff {
  public:
    UCoeff() = default;

    static UCoeff scalar(const VarPoly& c) {
        UCoeff u;
        u.add({}, c);
        return u;
    }
    static UCoeff one() { return scalar(VarPoly::constant(Rational(1), Var::K)); }
    static UCoeff of_gen(const Gen& g, const VarPoly& c) {
        UCoeff u;
        u.add({g}, c);
        return u;
    }

    bool is_zero() const { return terms_.empty(); } // structural
    const std::map<Word, VarPoly>& terms() const { return terms_; }

    void add(const Word& w, const VarPoly& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    UCoeff operator-() const {
        UCoeff r;
        for (const auto& [w, c] : terms_)
            r.terms_.emplace(w, -c);
        return r;
    }
    UCoeff& operator+=(const UCoeff& o) {
        for (const auto& [w, c] : o.terms_)
            add(w, c);
        return *this;
    }
    friend UCoeff operator*(const UCoeff& a, const UCoeff& b) {
        UCoeff r;
        for (const auto& [wa, ca] : a.terms_) {
            for (const auto& [wb, cb] : b.terms_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add(w, ca * cb);
            }
        }
        return r;
    }
    friend UCoeff operator*(const UCoeff& a, const VarPoly& c) {
        UCoeff r;
        for (const auto& [w, v] : a.terms_)
            r.add(w, v * c);
        return r;
    }
    friend UCoeff operator*(const UCoeff& a, const Rational& c) {
        return a * VarPoly::constant(c, Var::K);
    }
    friend bool operator==(const UCoeff& a, const UCoeff& b) { return a.terms_ == b.terms_; }

    /// Parity of the homogeneous word support.
    int parity() const {
        int p = -1;
        for (const auto& [w, c] : terms_) {
            int q = word_parity(w);
            if (p < 0)
                p = q;
            else if (p != q)
                throw InvalidArgument("inhomogeneous U coefficient");
        }
        return p < 0 ? 0 : p;
    }

  private:
    std::map<Word, VarPoly> terms_;
};

inline int coeff_parity(const UCoeff& c) { return c.parity(); }
inline bool coeff_is_zero(const UCoeff& c) { return c.is_zero(); }

inline int coeff_parity(const VacuumElement& c) { return c.parity(); }
inline bool coeff_is_zero(const VacuumElement& c) { return c.is_zero(); }

using UTensorOp = TensorOperator<UCoeff>;

/// F[r]_a = Σ_ij e_ij ⊗ F_ij[r] (-1)^{bar i bar j + bar i + bar j} with F_ij
/// expanded in the osp basis.
UTensorOp f_matrix(int r, int a, int legs, const Uea& uea);

/// τ + F[-1]_a.
UTensorOp f_factor(int a, int legs, const Uea& uea);

/// identity ⊗ τ.
UTensorOp tau_op(Signature sig, int legs);

/// Lift a scalar operator to U coefficients.
UTensorOp lift(const TensorOperator<Rational>& x);

/// Normal-order each coefficient (vacuum or full form).
TensorOperator<VacuumElement> normalize_entries(const UTensorOp& x, const Uea& uea,
                                                bool vacuum = true);

/// Normal-order a zero-leg U coefficient into the vacuum module.
VacuumElement vacuum_apply(const UCoeff& c, const Uea& uea);

/// Split words as polynomials in τ by moving every τ to the right end:
/// result[j] is the τ-free coefficient of τ^j.
std::map<int, UCoeff> tau_coefficients(const UCoeff& c);

} // namespace ospssv
