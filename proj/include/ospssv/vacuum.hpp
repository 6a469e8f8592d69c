#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ospssv/osp.hpp"
#include "ospssv/polynomial.hpp"

namespace ospssv {

/// One affine generator F_alpha[mode], or τ (basis = -1). The parity bit is
/// carried along so words can be handled without structure lookups.
struct Gen {
    int basis;
    int mode;
    int parity;

    static Gen tau() { return {-1, 0, 0}; }
    bool is_tau() const { return basis < 0; }

    friend bool operator==(const Gen& a, const Gen& b) {
        return a.basis == b.basis && a.mode == b.mode;
    }
    friend bool operator<(const Gen& a, const Gen& b) {
        if (a.mode != b.mode)
            return a.mode < b.mode;
        return a.basis < b.basis;
    }
};

using Word = std::vector<Gen>;

int word_parity(const Word& w);

/// Linear combination of canonical PBW words with coefficients polynomial in
/// K. In vacuum form all modes are negative and no τ appears; the full form
/// also admits nonnegative modes and trailing powers of τ.
class VacuumElement {
  public:
    VacuumElement() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, VarPoly>& terms() const { return terms_; }

    void add(const Word& w, const VarPoly& c);

    VacuumElement operator-() const;
    VacuumElement& operator+=(const VacuumElement& o);
    VacuumElement& operator-=(const VacuumElement& o);
    friend VacuumElement operator+(VacuumElement a, const VacuumElement& b) { return a += b; }
    friend VacuumElement operator-(VacuumElement a, const VacuumElement& b) { return a -= b; }
    VacuumElement& scale(const VarPoly& c);
    VacuumElement& scale(const Rational& c) { return scale(VarPoly::constant(c, Var::K)); }
    friend VacuumElement operator*(const VarPoly& c, VacuumElement x) { return x.scale(c); }
    friend bool operator==(const VacuumElement& a, const VacuumElement& b) {
        return a.terms_ == b.terms_;
    }

    /// Substitute the central charge; zero coefficients are pruned.
    VacuumElement substitute_K(const Rational& k0) const;

    /// Parity of the (homogeneous) support; 0 for the zero element.
    int parity() const;
    bool is_even() const;

    int max_K_degree() const;

    std::string str() const;
    nlohmann::json to_json() const;

  private:
    std::map<Word, VarPoly> terms_;
};

/// PBW normal-ordering calculator for U(osp_hat ⊕ Cτ) and the vacuum module.
class Uea {
  public:
    explicit Uea(Signature sig) : S_(&OspStructure::get(sig)) {}
    explicit Uea(const OspStructure& S) : S_(&S) {}

    const OspStructure& structure() const { return *S_; }
    Signature sig() const { return S_->sig(); }

    Gen gen(int basis, int mode) const {
        return {basis, mode, S_->parity(basis)};
    }

    /// Straighten a word. With vacuum=true, trailing τ and nonnegative-mode
    /// generators annihilate; the result is a canonical vacuum-module element.
    VacuumElement normal_order(const Word& w, bool vacuum = true) const;
    VacuumElement normal_order(const VarPoly& coeff, const Word& w, bool vacuum = true) const;

    /// Product in U(t^{-1} osp [t^{-1}]): all modes of both factors negative.
    VacuumElement u_multiply(const VacuumElement& x, const VacuumElement& y) const;

    /// Left action of one generator on a normal form.
    VacuumElement apply_gen(const Gen& g, const VacuumElement& x, bool vacuum = true) const;

  private:
    void straighten(VarPoly coeff, Word w, bool vacuum, VacuumElement& out) const;

    const OspStructure* S_;
};

} // namespace ospssv
