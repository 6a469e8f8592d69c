#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ospssv/rational.hpp"
#include "ospssv/signature.hpp"

namespace ospssv {

/// Homogeneous element of gl_{M|2n} in E_ij coordinates.
struct GlElement {
    Signature sig;
    std::map<std::pair<int, int>, Rational> coeff;

    explicit GlElement(Signature s) : sig(s) {}

    bool is_zero() const { return coeff.empty(); }
    void add(int i, int j, const Rational& c);
    int parity() const; // of the (required) homogeneous support

    GlElement& operator+=(const GlElement& o);
    GlElement& operator-=(const GlElement& o);
    friend GlElement operator+(GlElement a, const GlElement& b) { return a += b; }
    friend GlElement operator-(GlElement a, const GlElement& b) { return a -= b; }
    GlElement scaled(const Rational& c) const;
    friend bool operator==(const GlElement& a, const GlElement& b) {
        return a.coeff == b.coeff;
    }

    /// Super bracket through the E_ij commutation relations.
    friend GlElement gl_bracket(const GlElement& x, const GlElement& y);
};

/// F_ij = E_ij - (-1)^{bar i bar j + bar j} eps_i eps_j E_{j'i'}; may vanish.
GlElement f_element(int i, int j, Signature sig);

/// The invariant-form value paired with F_ij, F_kl as read off the central
/// term of the affine bracket.
Rational kappa_f(int i, int j, int k, int l, Signature sig);

struct AffineBracketResult {
    std::map<std::pair<int, int>, Rational> linear; // (basis index, mode) -> coeff
    Rational central;                               // coefficient of K
};

/// Basis, structure constants and invariant form of osp_{M|2n}, built once
/// per signature.
class OspStructure {
  public:
    static const OspStructure& get(Signature sig); // cached per signature

    const Signature& sig() const { return sig_; }
    int dim() const { return static_cast<int>(basis_ij_.size()); }
    int parity(int alpha) const { return parity_[static_cast<std::size_t>(alpha)]; }
    std::pair<int, int> basis_ij(int alpha) const {
        return basis_ij_[static_cast<std::size_t>(alpha)];
    }
    GlElement basis_element(int alpha) const;

    /// Coordinates of an arbitrary gl element in the osp basis; throws when
    /// the element is outside the span.
    std::vector<std::pair<int, Rational>> coords(const GlElement& x) const;
    /// Cached coordinates of F_kl.
    const std::vector<std::pair<int, Rational>>& coords_f(int k, int l) const;

    /// [x_alpha, x_beta] = Σ c^gamma x_gamma, as a sparse vector.
    const std::vector<std::pair<int, Rational>>& structconst(int alpha, int beta) const;
    const Rational& kappa(int alpha, int beta) const;

    int dual_coxeter() const { return sig_.dual_coxeter(); }

    AffineBracketResult affine_bracket(int alpha, int r, int beta, int s) const;

    nlohmann::json to_json() const;

  private:
    explicit OspStructure(Signature sig);

    Signature sig_;
    std::vector<std::pair<int, int>> basis_ij_;
    std::vector<int> parity_;
    // reduced echelon rows of the basis matrix plus bookkeeping for coords()
    struct Echelon;
    std::shared_ptr<Echelon> ech_;
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> coords_f_;
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> struct_;
    std::vector<std::vector<Rational>> kappa_;
};

} // namespace ospssv
