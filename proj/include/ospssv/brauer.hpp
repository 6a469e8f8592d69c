#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ospssv/diagram.hpp"
#include "ospssv/ratfun.hpp"
#include "ospssv/report.hpp"

namespace ospssv {

/// Finitely supported linear combination of Brauer diagrams over C(ω).
class BrauerElement {
  public:
    explicit BrauerElement(int m) : m_(m) {}
    BrauerElement(const BrauerDiagram& d, const RatFun& c = RatFun(1)) : m_(d.size()) {
        add(d, c);
    }

    static BrauerElement zero(int m) { return BrauerElement(m); }
    static BrauerElement one(int m) { return BrauerElement(BrauerDiagram::identity(m)); }

    int size() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<BrauerDiagram, RatFun>& terms() const { return terms_; }
    RatFun coeff(const BrauerDiagram& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? RatFun(0) : it->second;
    }

    void add(const BrauerDiagram& d, const RatFun& c);

    BrauerElement operator-() const;
    BrauerElement& operator+=(const BrauerElement& o);
    BrauerElement& operator-=(const BrauerElement& o);
    friend BrauerElement operator+(BrauerElement a, const BrauerElement& b) { return a += b; }
    friend BrauerElement operator-(BrauerElement a, const BrauerElement& b) { return a -= b; }
    friend BrauerElement operator*(const BrauerElement& a, const BrauerElement& b);
    friend BrauerElement operator*(const RatFun& c, BrauerElement a);
    friend BrauerElement operator*(BrauerElement a, const RatFun& c) { return c * std::move(a); }
    friend bool operator==(const BrauerElement& a, const BrauerElement& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    /// Linear extension of the diagram operation t_a.
    BrauerElement partial_transpose(int a) const;

    BrauerElement embed_into(int big_m) const;
    BrauerElement shift_into(int offset, int big_m) const;

    std::string str() const;
    /// Coefficient-diagram pair list.
    nlohmann::json to_json() const;

  private:
    int m_;
    std::map<BrauerDiagram, RatFun> terms_;
};

enum class GenKind { Transposition, Contraction };

/// s_ab (T_a-B_b, T_b-B_a) or ε_ab (T_a-T_b, B_a-B_b), identity elsewhere.
BrauerElement generator(GenKind kind, int a, int b, int m);
BrauerDiagram generator_diagram(GenKind kind, int a, int b, int m);
/// Same generator in the 0-based labelling 0..m-1 used on size-(2m+1)
/// instances.
BrauerElement generator0(GenKind kind, int a, int b, int m);

/// h^(k) embedded in B_m: the symmetric-group averaging idempotent on legs 1..k.
BrauerElement group_symmetriser(int k, int m);

/// s^(k) embedded in B_m, built from the closed diagram-count formula.
BrauerElement brauer_symmetriser(int k, int m);

/// Cross-check form of s^(k): the two-factor recursion
/// s^(k) = (1 + Σφ)(ω+k-3+Σφ) s^(k-1) / (k(ω+2k-4)) with φ_a = s_ak - ε_ak.
BrauerElement brauer_symmetriser_recursion(int k, int m);
/// Cross-check form of s^(k): the expanded one-step recursion.
BrauerElement brauer_symmetriser_recursion2(int k, int m);

/// q^(k) = ε_{1,m+1} ε_{2,m+2} ... ε_{k,m+k} in B_{2m+1} with 0-based labels
/// 0..2m (labels are shifted by one internally).
BrauerElement q_element(int k, int m);

struct JmCertificate {
    struct Entry {
        BrauerDiagram diagram;
        int leg;
        RatFun coeff;
    };
    std::vector<Entry> entries;

    /// Σ c (d + d^{t_a}), in B_m.
    BrauerElement expand(int m) const;
};

/// Decides membership of x in the span of {d + d^{t_a}} over diagrams d of
/// B_k (embedded into B_m with vertical strands) and 1 <= a <= k. Returns a
/// re-expandable certificate on success.
std::optional<JmCertificate> jm_membership(const BrauerElement& x, int k, int m);

/// Exact verification of the purely diagrammatic identity catalog over C(ω),
/// on algebras up to B_{2 m_max + 1}.
VerificationReport identity_suite(int m_max);

/// J_k membership battery: γ_k s^(k) - h^(k) for k <= k_max and h^(l) for odd
/// l <= l_max, each with a certificate that is re-expanded and checked.
VerificationReport jm_suite(int k_max, int l_max);

} // namespace ospssv
