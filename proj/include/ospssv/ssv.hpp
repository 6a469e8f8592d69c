#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ospssv/report.hpp"
#include "ospssv/utensor.hpp"

namespace ospssv {

struct Partition {
    std::vector<int> parts; // weakly decreasing, positive

    explicit Partition(std::vector<int> p);
    int sum() const;
    int length() const { return static_cast<int>(parts.size()); }
    std::string str() const;
};

/// All partitions of m, largest part first (descending lexicographic).
std::vector<Partition> all_partitions(int m);
/// Partitions of m with even length, in the same deterministic order.
std::vector<Partition> partitions_even_length(int m);

/// Number of permutations in S_m of cycle type λ: m!/z_λ.
Rational cycle_count(const Partition& lambda);

/// Y_{m,l}(T) = (l!/m!) prod_{k=l}^{m-1} (T + k).
VarPoly y_poly(int m, int l);

struct SSVector {
    int M = 0;
    int n = 0;
    int m = 0;
    VacuumElement value;
    struct ExpansionEntry {
        Partition lambda;
        Rational c;
        Rational y;
    };
    std::vector<ExpansionEntry> expansion;

    nlohmann::json to_json() const;
};

/// Φ_m by the partition-expansion formula: always defined.
SSVector phi_integral(Signature sig, int m);

/// Φ_m through γ_m(M-2n) str S^(m) (τ+F[-1]_1)...(τ+F[-1]_m) 1; throws
/// PoleAtEvaluation on singular parameter sets.
SSVector phi_rational(Signature sig, int m);

VerificationReport verify_annihilation(Signature sig, int m, const std::set<int>& modes = {0, 1});
VerificationReport verify_commutativity(Signature sig, const std::set<int>& degrees);
VerificationReport verify_rep_identities(Signature sig, int m, std::uint64_t seed = 1,
                                         int instances = 50);
VerificationReport psi_relation_check(Signature sig, int m, int k);
VerificationReport ev_centrality_check(Signature sig, int m, const Rational& z);
VerificationReport integral_rational_equivalence(Signature sig, int m);

} // namespace ospssv
