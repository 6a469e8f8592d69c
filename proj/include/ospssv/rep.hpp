#pragma once

#include <cstdint>
#include <vector>

#include "ospssv/brauer.hpp"
#include "ospssv/report.hpp"
#include "ospssv/tensor.hpp"

namespace ospssv {

/// One generator factor of a diagram word.
struct GenFactor {
    GenKind kind;
    int a;
    int b;
};

/// Factor a diagram into a loop-free word of s_ab / ε_ab generators (the
/// recomposed word is checked against the diagram).
std::vector<GenFactor> factor_diagram(const BrauerDiagram& d);

/// The action of B_m(M-2n): diagrams map to products of P/Q images of their
/// generator words, ω-coefficients are evaluated at M-2n.
TensorOperator<Rational> rho(const BrauerElement& x, Signature sig);
TensorOperator<Rational> rho_diagram(const BrauerDiagram& d, Signature sig);

/// All Brauer defining relations under P/Q images, plus rho multiplicativity
/// on pseudo-random element pairs.
VerificationReport rep_relations_check(Signature sig, int m_max, std::uint64_t seed = 1);

/// Q_{a,m+1} X Q_{a,m+1} = (str_a X) Q_{a,m+1} for randomized sparse X.
VerificationReport qxq_check(Signature sig, int m, std::uint64_t seed = 1);

} // namespace ospssv
