#pragma once

#include "ospssv/errors.hpp"

namespace ospssv {

/// Parameters of the super space C^{M|2n} and the index data derived from
/// them: the involution i', the parity bar(i), and the sign eps_i, for
/// 1 <= i <= M+2n. The odd coordinates are the first n and the last n.
struct Signature {
    int M = 0;
    int n = 0;

    Signature() = default;
    Signature(int M_, int n_) : M(M_), n(n_) {
        if (M < 0 || n < 0)
            throw InvalidArgument("signature needs M >= 0 and n >= 0");
    }

    int dim() const { return M + 2 * n; }
    int superdim() const { return M - 2 * n; }
    int dual_coxeter() const { return M - 2 * n - 2; }

    int prime(int i) const { return M + 2 * n - i + 1; }
    int parity(int i) const { return (i <= n || i > M + n) ? 1 : 0; }
    int sign(int i) const { return i <= M + n ? 1 : -1; }

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.M == b.M && a.n == b.n;
    }
};

} // namespace ospssv
