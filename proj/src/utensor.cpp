#include "ospssv/utensor.hpp"

namespace ospssv {

UTensorOp f_matrix(int r, int a, int legs, const Uea& uea) {
    const Signature sig = uea.sig();
    if (a < 1 || a > legs)
        throw InvalidArgument("f_matrix leg out of range");
    const OspStructure& S = uea.structure();
    TensorOperator<UCoeff> one_leg(sig, 1);
    std::vector<int> row(1), col(1);
    for (int i = 1; i <= sig.dim(); ++i) {
        for (int j = 1; j <= sig.dim(); ++j) {
            const auto& co = S.coords_f(i, j);
            if (co.empty())
                continue;
            int pi = sig.parity(i), pj = sig.parity(j);
            Rational sign((pi * pj + pi + pj) % 2 ? -1 : 1);
            UCoeff c;
            for (const auto& [alpha, v] : co)
                c.add({uea.gen(alpha, r)}, VarPoly::constant(v * sign, Var::K));
            row[0] = i;
            col[0] = j;
            one_leg.add_term(row, col, c);
        }
    }
    return one_leg.embed({a}, legs);
}

UTensorOp f_factor(int a, int legs, const Uea& uea) {
    UTensorOp t = tau_op(uea.sig(), legs);
    t += f_matrix(-1, a, legs, uea);
    return t;
}

UTensorOp tau_op(Signature sig, int legs) {
    return UTensorOp::identity(
        sig, legs, UCoeff::of_gen(Gen::tau(), VarPoly::constant(Rational(1), Var::K)));
}

UTensorOp lift(const TensorOperator<Rational>& x) {
    return x.map_coeffs<UCoeff>([](const Rational& c) {
        return UCoeff::scalar(VarPoly::constant(c, Var::K));
    });
}

TensorOperator<VacuumElement> normalize_entries(const UTensorOp& x, const Uea& uea,
                                                bool vacuum) {
    return x.map_coeffs<VacuumElement>([&](const UCoeff& c) {
        VacuumElement v;
        for (const auto& [w, coeff] : c.terms())
            v += uea.normal_order(coeff, w, vacuum);
        return v;
    });
}

VacuumElement vacuum_apply(const UCoeff& c, const Uea& uea) {
    VacuumElement v;
    for (const auto& [w, coeff] : c.terms())
        v += uea.normal_order(coeff, w, true);
    return v;
}

std::map<int, UCoeff> tau_coefficients(const UCoeff& c) {
    std::map<int, UCoeff> out;
    // move each τ to the right end with τ F[r] = F[r] τ - r F[r-1]
    std::vector<std::pair<VarPoly, Word>> stack;
    for (const auto& [w, coeff] : c.terms())
        stack.emplace_back(coeff, w);
    while (!stack.empty()) {
        auto [coeff, w] = std::move(stack.back());
        stack.pop_back();
        int pos = -1;
        for (int i = static_cast<int>(w.size()) - 2; i >= 0; --i) {
            if (w[static_cast<std::size_t>(i)].is_tau() &&
                !w[static_cast<std::size_t>(i + 1)].is_tau()) {
                pos = i;
                break;
            }
        }
        if (pos < 0) {
            int j = 0;
            while (j < static_cast<int>(w.size()) &&
                   w[w.size() - 1 - static_cast<std::size_t>(j)].is_tau())
                ++j;
            Word head(w.begin(), w.end() - j);
            auto it = out.find(j);
            if (it == out.end())
                it = out.emplace(j, UCoeff()).first;
            it->second.add(head, coeff);
            continue;
        }
        const std::size_t i = static_cast<std::size_t>(pos);
        Gen f = w[i + 1];
        Word moved = w;
        moved[i] = f;
        moved[i + 1] = Gen::tau();
        Word bracket;
        bracket.insert(bracket.end(), w.begin(), w.begin() + static_cast<long>(i));
        bracket.push_back({f.basis, f.mode - 1, f.parity});
        bracket.insert(bracket.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        stack.emplace_back(coeff, std::move(moved));
        stack.emplace_back(coeff * Rational(-f.mode), std::move(bracket));
    }
    return out;
}

} // namespace ospssv
