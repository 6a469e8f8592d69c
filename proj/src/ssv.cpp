#include "ospssv/ssv.hpp"

#include <algorithm>
#include <sstream>

#include "ospssv/rep.hpp"

namespace ospssv {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
            throw InvalidArgument("parts must be weakly decreasing and positive");
    }
}

int Partition::sum() const {
    int s = 0;
    for (int p : parts)
        s += p;
    return s;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i)
        os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

std::vector<Partition> all_partitions(int m) {
    if (m < 0)
        throw InvalidArgument("negative m");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

std::vector<Partition> partitions_even_length(int m) {
    if (m < 2)
        throw InvalidArgument("partitions_even_length needs m >= 2");
    std::vector<Partition> out;
    for (auto& p : all_partitions(m))
        if (p.length() % 2 == 0)
            out.push_back(std::move(p));
    return out;
}

Rational cycle_count(const Partition& lambda) {
    // m!/z_lambda with z = prod_j j^{m_j} m_j!
    std::map<int, int> mult;
    for (int p : lambda.parts)
        ++mult[p];
    Rational z(1);
    for (const auto& [j, mj] : mult) {
        for (int t = 0; t < mj; ++t)
            z *= Rational(j);
        z *= factorial(static_cast<unsigned>(mj));
    }
    return factorial(static_cast<unsigned>(lambda.sum())) / z;
}

VarPoly y_poly(int m, int l) {
    if (l < 2 || l > m)
        throw InvalidArgument("y_poly needs 2 <= l <= m");
    VarPoly p = VarPoly::constant(factorial(static_cast<unsigned>(l)) /
                                      factorial(static_cast<unsigned>(m)),
                                  Var::T);
    VarPoly t = VarPoly::variable(Var::T);
    for (int k = l; k < m; ++k)
        p = p * (t + VarPoly::constant(Rational(k), Var::T));
    return p;
}

nlohmann::json SSVector::to_json() const {
    nlohmann::json j;
    j["M"] = M;
    j["n"] = n;
    j["m"] = m;
    j["terms"] = value.to_json();
    nlohmann::json exp = nlohmann::json::array();
    for (const auto& e : expansion) {
        nlohmann::json je;
        je["lambda"] = e.lambda.parts;
        je["c"] = e.c.str();
        je["Y"] = e.y.str();
        exp.push_back(je);
    }
    j["expansion"] = exp;
    j["reports"] = nlohmann::json::array();
    return j;
}

SSVector phi_integral(Signature sig, int m) {
    if (m < 2)
        throw InvalidArgument("phi_integral needs m >= 2");
    Uea uea(sig);
    SSVector out;
    out.M = sig.M;
    out.n = sig.n;
    out.m = m;
    const Rational t0(sig.superdim() - 1);
    for (const Partition& lambda : partitions_even_length(m)) {
        const int ell = lambda.length();
        Rational y = y_poly(m, ell).eval(t0);
        Rational c = cycle_count(lambda);
        out.expansion.push_back({lambda, c, y});
        if (y.is_zero())
            continue;
        UTensorOp acc = lift(rho(group_symmetriser(ell, ell), sig));
        for (int a = 1; a <= ell; ++a)
            acc = compose(acc, f_matrix(-lambda.parts[static_cast<std::size_t>(a - 1)], a, ell, uea));
        std::set<int> legs;
        for (int a = 1; a <= ell; ++a)
            legs.insert(a);
        VacuumElement v = vacuum_apply(acc.partial_supertrace(legs).scalar(), uea);
        v.scale(y * c);
        out.value += v;
    }
    return out;
}

SSVector phi_rational(Signature sig, int m) {
    if (m < 2)
        throw InvalidArgument("phi_rational needs m >= 2");
    Uea uea(sig);
    SSVector out;
    out.M = sig.M;
    out.n = sig.n;
    out.m = m;
    const Rational gamma = gamma_factor(m).eval(Rational(sig.superdim()));
    UTensorOp acc = lift(rho(brauer_symmetriser(m, m), sig)); // may throw PoleAtEvaluation
    for (int a = 1; a <= m; ++a)
        acc = compose(acc, f_factor(a, m, uea));
    std::set<int> legs;
    for (int a = 1; a <= m; ++a)
        legs.insert(a);
    VacuumElement v = vacuum_apply(acc.partial_supertrace(legs).scalar(), uea);
    v.scale(gamma);
    out.value = v;
    return out;
}

} // namespace ospssv
