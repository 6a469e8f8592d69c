#include "ospssv/polynomial.hpp"

#include <ostream>
#include <sstream>

namespace ospssv {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial_int(long n, unsigned k) {
    // n may be negative; prod_{j=0}^{k-1}(n-j)/k!
    Rational num(1);
    for (unsigned j = 0; j < k; ++j)
        num *= Rational(n - static_cast<long>(j));
    return num / factorial(k);
}

const char* var_name(Var v) {
    switch (v) {
    case Var::Omega: return "ω";
    case Var::K: return "K";
    case Var::T: return "T";
    }
    return "?";
}

void VarPoly::check_var(const VarPoly& o) const {
    // Constants are variable-agnostic; mixing two genuine variables is a bug.
    if (!is_constant() && !o.is_constant() && var_ != o.var_)
        throw InvalidArgument("mixed polynomial variables");
}

VarPoly VarPoly::operator-() const {
    VarPoly r(*this);
    for (auto& c : r.c_)
        c = -c;
    return r;
}

VarPoly& VarPoly::operator+=(const VarPoly& o) {
    check_var(o);
    if (is_constant() && !o.is_constant())
        var_ = o.var_;
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

VarPoly& VarPoly::operator-=(const VarPoly& o) {
    check_var(o);
    if (is_constant() && !o.is_constant())
        var_ = o.var_;
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

VarPoly operator*(const VarPoly& a, const VarPoly& b) {
    a.check_var(b);
    Var v = a.is_constant() ? b.var_ : a.var_;
    if (a.is_zero() || b.is_zero())
        return VarPoly::zero(v);
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    }
    return VarPoly(v, std::move(c));
}

VarPoly& VarPoly::operator*=(const Rational& r) {
    if (r.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= r;
    return *this;
}

bool operator<(const VarPoly& a, const VarPoly& b) {
    if (a.c_.size() != b.c_.size())
        return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i] != b.c_[i])
            return a.c_[i] < b.c_[i];
    }
    return false;
}

Rational VarPoly::eval(const Rational& x) const {
    Rational r(0);
    for (std::size_t i = c_.size(); i-- > 0;)
        r = r * x + c_[i];
    return r;
}

void VarPoly::divmod(const VarPoly& a, const VarPoly& b, VarPoly& q, VarPoly& r) {
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    a.check_var(b);
    Var v = a.is_constant() ? b.var_ : a.var_;
    q = VarPoly::zero(v);
    r = a;
    const Rational lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int d = r.degree() - b.degree();
        Rational c = r.leading() * lead_inv;
        q += VarPoly::monomial(c, d, v);
        r -= VarPoly::monomial(c, d, v) * b;
    }
}

VarPoly VarPoly::gcd(VarPoly a, VarPoly b) {
    while (!b.is_zero()) {
        VarPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

VarPoly VarPoly::monic() const {
    if (is_zero())
        return *this;
    VarPoly r(*this);
    r *= leading().inverse();
    return r;
}

std::string VarPoly::str_integer_part(const mpz_class& den) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        Rational c = coeff(d);
        if (c.is_zero())
            continue;
        mpz_class ic = c.numerator() * (den / c.denominator());
        bool neg = ic < 0;
        mpz_class a = neg ? mpz_class(-ic) : ic;
        if (first) {
            if (neg)
                os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string coeff_str = a.get_str();
        if (d == 0) {
            os << coeff_str;
        } else {
            if (a != 1)
                os << coeff_str;
            os << var_name(var_);
            if (d > 1)
                os << "^" << d;
        }
    }
    return os.str();
}

std::string VarPoly::str() const {
    if (is_zero())
        return "0";
    mpz_class den = common_denominator(c_.begin(), c_.end());
    std::string body = str_integer_part(den);
    if (den == 1)
        return body;
    bool needs_parens = degree() > 0 || c_[0] < Rational(0);
    if (needs_parens)
        return "(" + body + ")/" + den.get_str();
    return body + "/" + den.get_str();
}

std::ostream& operator<<(std::ostream& os, const VarPoly& p) { return os << p.str(); }

VarPoly half_binomial(int m, int r) {
    if (r < 0)
        throw InvalidArgument("half_binomial: negative r");
    // prod_{j=0}^{r-1} (omega/2 + m - 2 - j) / r!
    VarPoly p = VarPoly::constant(Rational(1), Var::Omega);
    VarPoly half_omega(Var::Omega, {Rational(0), Rational(1, 2)});
    for (int j = 0; j < r; ++j)
        p = p * (half_omega + VarPoly::constant(Rational(m - 2 - j), Var::Omega));
    p /= factorial(static_cast<unsigned>(r));
    return p;
}

VarPoly poly_binomial(const VarPoly& p, int k) {
    if (k < 0)
        throw InvalidArgument("poly_binomial: negative k");
    VarPoly out = VarPoly::constant(Rational(1), p.var());
    for (int j = 0; j < k; ++j)
        out = out * (p - VarPoly::constant(Rational(j), p.var()));
    out /= factorial(static_cast<unsigned>(k));
    return out;
}

} // namespace ospssv
