#include "ospssv/ratfun.hpp"

#include <ostream>

namespace ospssv {

RatFun RatFun::of(const VarPoly& num, const VarPoly& den) {
    if (den.is_zero())
        throw DivisionByZero("rational function with zero denominator");
    RatFun f;
    if (num.is_zero()) {
        f.num_ = VarPoly::zero(Var::Omega);
        f.den_ = VarPoly::constant(1, Var::Omega);
        return f;
    }
    VarPoly g = VarPoly::gcd(num, den);
    VarPoly q, r;
    VarPoly::divmod(num, g, q, r);
    f.num_ = q;
    VarPoly::divmod(den, g, q, r);
    f.den_ = q;
    // make the denominator monic
    Rational lead = f.den_.leading();
    f.den_ *= lead.inverse();
    f.num_ *= lead.inverse();
    return f;
}

RatFun RatFun::operator-() const {
    RatFun f(*this);
    f.num_ = -f.num_;
    return f;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun::of(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun::of(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun::of(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero())
        throw DivisionByZero("rational function division by zero");
    return RatFun::of(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::inverse() const {
    if (is_zero())
        throw DivisionByZero("inverse of zero rational function");
    return RatFun::of(den_, num_);
}

Rational RatFun::eval(const Rational& w0) const {
    Rational d = den_.eval(w0);
    if (d.is_zero())
        throw PoleAtEvaluation("pole at ω = " + w0.str());
    return num_.eval(w0) / d;
}

std::string RatFun::str() const {
    if (is_polynomial())
        return num_.str();
    // scale so the printed denominator has integer coefficients
    mpz_class e = common_denominator(den_.coeffs().begin(), den_.coeffs().end());
    VarPoly nn = num_ * Rational(e);
    VarPoly dd = den_ * Rational(e);
    mpz_class d0 = common_denominator(nn.coeffs().begin(), nn.coeffs().end());
    std::string n = nn.str_integer_part(d0);
    int nterms = 0;
    for (const auto& c : nn.coeffs())
        if (!c.is_zero())
            ++nterms;
    if (nterms > 1)
        n = "(" + n + ")";
    std::string d = dd.str_integer_part(1);
    if (d0 != 1)
        d = d0.get_str() + "(" + d + ")";
    else if (dd.degree() > 0)
        d = "(" + d + ")";
    return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << f.str(); }

RatFun gamma_factor(int m) {
    VarPoly w = VarPoly::variable(Var::Omega);
    return RatFun::of(w + VarPoly::constant(Rational(m - 2), Var::Omega),
                      w + VarPoly::constant(Rational(2 * m - 2), Var::Omega));
}

} // namespace ospssv
