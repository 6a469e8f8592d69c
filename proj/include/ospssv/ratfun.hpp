#pragma once

#include <string>

#include "ospssv/polynomial.hpp"

namespace ospssv {

/// Reduced rational function in ω: gcd(num, den) = 1 and den monic, so
/// structural equality is mathematical equality.
class RatFun {
  public:
    RatFun() : num_(VarPoly::zero(Var::Omega)), den_(VarPoly::constant(1, Var::Omega)) {}
    RatFun(long n) : RatFun(VarPoly::constant(Rational(n), Var::Omega)) {} // NOLINT
    RatFun(const Rational& r) : RatFun(VarPoly::constant(r, Var::Omega)) {} // NOLINT
    explicit RatFun(const VarPoly& p)
        : num_(p), den_(VarPoly::constant(1, Var::Omega)) {}

    /// ratfun_normalize: unique reduced representative with monic denominator.
    static RatFun of(const VarPoly& num, const VarPoly& den);

    static RatFun omega() { return RatFun(VarPoly::variable(Var::Omega)); }

    const VarPoly& num() const { return num_; }
    const VarPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun inverse() const;

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }
    friend bool operator<(const RatFun& a, const RatFun& b) {
        if (a.den_ != b.den_)
            return a.den_ < b.den_;
        return a.num_ < b.num_;
    }

    /// Value at ω = w0; throws PoleAtEvaluation when the reduced denominator
    /// vanishes there.
    Rational eval(const Rational& w0) const;
    bool pole_free_at(const Rational& w0) const { return !den_.eval(w0).is_zero(); }

    std::string str() const;

  private:
    VarPoly num_;
    VarPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFun& f);

/// γ_m(ω) = (ω + m - 2)/(ω + 2m - 2).
RatFun gamma_factor(int m);

} // namespace ospssv
