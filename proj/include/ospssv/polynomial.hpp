#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ospssv/errors.hpp"
#include "ospssv/rational.hpp"

namespace ospssv {

/// Variable tag for univariate polynomials. Omega is the Brauer parameter,
/// K the central charge, T the argument of the weight polynomials.
enum class Var : std::uint8_t { Omega, K, T };

const char* var_name(Var v);

/// Dense univariate polynomial over Rational, coefficients stored by
/// ascending degree with a nonzero leading coefficient (zero = empty vector).
class VarPoly {
  public:
    VarPoly() : var_(Var::Omega) {}
    explicit VarPoly(Var v) : var_(v) {}
    VarPoly(Var v, std::vector<Rational> coeffs) : var_(v), c_(std::move(coeffs)) { trim(); }

    static VarPoly zero(Var v = Var::Omega) { return VarPoly(v); }
    static VarPoly constant(const Rational& r, Var v = Var::Omega) {
        return VarPoly(v, {r});
    }
    static VarPoly variable(Var v = Var::Omega) {
        return VarPoly(v, {Rational(0), Rational(1)});
    }
    static VarPoly monomial(const Rational& r, int degree, Var v = Var::Omega) {
        if (degree < 0)
            throw InvalidArgument("negative degree");
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
        c.back() = r;
        return VarPoly(v, std::move(c));
    }

    Var var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int deg) const {
        if (deg < 0 || deg >= static_cast<int>(c_.size()))
            return Rational(0);
        return c_[static_cast<std::size_t>(deg)];
    }
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_one() const { return c_.size() == 1 && c_[0] == Rational(1); }

    VarPoly operator-() const;
    VarPoly& operator+=(const VarPoly& o);
    VarPoly& operator-=(const VarPoly& o);
    friend VarPoly operator+(VarPoly a, const VarPoly& b) { return a += b; }
    friend VarPoly operator-(VarPoly a, const VarPoly& b) { return a -= b; }
    friend VarPoly operator*(const VarPoly& a, const VarPoly& b);
    VarPoly& operator*=(const VarPoly& o) { return *this = *this * o; }

    VarPoly& operator*=(const Rational& r);
    friend VarPoly operator*(VarPoly a, const Rational& r) { return a *= r; }
    friend VarPoly operator*(const Rational& r, VarPoly a) { return a *= r; }
    VarPoly& operator/=(const Rational& r) { return *this *= r.inverse(); }

    friend bool operator==(const VarPoly& a, const VarPoly& b) {
        return a.c_ == b.c_; // the variable tag does not distinguish constants
    }
    friend bool operator!=(const VarPoly& a, const VarPoly& b) { return !(a == b); }
    friend bool operator<(const VarPoly& a, const VarPoly& b);

    Rational eval(const Rational& x) const;

    /// Quotient and remainder; the divisor must be nonzero.
    static void divmod(const VarPoly& a, const VarPoly& b, VarPoly& q, VarPoly& r);

    /// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
    static VarPoly gcd(VarPoly a, VarPoly b);

    VarPoly monic() const;

    /// Canonical rendering: integer coefficients over a common positive
    /// denominator, terms in descending degree, e.g. "(ω^2 + 3ω + 2)/12".
    std::string str() const;

    /// The bare integer-coefficient part, no denominator wrapping.
    std::string str_integer_part(const mpz_class& den) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }
    void check_var(const VarPoly& o) const;

    Var var_;
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const VarPoly& p);

/// binom(ω/2 + m - 2, r) = prod_{j=0}^{r-1} (ω/2 + m - 2 - j) / r!
/// as a polynomial in ω of degree r.
VarPoly half_binomial(int m, int r);

/// binom(p, k) for a polynomial argument p: prod_{j=0}^{k-1} (p - j) / k!.
VarPoly poly_binomial(const VarPoly& p, int k);

} // namespace ospssv
