#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ospssv/errors.hpp"

namespace ospssv {

/// Arbitrary-precision rational with canonical representation:
/// gcd(|num|, den) = 1, den > 0, zero is 0/1. Backed by GMP.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}       // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(n) {}        // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0)
            throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw InvalidArgument("cannot parse rational: " + s);
        if (q.get_den() == 0)
            throw DivisionByZero("rational with zero denominator: " + s);
        q.canonicalize();
        return Rational(q);
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw DivisionByZero("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero())
            throw DivisionByZero("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

    /// "p/q" with q omitted when 1.
    std::string str() const {
        if (is_integer())
            return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational factorial(unsigned n);
Rational binomial_int(long n, unsigned k);

/// lcm of denominators of a range of rationals; always positive.
template <class It>
mpz_class common_denominator(It first, It last) {
    mpz_class l = 1;
    for (It it = first; it != last; ++it)
        l = lcm(l, it->denominator());
    return l;
}

} // namespace ospssv
