#pragma once

// Arbitrary-precision rational scalar, backed by GMP. Values are always kept
// in canonical form (reduced, positive denominator), so == is exact.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "polyfun/error.hpp"

namespace polyfun {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw error("DivisionByZero", "rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "a", "a/b", optional leading '-'.
  static Rational parse(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
      throw error("MalformedInput", "bad rational literal: " + s);
    if (v.get_den() == 0)
      throw error("DivisionByZero", "rational with zero denominator: " + s);
    v.canonicalize();
    return Rational(v);
  }

  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw error("DivisionByZero", "rational division by zero");
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

  Rational inv() const {
    if (is_zero()) throw error("DivisionByZero", "inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  // True iff *this is the square of a rational; if so *root is the
  // non-negative square root.
  bool sqrt_exact(Rational* root) const {
    if (v_ < 0) return false;
    mpz_class num = v_.get_num(), den = v_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    if (root) *root = Rational(mpq_class(rn, rd));
    return true;
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

}  // namespace polyfun
