#pragma once

// Prime field F_p with runtime modulus. Every element carries its modulus;
// combining elements with different nonzero moduli is a FieldMismatch error.
// A default-constructed element is a modulus-free zero that adopts the other
// operand's modulus, so generic code may value-initialize scalars.

#include <cstdint>
#include <string>

#include "polyfun/error.hpp"
#include "polyfun/rational.hpp"

namespace polyfun {

class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(std::uint64_t v, std::uint64_t p) : p_(p) {
    if (p < 2) throw error("MalformedInput", "modulus must be >= 2");
    v_ = v % p;
  }
  static Fp from_int(long long v, std::uint64_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
  }

  static Fp parse(const std::string& s, std::uint64_t p) {
    // Accepts "r mod p" (p must match) or a bare integer.
    std::size_t pos = s.find(" mod ");
    std::string num = (pos == std::string::npos) ? s : s.substr(0, pos);
    if (pos != std::string::npos) {
      std::uint64_t q = std::stoull(s.substr(pos + 5));
      if (q != p) throw error("FieldMismatch", "scalar tagged mod " + std::to_string(q) +
                                                   " in field mod " + std::to_string(p));
    }
    try {
      return from_int(std::stoll(num), p);
    } catch (const std::invalid_argument&) {
      throw error("MalformedInput", "bad prime-field literal: " + s);
    }
  }

  std::string str() const { return std::to_string(v_) + " mod " + std::to_string(p_); }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator-() const { return p_ == 0 ? *this : Fp(v_ == 0 ? 0 : p_ - v_, p_); }

  Fp& operator+=(const Fp& o) {
    std::uint64_t p = join(o);
    if (p == 0) return *this;
    v_ = (v_ + o.v_) % p;
    p_ = p;
    return *this;
  }
  Fp& operator-=(const Fp& o) { return *this += -o; }
  Fp& operator*=(const Fp& o) {
    std::uint64_t p = join(o);
    if (p == 0) return *this;
    v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % p);
    p_ = p;
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
      throw error("FieldMismatch", "comparing scalars over different primes");
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  friend bool operator<(const Fp& a, const Fp& b) { return a.v_ < b.v_; }

  Fp inv() const {
    if (v_ == 0) throw error("DivisionByZero", "inverse of zero");
    // Fermat: p is prime.
    std::uint64_t e = p_ - 2, base = v_, acc = 1;
    while (e) {
      if (e & 1) acc = static_cast<std::uint64_t>((static_cast<unsigned __int128>(acc) * base) % p_);
      base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % p_);
      e >>= 1;
    }
    return Fp(acc, p_);
  }

 private:
  std::uint64_t join(const Fp& o) {
    if (p_ == 0) return o.p_;
    if (o.p_ == 0) return p_;
    if (p_ != o.p_)
      throw error("FieldMismatch", "mixing F_" + std::to_string(p_) + " with F_" + std::to_string(o.p_));
    return p_;
  }

  std::uint64_t v_, p_;
};

// Uniform helpers so templates can mint constants in the right field.
inline Rational field_zero(const Rational&) { return Rational(0); }
inline Rational field_one(const Rational&) { return Rational(1); }
inline Rational field_from_int(const Rational&, long long v) { return Rational(static_cast<long>(v)); }
inline Fp field_zero(const Fp& like) { return like.modulus() ? Fp(0, like.modulus()) : Fp(); }
inline Fp field_one(const Fp& like) {
  if (!like.modulus()) throw error("FieldMismatch", "cannot mint 1 without a modulus");
  return Fp(1, like.modulus());
}
inline Fp field_from_int(const Fp& like, long long v) {
  if (!like.modulus()) throw error("FieldMismatch", "cannot mint a constant without a modulus");
  return Fp::from_int(v, like.modulus());
}

}  // namespace polyfun
