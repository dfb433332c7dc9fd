#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "congest/common.hpp"

namespace congest {

// Exact nonnegative rational with an explicit infinity (den == 0).
// Intermediate products use 128-bit arithmetic; stored values are kept
// reduced so they stay far away from the 64-bit range in practice.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

  static Fraction inf() {
    Fraction f;
    f.num = 1;
    f.den = 0;
    return f;
  }
  static Fraction whole(std::int64_t n) {
    Fraction f;
    f.num = n;
    f.den = 1;
    return f;
  }

  bool is_inf() const { return den == 0; }

  void reduce() {
    if (den == 0) {
      num = 1;
      return;
    }
    if (den < 0) {
      den = -den;
      num = -num;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const {
    if (is_inf()) return std::numeric_limits<double>::infinity();
    return static_cast<double>(num) / static_cast<double>(den);
  }

  std::string str() const {
    if (is_inf()) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

inline Fraction reduced_128(__int128 n, __int128 d) {
  if (d < 0) {
    d = -d;
    n = -n;
  }
  __int128 a = n < 0 ? -n : n;
  __int128 b = d;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  Fraction f;
  f.num = static_cast<std::int64_t>(n);
  f.den = static_cast<std::int64_t>(d);
  return f;
}

inline Fraction operator+(const Fraction& a, const Fraction& b) {
  if (a.is_inf() || b.is_inf()) return Fraction::inf();
  return reduced_128(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                     static_cast<__int128>(a.den) * b.den);
}

inline Fraction operator*(const Fraction& a, const Fraction& b) {
  if (a.is_inf() || b.is_inf()) return Fraction::inf();
  return reduced_128(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
}

inline bool operator==(const Fraction& a, const Fraction& b) {
  if (a.is_inf() || b.is_inf()) return a.is_inf() && b.is_inf();
  return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
}

inline bool operator<(const Fraction& a, const Fraction& b) {
  if (b.is_inf()) return !a.is_inf();
  if (a.is_inf()) return false;
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

inline bool operator<=(const Fraction& a, const Fraction& b) { return a < b || a == b; }
inline bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
inline bool operator>=(const Fraction& a, const Fraction& b) { return b <= a; }
inline bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

inline Fraction frac_min(const Fraction& a, const Fraction& b) { return b < a ? b : a; }

// Comparisons against integer distances (kInf maps to the rational infinity).
inline Fraction to_fraction(Weight w) { return w == kInf ? Fraction::inf() : Fraction::whole(w); }

}  // namespace congest
