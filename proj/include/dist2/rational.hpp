#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dist2 {

// Exact rational arithmetic on 64-bit numerator / denominator.  Every density
// and charge value in the toolkit flows through this type; results are never
// computed in floating point.  Invariants: den > 0 and gcd(|num|, den) == 1.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) { *this = make(n, d); }

  // Builds a reduced rational from 128-bit intermediates, so products of two
  // in-range rationals can be normalized before the overflow check.
  static Rational make(__int128 n, __int128 d);

  Rational operator+(const Rational& o) const {
    return make((__int128)num * o.den + (__int128)o.num * den,
                (__int128)den * o.den);
  }
  Rational operator-(const Rational& o) const {
    return make((__int128)num * o.den - (__int128)o.num * den,
                (__int128)den * o.den);
  }
  Rational operator*(const Rational& o) const {
    return make((__int128)num * o.num, (__int128)den * o.den);
  }
  Rational operator/(const Rational& o) const {
    if (o.num == 0) throw std::domain_error("rational: division by zero");
    return make((__int128)num * o.den, (__int128)den * o.num);
  }
  Rational operator-() const { return make(-(__int128)num, den); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  bool operator==(const Rational& o) const {
    return num == o.num && den == o.den;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return (__int128)num * o.den < (__int128)o.num * den;
  }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  bool is_integer() const { return den == 1; }
  long long floor() const {
    long long q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
  }

  // Serialized as "p/q" even for integers ("3/1"), matching the report format.
  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Accepts "p/q" or a bare integer "p".
  static Rational parse(const std::string& text);
};

inline Rational Rational::make(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n;
  __int128 b = d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a != 0) {
    n /= a;
    d /= a;
  }
  if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
    throw std::overflow_error("rational: value out of 64-bit range");
  Rational r;
  r.num = (long long)n;
  r.den = (long long)d;
  return r;
}

inline Rational Rational::parse(const std::string& text) {
  size_t slash = text.find('/');
  try {
    size_t used = 0;
    if (slash == std::string::npos) {
      long long n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(n);
    }
    long long n = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(text);
    std::string den_part = text.substr(slash + 1);
    long long d = std::stoll(den_part, &used);
    if (used != den_part.size()) throw std::invalid_argument(text);
    return Rational(n, d);
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
}

}  // namespace dist2
