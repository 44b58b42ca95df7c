#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace isomono {

using cplx = std::complex<double>;

/// Exact half-integer quantum number, stored as twice its value.
/// HalfInt{3} is 3/2; HalfInt::of(2) is 2.
struct HalfInt {
  int twice = 0;

  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int twice_value) : twice(twice_value) {}

  static constexpr HalfInt of(int n) { return HalfInt{2 * n}; }

  constexpr double value() const { return 0.5 * twice; }
  constexpr bool is_integer() const { return twice % 2 == 0; }

  friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
  friend constexpr bool operator!=(HalfInt a, HalfInt b) { return a.twice != b.twice; }
  friend constexpr bool operator<(HalfInt a, HalfInt b) { return a.twice < b.twice; }
  friend constexpr bool operator<=(HalfInt a, HalfInt b) { return a.twice <= b.twice; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.twice - b.twice}; }
  friend constexpr HalfInt operator-(HalfInt a) { return HalfInt{-a.twice}; }

  constexpr HalfInt abs() const { return HalfInt{twice < 0 ? -twice : twice}; }

  std::string str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }

  /// Parses "3/2", "-1/2", "2".
  static HalfInt parse(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return HalfInt{2 * std::stoi(s)};
    if (s.substr(slash + 1) != "2")
      throw std::invalid_argument("HalfInt: denominator must be 2 in '" + s + "'");
    return HalfInt{std::stoi(s.substr(0, slash))};
  }
};

/// (j, m) index pair is valid when |m| <= j and j - m is an integer.
inline bool valid_projection(HalfInt j, HalfInt m) {
  return m.abs() <= j && (j.twice - m.twice) % 2 == 0;
}

/// Small exact rational, used where quantum numbers may leave the half-integer
/// grid (the Pauli criterion probes e.g. lambda = 1/4).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  static Rational of(HalfInt h) { return Rational(h.twice, 2); }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return den == 1; }
  bool is_nonneg_integer() const { return den == 1 && num >= 0; }

  friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
  Rational abs() const { return {num < 0 ? -num : num, den}; }
};

/// Principal-branch phase e^{i pi x}. Half-integer phases like (-1)^{j+1} are
/// complex scalars, never real-rounded; exact on the quarter-turn grid so that
/// machine-precision identities survive.
inline cplx phase_pi(double x) {
  const double two_x = 2.0 * x;
  const double r = std::round(two_x);
  if (std::abs(two_x - r) < 1e-12) {
    const long long q = static_cast<long long>(r) & 3;  // e^{i pi/2 q}
    switch (q < 0 ? q + 4 : q) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::exp(cplx(0.0, M_PI * x));
}

/// (-1)^h for a half-integer under the fixed branch e^{i pi h}.
inline cplx minus_one_pow(HalfInt h) { return phase_pi(h.value()); }

}  // namespace isomono
