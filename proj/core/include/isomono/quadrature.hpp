#pragma once

#include <complex>
#include <vector>

namespace isomono::quad {

struct Rule {
  std::vector<double> x;  // nodes
  std::vector<double> w;  // weights
};

/// Gauss-Legendre nodes/weights on (-1, 1), Newton iteration on P_n.
Rule gauss_legendre(int n);

/// Affine image of gauss_legendre on (a, b).
Rule gauss_legendre(int n, double a, double b);

/// Uniform periodic rule on [0, 2pi) (trapezoid = exact for trig polynomials).
Rule periodic_phi(int n);

/// Geometrically spaced grid on [r0, r1], n points.
std::vector<double> geometric_grid(double r0, double r1, int n);

/// Compensated (Kahan) summation in a fixed order, for reproducible reductions.
template <typename T>
T kahan_sum(const std::vector<T>& xs) {
  T s{}, c{};
  for (const T& x : xs) {
    const T y = x - c;
    const T t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

class KahanAccumulator {
 public:
  void add(std::complex<double> x) {
    const std::complex<double> y = x - c_;
    const std::complex<double> t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  std::complex<double> total() const { return s_; }

 private:
  std::complex<double> s_{}, c_{};
};

/// Trapezoid weights for an arbitrary monotone grid.
std::vector<double> trapezoid_weights(const std::vector<double>& grid);

}  // namespace isomono::quad
