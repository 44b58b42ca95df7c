#include "isomono/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace isomono::quad {

Rule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  return r;
}

Rule gauss_legendre(int n, double a, double b) {
  Rule r = gauss_legendre(n);
  const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    r.x[i] = mid + hw * r.x[i];
    r.w[i] *= hw;
  }
  return r;
}

Rule periodic_phi(int n) {
  if (n < 1) throw std::invalid_argument("periodic_phi: n >= 1 required");
  Rule r;
  r.x.resize(n);
  r.w.assign(n, 2.0 * M_PI / n);
  for (int i = 0; i < n; ++i) r.x[i] = 2.0 * M_PI * i / n;
  return r;
}

std::vector<double> geometric_grid(double r0, double r1, int n) {
  if (!(r0 > 0) || !(r1 > r0) || n < 2) throw std::invalid_argument("geometric_grid: bad range");
  std::vector<double> g(n);
  const double q = std::log(r1 / r0) / (n - 1);
  for (int i = 0; i < n; ++i) g[i] = r0 * std::exp(q * i);
  g.front() = r0;
  g.back() = r1;
  return g;
}

std::vector<double> trapezoid_weights(const std::vector<double>& grid) {
  const size_t n = grid.size();
  if (n < 2) throw std::invalid_argument("trapezoid_weights: need >= 2 points");
  std::vector<double> w(n, 0.0);
  for (size_t i = 0; i + 1 < n; ++i) {
    const double h = 0.5 * (grid[i + 1] - grid[i]);
    w[i] += h;
    w[i + 1] += h;
  }
  return w;
}

}  // namespace isomono::quad
