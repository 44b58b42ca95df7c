#include "isomono/algebra.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace isomono {

namespace iso3 {

namespace {
const cplx I{0.0, 1.0};

Mat3 make_t1() {
  Mat3 m;
  const double s = 1.0 / std::sqrt(2.0);
  m << 0, s, 0, s, 0, s, 0, s, 0;
  return m;
}
Mat3 make_t2() {
  Mat3 m;
  const cplx s = cplx(0, 1) / std::sqrt(2.0);
  m << 0, -s, 0, s, 0, -s, 0, s, 0;
  return m;
}
Mat3 make_t3() {
  Mat3 m;
  m << 1, 0, 0, 0, 0, 0, 0, 0, -1;
  return m;
}
Mat3 make_S() {
  Mat3 m;
  const double s = 1.0 / std::sqrt(2.0);
  m << -s, I * s, 0, 0, 0, 1, s, I * s, 0;
  return m;
}
}  // namespace

const Mat3& t1() { static const Mat3 m = make_t1(); return m; }
const Mat3& t2() { static const Mat3 m = make_t2(); return m; }
const Mat3& t3() { static const Mat3 m = make_t3(); return m; }
const Mat3& S() { static const Mat3 m = make_S(); return m; }

Mat3 t_dot(const Vec3c& n) { return n(0) * t1() + n(1) * t2() + n(2) * t3(); }

Mat3 cross_matrix(const Vec3c& c) {
  Mat3 m;
  m << 0, -c(2), c(1), c(2), 0, -c(0), -c(1), c(0), 0;
  return m;
}

namespace {
// Bilinear (unconjugated) complex dot and cross.
cplx bdot(const Vec3c& a, const Vec3c& b) { return a(0) * b(0) + a(1) * b(1) + a(2) * b(2); }
Vec3c bcross(const Vec3c& a, const Vec3c& b) {
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0)};
}
}  // namespace

Mat3 gibbs_rotation(const Vec3c& c) {
  const cplx denom = 1.0 + bdot(c, c);
  if (std::abs(denom) < 1e-14)
    throw std::domain_error("gibbs_rotation: singular parameter 1 + c.c = 0");
  const Mat3 cx = cross_matrix(c);
  return Mat3::Identity() + 2.0 / denom * (cx + cx * cx);
}

Vec3c gibbs_compose(const Vec3c& c2, const Vec3c& c1) {
  const cplx dot = bdot(c1, c2);
  if (std::abs(1.0 - dot) < 1e-14)
    throw std::domain_error("gibbs_compose: singular composition 1 - c1.c2 = 0");
  return (c1 + c2 + bcross(c2, c1)) / (1.0 - dot);
}

Vec3 n_of(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

Mat3 axis_rotation(cplx A, const Vec3& n) {
  if (std::abs(n.norm() - 1.0) > 1e-12)
    throw std::domain_error("axis_rotation: |n| must be 1");
  return expm(Mat3(-I * A * t_dot(n.cast<cplx>())));
}

Mat3 Delta_of(cplx A) {
  Mat3 m = Mat3::Zero();
  m(0, 0) = std::exp(-I * A);
  m(1, 1) = 1.0;
  m(2, 2) = std::exp(I * A);
  return m;
}

Mat3 D_of(cplx gamma) {
  Mat3 m = Mat3::Identity();
  m(1, 1) = std::exp(-I * gamma);
  return m;
}

Mat3 t0_projector() {
  Mat3 m = Mat3::Zero();
  m(1, 1) = 1.0;
  return m;
}

Mat3 t0_from_squares() {
  // t1 = P1/sqrt2, t2 = P2/sqrt2 with integer patterns P1, P2, so the squares
  // are exact dyadic rationals and the formula is entrywise exact.
  Mat3 p1, p2;
  p1 << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  const cplx i{0.0, 1.0};
  p2 << 0, -i, 0, i, 0, -i, 0, i, 0;
  const Mat3 sq = 0.5 * (p1 * p1) + 0.5 * (p2 * p2) - t3() * t3();
  return 0.5 * sq;
}

Mat3 t_tilde0(double theta, double phi) {
  const double st = std::sin(theta), ct = std::cos(theta);
  const cplx ep = std::exp(I * phi);
  const cplx em = std::exp(-I * phi);
  const double r2 = 1.0 / std::sqrt(2.0);
  Mat3 m;
  m(0, 0) = 0.5 * st * st;
  m(0, 1) = -r2 * st * ct * em;
  m(0, 2) = -0.5 * st * st * em * em;
  m(1, 0) = -r2 * st * ct * ep;
  m(1, 1) = ct * ct;
  m(1, 2) = r2 * st * ct * em;
  m(2, 0) = -0.5 * st * st * ep * ep;
  m(2, 1) = r2 * st * ct * ep;
  m(2, 2) = 0.5 * st * st;
  return m;
}

Mat3 U_dirac(double phi) {
  Mat3 m = Mat3::Zero();
  m(0, 0) = std::exp(-I * phi);
  m(1, 1) = 1.0;
  m(2, 2) = std::exp(I * phi);
  return m;
}

Mat3 U_cart(double theta, double phi) {
  // S O(-c'') S^-1 in closed form: the spin-1 rotation D^1(phi, theta, 0)
  // with rows/columns ordered (+1, 0, -1).
  const double st = std::sin(theta), ct = std::cos(theta);
  const cplx ep = std::exp(I * phi);
  const cplx em = std::exp(-I * phi);
  const double r2 = 1.0 / std::sqrt(2.0);
  Mat3 m;
  m(0, 0) = 0.5 * (1.0 + ct) * em;
  m(0, 1) = -r2 * st * em;
  m(0, 2) = 0.5 * (1.0 - ct) * em;
  m(1, 0) = r2 * st;
  m(1, 1) = ct;
  m(1, 2) = -r2 * st;
  m(2, 0) = 0.5 * (1.0 - ct) * ep;
  m(2, 1) = r2 * st * ep;
  m(2, 2) = 0.5 * (1.0 + ct) * ep;
  return m;
}

}  // namespace iso3

namespace bisp {

namespace {
Mat4 make_gamma(int a) {
  Mat4 g = Mat4::Zero();
  const cplx I{0.0, 1.0};
  Mat2 s;
  switch (a) {
    case 0: s = Mat2::Identity(); break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -I, I, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::domain_error("gamma: index 0..3");
  }
  // Weyl blocks: gamma^0 = [[0, I],[I, 0]], gamma^k = [[0, -s^k],[s^k, 0]].
  const Mat2 upper = (a == 0) ? s : Mat2(-s);
  g.block<2, 2>(0, 2) = upper;
  g.block<2, 2>(2, 0) = s;
  return g;
}
}  // namespace

const Mat4& gamma(int a) {
  static const Mat4 g0 = make_gamma(0);
  static const Mat4 g1 = make_gamma(1);
  static const Mat4 g2 = make_gamma(2);
  static const Mat4 g3 = make_gamma(3);
  switch (a) {
    case 0: return g0;
    case 1: return g1;
    case 2: return g2;
    case 3: return g3;
    default: throw std::domain_error("gamma: index 0..3");
  }
}

const Mat4& gamma5() {
  static const Mat4 g = [] {
    Mat4 m = Mat4::Zero();
    m(0, 0) = m(1, 1) = -1.0;
    m(2, 2) = m(3, 3) = 1.0;
    return m;
  }();
  return g;
}

const Mat4& parity_kernel() {
  static const Mat4 m = Mat4(-gamma5() * gamma(1));
  return m;
}

const Mat4& i_sigma12() {
  static const Mat4 m = [] {
    Mat4 d = Mat4::Zero();
    d(0, 0) = 0.5;
    d(1, 1) = -0.5;
    d(2, 2) = 0.5;
    d(3, 3) = -0.5;
    return d;
  }();
  return m;
}

}  // namespace bisp

namespace sl2c {

namespace {
const cplx I{0.0, 1.0};
const Mat2 sigma[4] = {Mat2::Identity(), (Mat2() << 0, 1, 1, 0).finished(),
                       (Mat2() << 0, -I, I, 0).finished(), (Mat2() << 1, 0, 0, -1).finished()};
}  // namespace

Mat2 from_gibbs(const Vec3c& c) {
  // B(c) = +(I - i sigma.c)/sqrt(1 + c.c); reproduces the explicit
  // cos(th/2) e^{i phi/2} form for the spherical-tetrad Gibbs vector.
  const cplx c2 = c(0) * c(0) + c(1) * c(1) + c(2) * c(2);
  if (std::abs(1.0 + c2) < 1e-14) throw std::domain_error("sl2c: singular parameter 1 + c.c = 0");
  Mat2 m = Mat2::Identity();
  for (int k = 0; k < 3; ++k) m -= I * c(k) * sigma[k + 1];
  return m / std::sqrt(1.0 + c2);
}

Eigen::Matrix4cd vector_map(const Mat2& B) {
  // k_a from B = k_a sigma^a: k_0 = tr(B)/2, k_j = tr(sigma_j B)/2.
  std::array<cplx, 4> k{};
  for (int a = 0; a < 4; ++a) k[a] = 0.5 * (sigma[a] * B).trace();
  std::array<cplx, 4> kb;
  for (int a = 0; a < 4; ++a) kb[a] = std::conj(k[a]);

  const double eta[4] = {1.0, -1.0, -1.0, -1.0};
  auto up = [&](const std::array<cplx, 4>& v, int a) { return eta[a] * v[a]; };

  const cplx kk = up(k, 0) * kb[0] + up(k, 1) * kb[1] + up(k, 2) * kb[2] + up(k, 3) * kb[3];

  // 4d Levi-Civita with eps_{0123} = +1, lowered indices.
  auto eps4 = [](int a, int b, int c, int d) -> int {
    const int p[4] = {a, b, c, d};
    int sign = 1;
    int q[4] = {p[0], p[1], p[2], p[3]};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        if (q[i] == q[j]) return 0;
        if (q[i] > q[j]) {
          std::swap(q[i], q[j]);
          sign = -sign;
        }
      }
    return sign;
  };

  Eigen::Matrix4cd L;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      // L^a_b = delta-bar^c_b [ -delta^a_c k.k* + k_c k*^a + k*_c k^a + i eps_c^{anm} k_n k*_m ]
      const int c = b;
      const double dbar = (b == 0) ? 1.0 : -1.0;
      cplx val = (a == c ? -kk : cplx{0.0, 0.0});
      val += k[c] * up(kb, a) + kb[c] * up(k, a);
      cplx epsterm{0.0, 0.0};
      for (int n = 0; n < 4; ++n)
        for (int m = 0; m < 4; ++m) {
          const int e = eps4(c, a, n, m);
          if (e != 0) epsterm += static_cast<double>(e) * up(k, n) * up(kb, m);
        }
      val += I * eta[a] * epsterm;  // raise the free index on eps
      L(a, b) = dbar * val;
    }
  }
  return L;
}

Mat3 vector_map_spatial(const Mat2& B) {
  return vector_map(B).block<3, 3>(1, 1);
}

}  // namespace sl2c

Mat12 kron(const Mat3& iso, const Mat4& bsp) {
  Mat12 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.block<4, 4>(4 * i, 4 * j) = iso(i, j) * bsp;
  return out;
}

}  // namespace isomono
