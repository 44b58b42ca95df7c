#pragma once

#include <Eigen/Dense>
#include <complex>

#include "isomono/half_int.hpp"

namespace isomono {

using Mat2 = Eigen::Matrix2cd;
using Mat3 = Eigen::Matrix3cd;
using Mat4 = Eigen::Matrix4cd;
using Mat12 = Eigen::Matrix<cplx, 12, 12>;
using Vec3 = Eigen::Vector3d;
using Vec3c = Eigen::Vector3cd;
using Vec12 = Eigen::Vector<cplx, 12>;

namespace iso3 {

/// Spin-1 generators in the cyclic basis; [t_a, t_b] = i eps_{abc} t_c,
/// t3 = diag(1, 0, -1).
const Mat3& t1();
const Mat3& t2();
const Mat3& t3();
Mat3 t_dot(const Vec3c& n);  // n1 t1 + n2 t2 + n3 t3

/// Cartesian -> cyclic basis change, rows (+1, 0, -1).
const Mat3& S();

/// Gibbs-vector rotation O(c) = I + 2 (c^x + (c^x)^2)/(1 + c.c); complex c
/// gives SO(3,C). Throws for the singular parameter 1 + c.c = 0.
Mat3 gibbs_rotation(const Vec3c& c);

/// Cross-product matrix, (c^x) v = c x v.
Mat3 cross_matrix(const Vec3c& c);

/// Composition vector: O(c2) O(c1) = O(compose(c2, c1)).
Vec3c gibbs_compose(const Vec3c& c2, const Vec3c& c1);

/// Matrix exponential by scaling-and-squaring with a 13-term Taylor series.
template <typename M>
M expm(const M& a) {
  using Scalar = typename M::Scalar;
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int s = 0;
  if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const M b = a / std::pow(2.0, s);
  M term = M::Identity(a.rows(), a.cols());
  M sum = term;
  for (int k = 1; k <= 13; ++k) {
    term = (term * b / Scalar(k)).eval();
    sum += term;
  }
  for (int k = 0; k < s; ++k) sum = (sum * sum).eval();
  return sum;
}

/// One-parameter isotopic rotation about the real unit axis n: expm(-iA t.n).
/// (The sign is fixed so that the z-axis rotation reproduces
/// Delta(A) = diag(e^{-iA}, 1, e^{+iA}) and axis_rotation(A, n_theta_phi)
/// equals U(theta,phi) Delta(A) U^{-1}(theta,phi).)
Mat3 axis_rotation(cplx A, const Vec3& n);

/// Unit radial direction n_{theta,phi}.
Vec3 n_of(double theta, double phi);

/// diag(e^{-iA}, 1, e^{+iA}) and diag(1, e^{-iG}, 1).
Mat3 Delta_of(cplx A);
Mat3 D_of(cplx gamma);

/// T0-projector diag(0,1,0), directly and as (t1^2 + t2^2 - t3^2)/2.
Mat3 t0_projector();
Mat3 t0_from_squares();

/// The theta,phi-dependent projector U t0 U^-1 in closed form.
Mat3 t_tilde0(double theta, double phi);

/// Wavefunction gauge maps between isotopic frames (cyclic basis):
/// Schwinger->Dirac is U(phi) = diag(e^{-i phi}, 1, e^{+i phi}) and
/// Schwinger->Cartesian is U(theta,phi) = S O(-c'') S^-1.
Mat3 U_dirac(double phi);
Mat3 U_cart(double theta, double phi);

}  // namespace iso3

namespace bisp {

/// Dirac matrices in the Weyl (spinor) representation,
/// gamma^0 = offdiag(I, I), gamma^k = offdiag(-s^k, s^k), and
/// gamma^5 = diag(-I, I) = -i g0 g1 g2 g3 (the sign is pinned by the explicit
/// anti-diagonal parity kernel below).
const Mat4& gamma(int a);
const Mat4& gamma5();

/// Bispinor parity kernel -gamma^5 gamma^1 (anti-diagonal -1's).
const Mat4& parity_kernel();

/// i sigma^{12} = diag(1,-1,1,-1)/2, the spin-z weight carried by each row.
const Mat4& i_sigma12();

}  // namespace bisp

namespace sl2c {

/// SL(2,C) element attached to a Gibbs vector, B(c) = +(I - i sigma.c)/sqrt(1 - c.c)
/// (the + branch is fixed globally). Throws for 1 - c.c = 0.
Mat2 from_gibbs(const Vec3c& c);

/// 4-vector map L^a_b(k, k*) of the spinor transform B = k_a sigma^a; the
/// spatial 3x3 block of a rotation equals the corresponding O(c).
Eigen::Matrix4cd vector_map(const Mat2& B);

/// Spatial block of vector_map, as a 3x3 (Cartesian basis).
Mat3 vector_map_spatial(const Mat2& B);

}  // namespace sl2c

/// Kronecker product, isotopic index slow, bispinor fast: rows 0..3 are the
/// T_{+1} bispinor block, 4..7 the T_0 block, 8..11 the T_{-1} block.
Mat12 kron(const Mat3& iso, const Mat4& bsp);

}  // namespace isomono
