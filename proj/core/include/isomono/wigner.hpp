#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "isomono/half_int.hpp"

namespace isomono::wigner {

// Convention (fixed repo-wide, verify_recurrences is the arbiter):
//   D^j_{m',m}(phi,theta,psi) = e^{-i m' phi} d^j_{m'm}(theta) e^{-i m psi}
// with the standard small-d,
//   d^j_{m'm}(b) = sqrt((j+m')!(j-m')!(j+m)!(j-m)!) *
//     sum_k (-1)^{m'-m+k} cos^{2j+m-m'-2k}(b/2) sin^{m'-m+2k}(b/2)
//           / ((j+m-k)! k! (j-m'-k)! (m'-m+k)!).
// Under the point map (theta,phi) -> (pi-theta, phi+pi) this gives
//   D^j_{-m,s}(phi+pi, pi-theta, 0) = e^{i pi j} D^j_{-m,-s}(phi,theta,0)
// exactly, with the principal branch for half-integer j.

/// Wigner small-d by the explicit factorial sum (long double accumulation;
/// stable for 2j <= 40). Out-of-range indices are a domain error.
double small_d(HalfInt j, HalfInt mp, HalfInt m, double theta);

/// Full D-function, e^{-i mp phi} d^j_{mp,m}(theta) e^{-i m psi}.
cplx D(HalfInt j, HalfInt mp, HalfInt m, double phi, double theta, double psi);

/// Shorthand for the separated-solution building blocks D^j_{-m,sigma}(phi,theta,0).
inline cplx D_sigma(HalfInt j, HalfInt m, HalfInt sigma, double theta, double phi) {
  return D(j, -m, sigma, phi, theta, 0.0);
}

struct LadderCoeffs {
  double a = 0;                // j + 1/2
  double b = 0;                // sqrt((j-1/2)(j+3/2))
  std::optional<double> c;     // sqrt((j-3/2)(j+5/2)), absent for j < 3/2
};

/// Coefficients of the D-function differential recurrences. Requires j >= 1/2.
LadderCoeffs ladder_coefficients(HalfInt j);

struct RecurrenceReport {
  double max_residual = 0;
  std::array<double, 8> residual{};  // theta/phi relation per sigma in {+1/2,-1/2,+3/2,-3/2}
  int checked = 0;                   // relations actually evaluated (subset for small j)
};

/// Evaluates d/dtheta D_s and [sin^-1(th) (i d/dphi -+ s cos th)] D_s for
/// s in {+-1/2, +-3/2} by 5-point central differences and returns the largest
/// |LHS - RHS| over the eight ladder relations. theta within 1e-6 of a pole
/// is an error (the 1/sin theta operator).
RecurrenceReport verify_recurrences(HalfInt j, HalfInt m, double theta, double phi,
                                    double step = 1e-5);

/// Returns the pair (D^j_{-m,s}(phi+pi, pi-theta, 0), e^{i pi j} D^j_{-m,-s}(phi,theta,0));
/// the two sides agree to machine precision.
std::pair<cplx, cplx> parity_flip(HalfInt j, HalfInt m, HalfInt sigma, double theta, double phi);

// ---- Pauli generalized spherical functions ----------------------------------

struct PauliVerdict {
  bool admissible = false;
  bool integer_rule = false;     // 2*lambda integral, j >= |lambda|, j - |lambda| integral
  bool derivative_rule = false;  // (d/dx)^{2j+1} (1+x)^{j+l}(1-x)^{j-l} == 0 as a polynomial
  std::string reason;
};

/// Admissibility of the weight pair (lambda, j): the function
/// (1+x)^{j+lambda}(1-x)^{j-lambda} must be a polynomial of degree 2j.
/// Checked independently by the integer rule and by formal differentiation;
/// the two must agree.
PauliVerdict pauli_criterion(Rational lambda, Rational j);

/// Phi^lambda_{jm}(theta,phi) by the Rodrigues-type formula with normalization
/// N^lambda_{jm} (unit norm over the sphere). Inadmissible (lambda, j) is a
/// criterion error. Under this repo's D-convention,
///   Phi^lambda_{jm} = sqrt((2j+1)/4pi) e^{i pi (j-m)} D^j_{-m,-lambda}(phi,theta,0).
cplx pauli_phi(HalfInt lambda, HalfInt j, HalfInt m, double theta, double phi);

/// Ladder operators of the lambda-weight algebra,
/// J_+- = e^{+-i phi}[ +-d/dtheta + i cot(th) d/dphi + lambda/sin(th) ],
/// applied by 5-point finite differences. Used to probe J_- Phi_{j,-j} = 0.
cplx apply_J_minus_fd(HalfInt lambda, HalfInt j, HalfInt m, double theta, double phi,
                      double step = 1e-5);

}  // namespace isomono::wigner
