#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "isomono/gauges.hpp"
#include "isomono/half_int.hpp"

namespace isomono::radial {

using gauges::MonopoleProfile;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

/// The radial systems in first-order form:
///   full_j         dim 12, j >= 3/2, dyon terms F~ = e r F, Phi~ = kappa r Phi
///   full_min       dim 8,  j = 1/2
///   reduced_W0     dim 6,  j >= 3/2, W == 0 sector system (any alpha)
///   reduced_W      dim 6,  j >= 3/2, W != 0 sector system (alpha = +-1)
///   reduced_min_W0 dim 4,  j = 1/2
///   reduced_min_W  dim 4,  j = 1/2
enum class Case { full_j, full_min, reduced_W0, reduced_W, reduced_min_W0, reduced_min_W };
std::string case_name(Case c);

struct Params {
  double epsilon = 0.0;
  double mass = 0.0;
  HalfInt j{3};
  int delta = +1;        // reduced cases
  cplx alpha{1.0, 0.0};  // reduced_W / reduced_min_W: must be +-1
  MonopoleProfile profile;
};

/// One term c(r) * Y_var or c * Y_var' of a component equation (sum of terms = 0).
struct Term {
  int var = 0;
  bool deriv = false;
  std::function<cplx(double)> coeff;
};

struct ScalarEquation {
  std::vector<Term> terms;  // exactly one derivative term
};

struct VarInfo {
  std::string name;
  int bispinor_row;  // 0..3, fixes the gamma^0 gamma^3 pairing sign
};

/// First-order system dY/dr = M(r) Y assembled from the component equations by
/// isolating the single derivative term of each equation.
struct RadialSystem {
  Case tag;
  int dim = 0;
  Params params;
  std::vector<VarInfo> vars;
  std::vector<ScalarEquation> eqs;

  MatX M(double r) const;

  /// Largest |sum of terms| over equations after substituting Y' = M Y
  /// (consistency of the assembled M with the component equations).
  double equation_residual(const VecX& y, double r) const;

  /// Diagonal of the conserved gamma^0 gamma^3 pairing, Q = Y^dag D Y.
  Eigen::VectorXd pairing_diagonal() const;
};

/// Builds the system; reduced cases demand F == 0 and kappa == 0 (consistency
/// error otherwise), reduced_W demands alpha = +-1.
RadialSystem assemble(Case tag, const Params& p);

// ---- integration ---------------------------------------------------------------

struct Solution {
  std::vector<double> r;
  std::vector<VecX> y;
  std::vector<VecX> yp;  // derivatives at the nodes (dense output)
  double tol = 0.0;
  int steps_accepted = 0;
  int steps_rejected = 0;

  VecX eval(double r_query) const;  // cubic Hermite between accepted steps
  double norm_sq() const;           // trapezoid of |Y|^2 over the stored grid
};

/// Adaptive Dormand-Prince 5(4) for the complex system; local error measured
/// in the max norm against atol + tol*|y| per component (atol defaults to
/// tol*1e-6 so tiny near-origin amplitudes stay under relative control).
/// fixed_step > 0 disables adaptivity (used by the self-convergence checks).
Solution integrate(const RadialSystem& sys, double r0, double r1, const VecX& y0, double tol,
                   double fixed_step = 0.0, double atol = -1.0);

/// Max deviation of the pairing Q(r) = Y^dag D Y from its initial value,
/// relative to |Q(r0)| (current conservation along a solution).
double pairing_drift(const RadialSystem& sys, const Solution& sol);

// ---- regular-singular analysis --------------------------------------------------

struct FrobeniusMode {
  cplx exponent;
  VecX v;       // eigenvector of the residue matrix
  VecX c1;      // first-order series coefficient (zero when resonant)
  bool resonant = false;
};

struct FrobeniusStart {
  MatX residue;  // M_{-1} = lim r M(r)
  std::vector<FrobeniusMode> regular;  // Re(exponent) > -1/2, sorted descending
  bool defective = false;

  /// Series start value r0^lambda (v + r0 c1) for a regular mode.
  VecX start(int mode, double r0) const;
};

FrobeniusStart frobenius_start(const RadialSystem& sys);

// ---- reduction / commutation checks ---------------------------------------------

struct ReductionReport {
  double pair_inconsistency = 0;  // duplicated-pair mismatch after substitution
  double reduced_match = 0;       // vs the reduced system (valid when consistent)
  cplx beta_used{1.0, 0.0};
};

/// Substitutes the sector constraints into the full system (F = kappa = 0) and
/// measures (i) internal consistency of the duplicated equation pairs (zero
/// iff W == 0 or alpha = +-1, via the beta = +-1 companion freedom) and
/// (ii) coefficient equality with the reduced system.
ReductionReport constraint_reduction_check(HalfInt j, int delta, cplx alpha,
                                           const MonopoleProfile& profile,
                                           const std::vector<double>& r_samples = {0.5, 1.0,
                                                                                   2.0});

struct DichotomyReport {
  double norm_beta_plus = 0;
  double norm_beta_minus = 0;
  double min_norm = 0;
  bool commutes = false;
};

/// Commutator norm between the full radial generator (F = kappa = 0) and the
/// N-induced amplitude involution, minimized over the beta = +-1 companions.
/// Commutes (< 1e-12) iff W == 0 (any alpha) or alpha = +-1.
DichotomyReport commutation_dichotomy(const MonopoleProfile& profile, HalfInt j, cplx alpha,
                                      const std::vector<double>& r_samples = {0.5, 1.0, 2.0});

// ---- mode search -----------------------------------------------------------------

struct Mode {
  double epsilon;
  double det_abs;       // |matching determinant| at the root
  double ode_residual;  // component-equation residual of the reassembled solution
  double norm;
  Solution solution;
};

struct ScanPoint {
  double epsilon;
  cplx det;
};

struct ModeSearch {
  std::vector<Mode> modes;       // sorted by epsilon
  std::vector<ScanPoint> scan;   // determinant trace over the scan grid
};

/// Shooting search for normalizable modes: regular Frobenius start at r0,
/// decaying WKB start at rmax, matching determinant at r_mid = 1; roots by
/// bisection on the phase-anchored determinant, accepted only where |det|
/// collapses below 1e-6 x scan maximum.
ModeSearch find_modes(Case tag, const Params& base, double eps_lo, double eps_hi, double rmax,
                      double tol, int n_scan = 120, double r0 = 1e-3, double r_mid = 1.0);

}  // namespace isomono::radial
