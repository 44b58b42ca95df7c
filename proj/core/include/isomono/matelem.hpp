#pragma once

#include <functional>
#include <string>
#include <vector>

#include "isomono/angular.hpp"

namespace isomono::matelem {

using angular::TripletState;

/// Composite observable G(x) = g_iso x G0_bisp * radial(r) * angular(theta,phi):
/// constant matrices with separable scalar multipliers (the config-schema
/// subset of position dependence). Hermiticity, when declared, is verified at
/// sample points.
struct Observable {
  Mat3 iso = Mat3::Identity();
  Mat4 bisp = Mat4::Identity();
  std::function<double(double)> radial;          // null = 1
  std::function<cplx(double, double)> angular;   // null = 1
  bool hermitian = true;
  std::string name = "observable";

  double radial_at(double r) const { return radial ? radial(r) : 1.0; }
  cplx angular_at(double th, double ph) const { return angular ? angular(th, ph) : cplx{1.0, 0.0}; }
};

/// Quadrature settings: Gauss-Legendre in cos(theta) x uniform phi, geometric
/// radial grid. Defaults per the repo conventions (96 x 96, 400 points on
/// (1e-3, 20)).
struct QuadratureOptions {
  int n_theta = 96;
  int n_phi = 96;
  int n_r = 400;
  double r_lo = 1e-3;
  double r_hi = 20.0;
};

enum class Domain { full_sphere, half_space };  // half: theta in (0, pi/2)

/// <bra| G |ket> = int Psi^dag G Psi' r^2 dr dOmega (plain Dirac inner
/// product; the covariant Psi-bar Gamma Psi' form is recovered by passing
/// the kernel gamma^0 Gamma). Deterministic Kahan summation order.
cplx matrix_element(const TripletState& bra, const Observable& g, const TripletState& ket,
                    const QuadratureOptions& opts = {}, Domain domain = Domain::full_sphere);

/// L1 magnitude of the same integrand (scale for "zero" assertions).
double matrix_element_scale(const TripletState& bra, const Observable& g,
                            const TripletState& ket, const QuadratureOptions& opts = {},
                            Domain domain = Domain::half_space);

/// Hermiticity probe: max |G(x) - G(x)^dag| over sample points.
double hermiticity_defect(const Observable& g);

struct ParityClass {
  int omega = 0;  // +1, -1, or 0 = none
  cplx A;
  double max_dev = 0;  // deviation from the best-matching sign
};

/// N_A-parity of the observable: compares
///   (pi_A^dag g(-x) pi_A) x (Z G0(-x) Z)  with  +- G(x)
/// at deterministic sample points (tolerance 1e-10); the bispinor sandwich Z
/// is the parity kernel -g5 g1.
ParityClass classify_parity(const Observable& g, cplx A, int n_points = 50, double tol = 1e-10);

/// Selection-rule factor 1 + Omega delta delta' e^{i pi (J'-J)}; exactly 0 or 2
/// whenever J' - J (equivalently J + J') is an integer.
cplx selection_rule_factor(int omega, int delta_bra, int delta_ket, HalfInt j_bra, HalfInt j_ket);

struct SelectionRow {
  HalfInt j_bra, j_ket;
  int delta_bra, delta_ket;
  int omega;
  cplx factor;
  cplx value;       // full-sphere matrix element
  cplx half_value;  // half-space matrix element
  double scale;     // L1 half-space magnitude
  std::string verdict;  // "forbidden", "allowed", "indefinite"
  bool pass = false;    // forbidden: |value| < 1e-9 * scale; allowed: full = 2 half to 1e-8
};

/// Evaluates the parity selection rules for the given sector-state pairs.
std::vector<SelectionRow> selection_rule_check(const Observable& g, cplx A,
                                               const std::vector<std::pair<TripletState, TripletState>>& pairs,
                                               const QuadratureOptions& opts = {});

struct ExpectationExpansion {
  // (+,+), (0,0), 2Re(+,0), e^{i(A-A*)}(-,-), 2 d mu Re(e^{iA}(+,-)), 2 d mu Re(e^{iA}(0,-))
  std::array<cplx, 6> terms{};
  cplx sum;
  cplx direct;
  double residual = 0;
};

/// Six-term expansion of the diagonal expectation value over the isotopic
/// split Psi = Psi^0 + Psi^+ + d mu e^{iA} Psi^-; the sum reproduces the
/// direct quadrature value.
ExpectationExpansion expectation_expansion(const TripletState& s, const Observable& g,
                                           const QuadratureOptions& opts = {});

/// The bispinor sandwich entering the parity classification; a single point
/// of definition so the identification can be swapped in one line.
const Mat4& bispinor_sandwich();

}  // namespace isomono::matelem
