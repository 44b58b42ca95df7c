#pragma once

#include <array>
#include <functional>

#include "isomono/algebra.hpp"
#include "isomono/wigner.hpp"

namespace isomono::angular {

using RadialAmp = std::function<cplx(double)>;

/// Amplitude slot order, equal to the 12-component field layout
/// (isotopic index slow, bispinor fast):
///   0..3   T_{+1} x (f1, f2, f3, f4)
///   4..7   T_{0}  x (h1, h2, h3, h4)
///   8..11  T_{-1} x (g1, g2, g3, g4)
enum Slot : int { f1 = 0, f2, f3, f4, h1, h2, h3, h4, g1, g2, g3, g4 };

/// Wigner weight sigma carried by each slot (D^j_{-m,sigma}).
HalfInt slot_sigma(int slot);

/// Slots forbidden at j = 1/2 (|sigma| = 3/2 requires j >= 3/2).
bool slot_allowed(HalfInt j, int slot);

/// Separated triplet solution: quantum numbers, structural parameters and the
/// twelve radial amplitudes (null function = identically zero).
struct TripletState {
  double epsilon = 0.0;
  HalfInt j{1}, m{1};
  int delta = 0;  // +-1 when in an N-sector, 0 otherwise
  cplx A{0.0, 0.0};
  cplx B{0.0, 0.0};
  int mu = 0;  // +-1 when in a K-sector, 0 otherwise
  std::array<RadialAmp, 12> amp{};

  Vec12 amplitudes_at(double r) const;
};

/// State with explicitly given amplitudes; amplitudes on slots forbidden for
/// the given j are a structural error.
TripletState make_state(double epsilon, HalfInt j, HalfInt m,
                        const std::array<RadialAmp, 12>& amps);

/// Constant-amplitude convenience constructor (values fixed in r).
TripletState make_state_values(double epsilon, HalfInt j, HalfInt m, const Vec12& values);

/// N-sector state: amplitudes constrained by
///   h3 = d h2, h4 = d h1, g4 = d a f1, g3 = d a f2, g2 = d a f3, g1 = d a f4
/// (a = e^{iA}); the T0 block additionally carries e^{iB}. For j = 1/2 the
/// f1/f3 inputs must be null and the g2/g4 relations drop.
TripletState sector_state(double epsilon, HalfInt j, HalfInt m, int delta, cplx A, cplx B,
                          RadialAmp f1_fn, RadialAmp f2_fn, RadialAmp f3_fn, RadialAmp f4_fn,
                          RadialAmp h1_fn, RadialAmp h2_fn);

/// K-operator eigenstates inside an N-sector: the h-sector (f = g = 0) and the
/// f-sector (h = 0, f4 = mu f1, f3 = mu f2). At j = 1/2 the f-sector has no
/// mu relation (lambda = 0) and the two arguments are the free (f4, f2).
TripletState k_h_sector_state(double epsilon, HalfInt j, HalfInt m, int delta, cplx A, cplx B,
                              RadialAmp h1_fn, RadialAmp h2_fn);
TripletState k_f_sector_state(double epsilon, HalfInt j, HalfInt m, int delta, int mu, cplx A,
                              RadialAmp f1_fn, RadialAmp f2_fn);

/// Evaluates the separated solution at a point: slot value
/// amp_i(r) D^j_{-m,sigma_i}(phi,theta,0) e^{-i eps t}/r. t = 0 by default,
/// the time factor is restored analytically where needed.
Vec12 assemble_state(const TripletState& s, double r, double theta, double phi, double t = 0.0);

/// Same, from a vector of amplitude values at fixed r.
Vec12 assemble_values(HalfInt j, HalfInt m, const Vec12& values, double r, double theta,
                      double phi, double t = 0.0, double epsilon = 0.0);

/// View of the state at fixed r as a function of (theta, phi).
using FieldFn = std::function<Vec12(double theta, double phi)>;
FieldFn field_at_r(const TripletState& s, double r, double t = 0.0);

/// The slot-diagonal weight (i sigma^12 + t^3) of the cos/sin theta terms;
/// equals -sigma on each slot.
const Mat12& weight_lambda();

/// Angular operator Sigma_{theta,phi} = i g1 d_theta + g2 [i d_phi +
/// (i s12 + t3) cos th]/sin th applied by 5-point central differences.
Vec12 apply_sigma_fd(const FieldFn& psi, double theta, double phi, double step = 1e-5);

/// Closed-form action of Sigma on a separated state (amplitude map
/// f -> ib(-f4, f3, f2, -f1), h -> ia(-h4, h3, h2, -h1), g -> ib(-g4, g3, g2, -g1)).
Vec12 sigma_closed_form(const TripletState& s, double r, double theta, double phi);

/// The mixing operator (gamma^1 x t^2 - gamma^2 x t^1) as an explicit 12x12.
const Mat12& mixing_matrix();

/// (W/r) (g1 x t2 - g2 x t1) acting on the assembled sample.
Vec12 apply_mixing(const TripletState& s, double r, double theta, double phi, double W_value);

/// Closed-form mixing action: with w = sqrt2 W / r,
/// f -> (0, iw h3, 0, -iw h1), h -> (-iw f4, iw g3, iw f2, -iw g1),
/// g -> (-iw h4, 0, iw h2, 0).
Vec12 mixing_closed_form(const TripletState& s, double r, double theta, double phi,
                         double W_value);

/// Total angular momentum J_i = l_i + lambda-terms in the Schwinger gauge;
/// i in {1,2,3}; applied by finite differences (step for the outermost
/// derivative; nested uses the same).
FieldFn apply_J(const FieldFn& psi, int i, double step = 1e-4);

struct JResidual {
  double j2 = 0;  // |J^2 psi - j(j+1) psi|_inf
  double j3 = 0;  // |J_3 psi - m psi|_inf
};

/// Eigen-residuals of J^2 and J_3 on the assembled state at a point.
JResidual total_J_check(const TripletState& s, double r, double theta, double phi,
                        double step = 1e-4);

/// |([J1, J2] - i J3) psi|_inf at a point (two nested derivatives).
double su2_closure_residual(const TripletState& s, double r, double theta, double phi,
                            double step = 1e-4);

/// Projection of one slot of a field onto D^j_{-m,sigma'}, normalized so the
/// projection of D_{sigma'} itself is 1 (64-pt Gauss-Legendre x 64 phi).
cplx project_onto_D(const std::function<cplx(double, double)>& slot_fn, HalfInt j, HalfInt m,
                    HalfInt sigma_prime, int n_theta = 64, int n_phi = 64);

// ---- Abelian contrast (4-component electron in a monopole field) ------------

/// 4-component field f_i(r) D^j_{-m, eg -+ 1/2}; rows (1,3) carry eg - 1/2,
/// rows (2,4) carry eg + 1/2.
Eigen::Vector4cd assemble_abelian(HalfInt eg, HalfInt j, HalfInt m,
                                  const Eigen::Vector4cd& amps, double r, double theta,
                                  double phi);

/// Residuals of the J^{eg} operators (l_i + (i s12 - eg) cos/sin terms).
JResidual abelian_J_check(HalfInt eg, HalfInt j, HalfInt m, const Eigen::Vector4cd& amps,
                          double r, double theta, double phi, double step = 1e-4);

}  // namespace isomono::angular
