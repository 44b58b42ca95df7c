#pragma once

#include "isomono/angular.hpp"
#include "isomono/gauges.hpp"

namespace isomono::nsym {

using angular::FieldFn;
using angular::TripletState;
using gauges::Frame;

/// Composite reflection N = (pi_alpha x Pi_bisp) P-hat, with
/// pi_alpha T_{+1} = alpha T_{-1}, pi T_0 = beta T_0, pi T_{-1} = (beta^2/alpha) T_{+1},
/// Pi_bisp = -g5 g1, and P-hat the point map (theta,phi) -> (pi-theta, phi+pi).
/// beta = 1 is the working normalization; beta = -1 is the companion overall
/// sign (only beta^2 = 1 keeps N^2 proportional to the identity with the
/// fixed phase). alpha = e^{iA} may be any nonzero complex scalar.
struct NOperator {
  cplx alpha{1.0, 0.0};
  cplx beta{1.0, 0.0};
  Frame frame = Frame::Schwinger;
};

NOperator build_N(cplx alpha, Frame frame, cplx beta = cplx{1.0, 0.0});

/// Isotopic factor of N in its frame at a point. Schwinger: the alpha
/// anti-diagonal; Dirac: corners -(b^2/a) e^{-2i phi}, -a e^{+2i phi}; Cartesian:
/// -beta exp(iA' t.n) with alpha/beta = e^{iA'} (equals
/// U pi^S U^-1(pi-theta, phi+pi), the conjugated frame form).
Mat3 pi_matrix(const NOperator& op, double theta, double phi);

/// Applies N to a field: pi(theta,phi) x Pi acting on psi(pi-theta, phi+pi).
Vec12 apply_N(const NOperator& op, const FieldFn& psi, double theta, double phi);

/// N as a matrix on the 12 radial amplitudes at fixed j (Schwinger frame;
/// the parity relation turns the point map into the amplitude permutation):
/// f_i <- rho (b^2/a) g_{5-i}, h_i <- rho b h_{5-i}, g_i <- rho a f_{5-i},
/// rho = e^{i pi (j+1)}.
Mat12 amplitude_matrix(cplx alpha, cplx beta, HalfInt j);

/// N-eigenvalue of the delta sector, delta * e^{i pi (j+1)}.
cplx n_eigenvalue(HalfInt j, int delta);

struct SectorConstraint {
  int delta = +1;
  cplx N;        // delta e^{i pi (j+1)}
  cplx alpha;
  HalfInt j;
};

/// The two eigensectors (delta = +1, -1) for a weight j and parameter alpha.
std::pair<SectorConstraint, SectorConstraint> n_eigensectors(HalfInt j, cplx alpha);

/// Projector onto the delta sector, (I + (delta rho)^{-1} V)/2.
Mat12 sector_projector(HalfInt j, int delta, cplx alpha, cplx beta = cplx{1.0, 0.0});

/// |V a - N a|_inf for the amplitude vector of a state (eigen residual).
double sector_residual(const TripletState& s, double r);

// ---- K operator (i g0 g3 Sigma_{theta,phi}) ----------------------------------

/// K applied by finite differences through Sigma.
Vec12 apply_K_fd(const FieldFn& psi, double theta, double phi, double step = 1e-5);

/// K as an amplitude matrix: f_i <- b f_{5-i}, h_i <- a h_{5-i}, g_i <- b g_{5-i}.
Mat12 k_amplitude_matrix(HalfInt j);

enum class KSector { h_sector, f_sector };

struct KDecomposition {
  KSector sector;
  cplx lambda;        // delta a (h-sector) or mu b (f-sector; 0 at j = 1/2)
  double fd_residual; // |K psi - lambda psi| by finite differences at a probe point
  double h_frac, f_frac;
};

/// Classifies an N-sector state into the K eigensectors and verifies the
/// eigenvalue by finite-difference application. A state with both sectors
/// populated is a classification error (both projections reported in the
/// exception message).
KDecomposition k_decompose(const TripletState& s, double r, double theta = 1.1,
                           double phi = 0.7);

// ---- A/B basis-change maps ----------------------------------------------------

/// Delta(G) = diag(e^{-iG},1,e^{iG}) on the isotopic blocks: f *= e^{-iG},
/// g *= e^{+iG}; relabels A -> A + 2G.
TripletState apply_Delta(const TripletState& s, cplx gamma);

/// D(G) = diag(1,e^{-iG},1): h *= e^{-iG}; relabels B -> B - G.
TripletState apply_D(const TripletState& s, cplx gamma);

/// V(A', A) = e^{iG} D(G) Delta(G), G = (A' - A)/2; carries the A-sector state
/// into the A'-sector with the same (eps, j, m, delta).
TripletState basis_change_V(const TripletState& s, cplx A_to);

/// B-freedom: rescales the T0 block by e^{i(B_to - B_from)}.
TripletState apply_B_freedom(const TripletState& s, cplx B_from, cplx B_to);

/// Isotopic matrices of the maps (Schwinger frame) and their Cartesian forms.
Mat3 V_matrix(cplx A_to, cplx A_from);
Mat3 Delta_cartesian(cplx gamma, double theta, double phi);  // exp(iG t.n) form
Mat3 D_cartesian(cplx gamma, double theta, double phi);      // I + (e^{-iG}-1) t~0

}  // namespace isomono::nsym
