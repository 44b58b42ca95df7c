#include "isomono/nsym.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace isomono::nsym {

namespace {
const cplx I{0.0, 1.0};

cplx check_alpha(cplx alpha) {
  if (std::abs(alpha) < 1e-300) throw std::domain_error("N operator: alpha must be nonzero");
  return alpha;
}
}  // namespace

NOperator build_N(cplx alpha, Frame frame, cplx beta) {
  check_alpha(alpha);
  if (std::abs(beta * beta - cplx{1.0, 0.0}) > 1e-12)
    throw std::domain_error("N operator: beta^2 = 1 required (N^2 phase convention)");
  return NOperator{alpha, beta, frame};
}

Mat3 pi_matrix(const NOperator& op, double theta, double phi) {
  const cplx gamma = op.beta * op.beta / op.alpha;
  Mat3 pi = Mat3::Zero();
  switch (op.frame) {
    case Frame::Schwinger:
      pi(0, 2) = gamma;
      pi(1, 1) = op.beta;
      pi(2, 0) = op.alpha;
      return pi;
    case Frame::Dirac:
      // U(phi) pi^S U^-1(phi + pi)
      pi(0, 2) = -gamma * std::exp(-2.0 * I * phi);
      pi(1, 1) = op.beta;
      pi(2, 0) = -op.alpha * std::exp(2.0 * I * phi);
      return pi;
    case Frame::Cartesian: {
      // U(theta,phi) pi^S U^-1(pi-theta, phi+pi) = -beta exp(iA' t.n), e^{iA'} = alpha/beta.
      const cplx Ap = -I * std::log(op.alpha / op.beta);
      return -op.beta * iso3::axis_rotation(Ap, iso3::n_of(theta, phi));
    }
  }
  throw std::logic_error("pi_matrix: unreachable");
}

Vec12 apply_N(const NOperator& op, const FieldFn& psi, double theta, double phi) {
  const Mat12 k = kron(pi_matrix(op, theta, phi), bisp::parity_kernel());
  return k * psi(M_PI - theta, phi + M_PI);
}

Mat12 amplitude_matrix(cplx alpha, cplx beta, HalfInt j) {
  check_alpha(alpha);
  const cplx gamma = beta * beta / alpha;
  const cplx rho = phase_pi(j.value() + 1.0);
  Mat12 v = Mat12::Zero();
  for (int i = 0; i < 4; ++i) {
    v(angular::f1 + i, angular::g4 - i) = rho * gamma;  // f_i <- rho gamma g_{5-i}
    v(angular::h1 + i, angular::h4 - i) = rho * beta;
    v(angular::g1 + i, angular::f4 - i) = rho * alpha;
  }
  return v;
}

cplx n_eigenvalue(HalfInt j, int delta) {
  if (delta != 1 && delta != -1) throw std::domain_error("n_eigenvalue: delta = +-1");
  return static_cast<double>(delta) * phase_pi(j.value() + 1.0);
}

std::pair<SectorConstraint, SectorConstraint> n_eigensectors(HalfInt j, cplx alpha) {
  check_alpha(alpha);
  SectorConstraint plus{+1, n_eigenvalue(j, +1), alpha, j};
  SectorConstraint minus{-1, n_eigenvalue(j, -1), alpha, j};
  return {plus, minus};
}

Mat12 sector_projector(HalfInt j, int delta, cplx alpha, cplx beta) {
  const Mat12 v = amplitude_matrix(alpha, beta, j);
  const cplx n = n_eigenvalue(j, delta) * beta;  // V eigenvalue is delta rho beta
  return 0.5 * (Mat12::Identity() + v / n);
}

double sector_residual(const TripletState& s, double r) {
  if (s.delta == 0) throw std::domain_error("sector_residual: state carries no delta");
  const cplx alpha = std::exp(I * s.A);
  const Mat12 v = amplitude_matrix(alpha, cplx{1.0, 0.0}, s.j);
  const Vec12 a = s.amplitudes_at(r);
  return (v * a - n_eigenvalue(s.j, s.delta) * a).cwiseAbs().maxCoeff();
}

Vec12 apply_K_fd(const FieldFn& psi, double theta, double phi, double step) {
  static const Mat12 ig0g3 = [] {
    return Mat12(kron(Mat3::Identity(), Mat4(cplx{0.0, 1.0} * bisp::gamma(0) * bisp::gamma(3))));
  }();
  return ig0g3 * angular::apply_sigma_fd(psi, theta, phi, step);
}

Mat12 k_amplitude_matrix(HalfInt j) {
  const wigner::LadderCoeffs lc = wigner::ladder_coefficients(j);
  Mat12 k = Mat12::Zero();
  for (int i = 0; i < 4; ++i) {
    k(angular::f1 + i, angular::f4 - i) = lc.b;
    k(angular::h1 + i, angular::h4 - i) = lc.a;
    k(angular::g1 + i, angular::g4 - i) = lc.b;
  }
  return k;
}

KDecomposition k_decompose(const TripletState& s, double r, double theta, double phi) {
  if (s.delta == 0) throw std::domain_error("k_decompose: state must be in an N sector");
  const Vec12 a = s.amplitudes_at(r);
  double f_norm = 0, h_norm = 0;
  for (int i = 0; i < 4; ++i) {
    f_norm += std::norm(a(angular::f1 + i)) + std::norm(a(angular::g1 + i));
    h_norm += std::norm(a(angular::h1 + i));
  }
  const double total = f_norm + h_norm;
  if (total == 0) throw std::domain_error("k_decompose: zero state");
  const double f_frac = f_norm / total, h_frac = h_norm / total;
  if (f_frac > 1e-12 && h_frac > 1e-12) {
    std::ostringstream os;
    os << "k_decompose: mixed state, h-sector fraction " << h_frac << ", f-sector fraction "
       << f_frac;
    throw std::runtime_error(os.str());
  }

  const wigner::LadderCoeffs lc = wigner::ladder_coefficients(s.j);
  KDecomposition out{};
  out.h_frac = h_frac;
  out.f_frac = f_frac;
  if (h_frac > f_frac) {
    out.sector = KSector::h_sector;
    out.lambda = static_cast<double>(s.delta) * lc.a;
  } else {
    out.sector = KSector::f_sector;
    int mu = s.mu;
    if (mu == 0 && s.j.twice >= 3) {
      // infer mu from f4 = mu f1 (or f3 = mu f2)
      const cplx num = std::abs(a(angular::f1)) > std::abs(a(angular::f2)) ? a(angular::f4)
                                                                           : a(angular::f3);
      const cplx den = std::abs(a(angular::f1)) > std::abs(a(angular::f2)) ? a(angular::f1)
                                                                           : a(angular::f2);
      const cplx ratio = num / den;
      mu = std::real(ratio) >= 0 ? 1 : -1;
      if (std::abs(ratio - static_cast<double>(mu)) > 1e-9)
        throw std::runtime_error("k_decompose: f-block is not a mu eigenstate");
    }
    out.lambda = (s.j.twice >= 3) ? cplx(mu * lc.b, 0.0) : cplx(0.0, 0.0);
  }

  const FieldFn psi = angular::field_at_r(s, r);
  const Vec12 val = psi(theta, phi);
  const Vec12 kpsi = apply_K_fd(psi, theta, phi);
  out.fd_residual = (kpsi - out.lambda * val).cwiseAbs().maxCoeff();
  return out;
}

namespace {
TripletState scale_blocks(const TripletState& s, cplx cf, cplx ch, cplx cg) {
  TripletState out = s;
  auto mul = [](angular::RadialAmp f, cplx c) -> angular::RadialAmp {
    if (!f) return {};
    return [f, c](double r) { return c * f(r); };
  };
  for (int i = 0; i < 4; ++i) {
    out.amp[angular::f1 + i] = mul(s.amp[angular::f1 + i], cf);
    out.amp[angular::h1 + i] = mul(s.amp[angular::h1 + i], ch);
    out.amp[angular::g1 + i] = mul(s.amp[angular::g1 + i], cg);
  }
  return out;
}
}  // namespace

TripletState apply_Delta(const TripletState& s, cplx gamma) {
  TripletState out = scale_blocks(s, std::exp(-I * gamma), cplx{1.0, 0.0}, std::exp(I * gamma));
  out.A = s.A + 2.0 * gamma;
  return out;
}

TripletState apply_D(const TripletState& s, cplx gamma) {
  TripletState out = scale_blocks(s, cplx{1.0, 0.0}, std::exp(-I * gamma), cplx{1.0, 0.0});
  out.B = s.B - gamma;
  return out;
}

TripletState basis_change_V(const TripletState& s, cplx A_to) {
  const cplx g = 0.5 * (A_to - s.A);
  TripletState out = apply_Delta(apply_D(s, g), g);
  out = scale_blocks(out, std::exp(I * g), std::exp(I * g), std::exp(I * g));
  out.A = A_to;
  out.B = s.B;  // the e^{iG} D(G) pair leaves the T0 phase convention in place
  return out;
}

TripletState apply_B_freedom(const TripletState& s, cplx B_from, cplx B_to) {
  TripletState out = scale_blocks(s, cplx{1.0, 0.0}, std::exp(I * (B_to - B_from)), cplx{1.0, 0.0});
  out.B = s.B + (B_to - B_from);
  return out;
}

Mat3 V_matrix(cplx A_to, cplx A_from) {
  const cplx g = 0.5 * (A_to - A_from);
  return std::exp(I * g) * iso3::D_of(g) * iso3::Delta_of(g);
}

Mat3 Delta_cartesian(cplx gamma, double theta, double phi) {
  return iso3::axis_rotation(gamma, iso3::n_of(theta, phi));
}

Mat3 D_cartesian(cplx gamma, double theta, double phi) {
  return Mat3::Identity() + (std::exp(-I * gamma) - 1.0) * iso3::t_tilde0(theta, phi);
}

}  // namespace isomono::nsym
