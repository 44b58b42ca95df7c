#include "isomono/angular.hpp"

#include <cmath>
#include <stdexcept>

#include "isomono/quadrature.hpp"

namespace isomono::angular {

namespace {
const cplx I{0.0, 1.0};

// f'(x) by the 5-point central stencil, for field-valued functions.
template <typename F>
auto diff5(const F& f, double x, double h) -> decltype(f(x)) {
  return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

constexpr int kSigmaTwice[12] = {-3, -1, -3, -1, -1, 1, -1, 1, 1, 3, 1, 3};

RadialAmp scaled(RadialAmp f, cplx c) {
  if (!f) return {};
  return [f, c](double r) { return c * f(r); };
}

}  // namespace

HalfInt slot_sigma(int slot) { return HalfInt{kSigmaTwice[slot]}; }

bool slot_allowed(HalfInt j, int slot) { return slot_sigma(slot).abs() <= j; }

Vec12 TripletState::amplitudes_at(double r) const {
  Vec12 v = Vec12::Zero();
  for (int i = 0; i < 12; ++i)
    if (amp[i]) v(i) = amp[i](r);
  return v;
}

TripletState make_state(double epsilon, HalfInt j, HalfInt m,
                        const std::array<RadialAmp, 12>& amps) {
  if (j.twice < 1) throw std::domain_error("make_state: j >= 1/2 required");
  if (!valid_projection(j, m)) throw std::domain_error("make_state: invalid (j, m)");
  for (int i = 0; i < 12; ++i)
    if (amps[i] && !slot_allowed(j, i))
      throw std::domain_error("make_state: amplitude on a slot forbidden for j = " + j.str());
  TripletState s;
  s.epsilon = epsilon;
  s.j = j;
  s.m = m;
  s.amp = amps;
  return s;
}

TripletState make_state_values(double epsilon, HalfInt j, HalfInt m, const Vec12& values) {
  std::array<RadialAmp, 12> amps{};
  for (int i = 0; i < 12; ++i) {
    const cplx v = values(i);
    if (v != cplx{0.0, 0.0}) amps[i] = [v](double) { return v; };
  }
  return make_state(epsilon, j, m, amps);
}

TripletState sector_state(double epsilon, HalfInt j, HalfInt m, int delta, cplx A, cplx B,
                          RadialAmp f1_fn, RadialAmp f2_fn, RadialAmp f3_fn, RadialAmp f4_fn,
                          RadialAmp h1_fn, RadialAmp h2_fn) {
  if (delta != 1 && delta != -1) throw std::domain_error("sector_state: delta must be +-1");
  const cplx alpha = std::exp(I * A);
  const cplx eB = std::exp(I * B);
  const double d = delta;
  std::array<RadialAmp, 12> amps{};
  amps[f1] = f1_fn;
  amps[f2] = f2_fn;
  amps[f3] = f3_fn;
  amps[f4] = f4_fn;
  amps[h1] = scaled(h1_fn, eB);
  amps[h2] = scaled(h2_fn, eB);
  amps[h3] = scaled(h2_fn, d * eB);
  amps[h4] = scaled(h1_fn, d * eB);
  amps[g1] = scaled(f4_fn, d * alpha);
  amps[g2] = scaled(f3_fn, d * alpha);
  amps[g3] = scaled(f2_fn, d * alpha);
  amps[g4] = scaled(f1_fn, d * alpha);
  TripletState s = make_state(epsilon, j, m, amps);
  s.delta = delta;
  s.A = A;
  s.B = B;
  return s;
}

TripletState k_h_sector_state(double epsilon, HalfInt j, HalfInt m, int delta, cplx A, cplx B,
                              RadialAmp h1_fn, RadialAmp h2_fn) {
  return sector_state(epsilon, j, m, delta, A, B, {}, {}, {}, {}, h1_fn, h2_fn);
}

TripletState k_f_sector_state(double epsilon, HalfInt j, HalfInt m, int delta, int mu, cplx A,
                              RadialAmp f1_fn, RadialAmp f2_fn) {
  if (mu != 1 && mu != -1) throw std::domain_error("k_f_sector_state: mu must be +-1");
  if (j.twice == 1) {
    // minimal j: no mu relation (lambda = 0); the two free amplitudes are
    // (f4, f2), passed through the first and second slots.
    TripletState s = sector_state(epsilon, j, m, delta, A, cplx{0.0, 0.0}, {}, f2_fn, {},
                                  f1_fn, {}, {});
    s.mu = mu;
    return s;
  }
  TripletState s = sector_state(epsilon, j, m, delta, A, cplx{0.0, 0.0}, f1_fn, f2_fn,
                                scaled(f2_fn, static_cast<double>(mu)),
                                scaled(f1_fn, static_cast<double>(mu)), {}, {});
  s.mu = mu;
  return s;
}

Vec12 assemble_values(HalfInt j, HalfInt m, const Vec12& values, double r, double theta,
                      double phi, double t, double epsilon) {
  const cplx pref = std::exp(-I * epsilon * t) / r;
  Vec12 out = Vec12::Zero();
  for (int i = 0; i < 12; ++i) {
    if (values(i) == cplx{0.0, 0.0}) continue;
    if (!slot_allowed(j, i))
      throw std::domain_error("assemble: amplitude on a slot forbidden for j = " + j.str());
    out(i) = pref * values(i) * wigner::D_sigma(j, m, slot_sigma(i), theta, phi);
  }
  return out;
}

Vec12 assemble_state(const TripletState& s, double r, double theta, double phi, double t) {
  return assemble_values(s.j, s.m, s.amplitudes_at(r), r, theta, phi, t, s.epsilon);
}

FieldFn field_at_r(const TripletState& s, double r, double t) {
  return [s, r, t](double theta, double phi) { return assemble_state(s, r, theta, phi, t); };
}

const Mat12& weight_lambda() {
  static const Mat12 m = kron(iso3::t3(), Mat4::Identity()) +
                         kron(Mat3::Identity(), bisp::i_sigma12());
  return m;
}

Vec12 apply_sigma_fd(const FieldFn& psi, double theta, double phi, double step) {
  if (theta < 1e-6 || theta > M_PI - 1e-6)
    throw std::domain_error("apply_sigma_fd: theta too close to a pole");
  static const Mat12 G1 = kron(Mat3::Identity(), bisp::gamma(1));
  static const Mat12 G2 = kron(Mat3::Identity(), bisp::gamma(2));
  const Vec12 dth = diff5([&](double th) { return psi(th, phi); }, theta, step);
  const Vec12 dph = diff5([&](double ph) { return psi(theta, ph); }, phi, step);
  const Vec12 val = psi(theta, phi);
  const Vec12 bracket = I * dph + std::cos(theta) * (weight_lambda() * val);
  return I * (G1 * dth) + (G2 * bracket) / std::sin(theta);
}

Vec12 sigma_closed_form(const TripletState& s, double r, double theta, double phi) {
  const wigner::LadderCoeffs lc = wigner::ladder_coefficients(s.j);
  const Vec12 v = s.amplitudes_at(r);
  Vec12 mapped;
  mapped << -v(f4), v(f3), v(f2), -v(f1), -v(h4), v(h3), v(h2), -v(h1), -v(g4), v(g3), v(g2),
      -v(g1);
  const cplx ib = I * lc.b, ia = I * lc.a;
  for (int i = 0; i < 4; ++i) mapped(i) *= ib;
  for (int i = 4; i < 8; ++i) mapped(i) *= ia;
  for (int i = 8; i < 12; ++i) mapped(i) *= ib;
  return assemble_values(s.j, s.m, mapped, r, theta, phi, 0.0, s.epsilon);
}

const Mat12& mixing_matrix() {
  static const Mat12 m =
      kron(iso3::t2(), bisp::gamma(1)) - kron(iso3::t1(), bisp::gamma(2));
  return m;
}

Vec12 apply_mixing(const TripletState& s, double r, double theta, double phi, double W_value) {
  return (W_value / r) * (mixing_matrix() * assemble_state(s, r, theta, phi));
}

Vec12 mixing_closed_form(const TripletState& s, double r, double theta, double phi,
                         double W_value) {
  const cplx iw = I * std::sqrt(2.0) * W_value / r;
  const Vec12 v = s.amplitudes_at(r);
  Vec12 mapped;
  mapped << 0, iw * v(h3), 0, -iw * v(h1), -iw * v(f4), iw * v(g3), iw * v(f2), -iw * v(g1),
      -iw * v(h4), 0, iw * v(h2), 0;
  return assemble_values(s.j, s.m, mapped, r, theta, phi, 0.0, s.epsilon);
}

FieldFn apply_J(const FieldFn& psi, int i, double step) {
  return [psi, i, step](double theta, double phi) -> Vec12 {
    const Vec12 dth = diff5([&](double th) { return psi(th, phi); }, theta, step);
    const Vec12 dph = diff5([&](double ph) { return psi(theta, ph); }, phi, step);
    const Vec12 val = psi(theta, phi);
    const double ct = std::cos(theta), st = std::sin(theta);
    switch (i) {
      case 1:
        return I * (std::sin(phi) * dth + ct / st * std::cos(phi) * dph) +
               std::cos(phi) / st * (weight_lambda() * val);
      case 2:
        return I * (-std::cos(phi) * dth + ct / st * std::sin(phi) * dph) +
               std::sin(phi) / st * (weight_lambda() * val);
      case 3:
        return -I * dph;
      default:
        throw std::domain_error("apply_J: i in {1,2,3}");
    }
  };
}

JResidual total_J_check(const TripletState& s, double r, double theta, double phi, double step) {
  const FieldFn psi = field_at_r(s, r);
  const Vec12 val = psi(theta, phi);
  Vec12 j2 = Vec12::Zero();
  for (int i = 1; i <= 3; ++i) j2 += apply_J(apply_J(psi, i, step), i, step)(theta, phi);
  const double jv = s.j.value();
  JResidual res;
  res.j2 = (j2 - jv * (jv + 1.0) * val).cwiseAbs().maxCoeff();
  res.j3 = (apply_J(psi, 3, step)(theta, phi) - s.m.value() * val).cwiseAbs().maxCoeff();
  return res;
}

double su2_closure_residual(const TripletState& s, double r, double theta, double phi,
                            double step) {
  const FieldFn psi = field_at_r(s, r);
  const Vec12 comm = apply_J(apply_J(psi, 2, step), 1, step)(theta, phi) -
                     apply_J(apply_J(psi, 1, step), 2, step)(theta, phi);
  const Vec12 rhs = I * apply_J(psi, 3, step)(theta, phi);
  return (comm - rhs).cwiseAbs().maxCoeff();
}

cplx project_onto_D(const std::function<cplx(double, double)>& slot_fn, HalfInt j, HalfInt m,
                    HalfInt sigma_prime, int n_theta, int n_phi) {
  const quad::Rule th = quad::gauss_legendre(n_theta, -1.0, 1.0);
  const quad::Rule ph = quad::periodic_phi(n_phi);
  quad::KahanAccumulator acc;
  for (int a = 0; a < n_theta; ++a) {
    const double theta = std::acos(th.x[a]);
    for (int b = 0; b < n_phi; ++b) {
      const cplx dval = wigner::D_sigma(j, m, sigma_prime, theta, ph.x[b]);
      acc.add(std::conj(dval) * slot_fn(theta, ph.x[b]) * th.w[a] * ph.w[b]);
    }
  }
  const double norm = 4.0 * M_PI / (j.twice + 1.0);
  return acc.total() / norm;
}

Eigen::Vector4cd assemble_abelian(HalfInt eg, HalfInt j, HalfInt m, const Eigen::Vector4cd& amps,
                                  double r, double theta, double phi) {
  Eigen::Vector4cd out;
  const HalfInt lo = eg - HalfInt{1};  // eg - 1/2
  const HalfInt hi = eg + HalfInt{1};  // eg + 1/2
  const cplx dlo = wigner::D_sigma(j, m, lo, theta, phi);
  const cplx dhi = wigner::D_sigma(j, m, hi, theta, phi);
  out(0) = amps(0) * dlo / r;
  out(1) = amps(1) * dhi / r;
  out(2) = amps(2) * dlo / r;
  out(3) = amps(3) * dhi / r;
  return out;
}

JResidual abelian_J_check(HalfInt eg, HalfInt j, HalfInt m, const Eigen::Vector4cd& amps,
                          double r, double theta, double phi, double step) {
  using Fn4 = std::function<Eigen::Vector4cd(double, double)>;
  const Fn4 psi = [&](double th, double ph) { return assemble_abelian(eg, j, m, amps, r, th, ph); };
  Mat4 lam = bisp::i_sigma12() - eg.value() * Mat4::Identity();

  std::function<Fn4(const Fn4&, int)> J = [&](const Fn4& f, int i) -> Fn4 {
    return [f, i, lam, step](double th0, double ph0) -> Eigen::Vector4cd {
      const Eigen::Vector4cd dth = diff5([&](double th) { return f(th, ph0); }, th0, step);
      const Eigen::Vector4cd dph = diff5([&](double ph) { return f(th0, ph); }, ph0, step);
      const Eigen::Vector4cd val = f(th0, ph0);
      const double ct = std::cos(th0), st = std::sin(th0);
      switch (i) {
        case 1:
          return I * (std::sin(ph0) * dth + ct / st * std::cos(ph0) * dph) +
                 std::cos(ph0) / st * (lam * val);
        case 2:
          return I * (-std::cos(ph0) * dth + ct / st * std::sin(ph0) * dph) +
                 std::sin(ph0) / st * (lam * val);
        default:
          return Eigen::Vector4cd(-I * dph);
      }
    };
  };

  const Eigen::Vector4cd val = psi(theta, phi);
  Eigen::Vector4cd j2 = Eigen::Vector4cd::Zero();
  for (int i = 1; i <= 3; ++i) j2 += J(J(psi, i), i)(theta, phi);
  const double jv = j.value();
  JResidual res;
  res.j2 = (j2 - jv * (jv + 1.0) * val).cwiseAbs().maxCoeff();
  res.j3 = (J(psi, 3)(theta, phi) - m.value() * val).cwiseAbs().maxCoeff();
  return res;
}

}  // namespace isomono::angular
