#include "verify_suites.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "isomono/angular.hpp"
#include "isomono/matelem.hpp"
#include "isomono/nsym.hpp"
#include "isomono/quadrature.hpp"
#include "isomono/radial.hpp"
#include "isomono/wigner.hpp"

namespace isomono::verify {

namespace {

const cplx I{0.0, 1.0};

struct Rng {
  std::mt19937_64 gen{12345u};
  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(gen);
  }
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
};

angular::RadialAmp bump(double center, double width, cplx scale) {
  return [=](double r) { return scale * std::exp(-(r - center) * (r - center) / (2 * width)); };
}

angular::TripletState random_sector_state(Rng& rng, HalfInt j, HalfInt m, int delta, cplx A,
                                          cplx B) {
  auto coef = [&] { return cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)); };
  if (j.twice == 1)
    return angular::sector_state(0.0, j, m, delta, A, B, {}, bump(2.5, 1.1, coef()), {},
                                 bump(3.0, 0.9, coef()), bump(2.0, 1.3, coef()),
                                 bump(3.5, 0.8, coef()));
  return angular::sector_state(0.0, j, m, delta, A, B, bump(2.0, 1.0, coef()),
                               bump(2.5, 1.2, coef()), bump(3.0, 0.7, coef()),
                               bump(3.5, 1.4, coef()), bump(2.2, 0.9, coef()),
                               bump(2.8, 1.1, coef()));
}

}  // namespace

std::vector<Check> suite_wigner() {
  Rng rng;
  std::vector<Check> out;

  {  // unitarity of [D^j_{m'm}] for random (j, theta, phi)
    double worst = 0;
    for (int trial = 0; trial < 40; ++trial) {
      const HalfInt j{rng.pick(1, 9)};
      const double th = rng.uniform(0.05, M_PI - 0.05), ph = rng.uniform(0, 2 * M_PI);
      const int n = j.twice + 1;
      Eigen::MatrixXcd D(n, n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          D(a, b) = wigner::D(j, HalfInt{j.twice - 2 * a}, HalfInt{j.twice - 2 * b}, ph, th, 0.0);
      worst = std::max(worst, (D * D.adjoint() - Eigen::MatrixXcd::Identity(n, n))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    out.push_back({"wigner.unitarity", worst, 1e-12});
  }
  {  // the eight ladder relations, 100 random samples
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const HalfInt jj{rng.pick(1, 4) * 2 + 1};
      const int two_m = -jj.twice + 2 * rng.pick(0, jj.twice);
      const double th = rng.uniform(0.2, M_PI - 0.2), ph = rng.uniform(0, 2 * M_PI);
      worst = std::max(worst,
                       wigner::verify_recurrences(jj, HalfInt{two_m}, th, ph).max_residual);
    }
    out.push_back({"wigner.recurrences", worst, 1e-8});
  }
  {  // parity relation
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const HalfInt j{2 * rng.pick(0, 4) + 1};  // half-integer grid up to 9/2
      const int two_m = -j.twice + 2 * rng.pick(0, j.twice);
      const int two_s = std::min(3, j.twice);
      const auto [lhs, rhs] =
          wigner::parity_flip(j, HalfInt{two_m}, HalfInt{rng.pick(0, 1) ? two_s : -two_s},
                              rng.uniform(0.05, M_PI - 0.05), rng.uniform(0, 2 * M_PI));
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    out.push_back({"wigner.parity", worst, 1e-12});
  }
  {  // Pauli criterion: the two rules agree over the grid (throws on mismatch)
    double grid_ok = 0;
    for (int tl = -8; tl <= 8; ++tl)
      for (int tj = -8; tj <= 8; ++tj) wigner::pauli_criterion(Rational(tl, 2), Rational(tj, 2));
    out.push_back({"wigner.pauli_rules_agree", grid_ok, 0.0});
  }
  {  // Phi vs Wigner correspondence on admissible cases
    double worst = 0;
    for (int tl : {-3, -1, 0, 1, 2, 3})
      for (int tj = std::abs(tl); tj <= 7; tj += 2)
        for (int tm = -tj; tm <= tj; tm += 2) {
          if (tj == 0) continue;
          const HalfInt lam{tl}, j{tj}, m{tm};
          const double th = rng.uniform(0.2, M_PI - 0.2), ph = rng.uniform(0, 2 * M_PI);
          const cplx phi = wigner::pauli_phi(lam, j, m, th, ph);
          const cplx ref = std::sqrt((tj + 1.0) / (4.0 * M_PI)) * minus_one_pow(j - m) *
                           wigner::D_sigma(j, m, -lam, th, ph);
          worst = std::max(worst, std::abs(phi - ref));
        }
    out.push_back({"wigner.pauli_vs_wigner", worst, 1e-10});
  }
  return out;
}

std::vector<Check> suite_algebra() {
  Rng rng;
  std::vector<Check> out;
  using namespace iso3;

  {
    const Mat3 c12 = t1() * t2() - t2() * t1() - I * t3();
    const Mat3 c23 = t2() * t3() - t3() * t2() - I * t1();
    const Mat3 c31 = t3() * t1() - t1() * t3() - I * t2();
    const double r = std::max({c12.cwiseAbs().maxCoeff(), c23.cwiseAbs().maxCoeff(),
                               c31.cwiseAbs().maxCoeff()});
    out.push_back({"algebra.su2_commutators", r, 1e-15});
    out.push_back({"algebra.casimir",
                   (t1() * t1() + t2() * t2() + t3() * t3() - 2.0 * Mat3::Identity())
                       .cwiseAbs()
                       .maxCoeff(),
                   1e-15});
  }
  out.push_back(
      {"algebra.t0_formula", (t0_from_squares() - t0_projector()).cwiseAbs().maxCoeff(), 0.0});
  {
    double worst_proj = 0, worst_exp = 0, worst_comp = 0, worst_sl2c = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const double th = rng.uniform(0.05, M_PI - 0.05), ph = rng.uniform(0.05, 2 * M_PI - 0.05);
      const Mat3 tt = t_tilde0(th, ph);
      worst_proj = std::max(worst_proj, (tt * tt - tt).cwiseAbs().maxCoeff());
      const cplx A(rng.uniform(-2, 2), rng.uniform(-0.5, 0.5));
      const Mat3 lhs = axis_rotation(A, n_of(th, ph));
      const Mat3 rhs = U_cart(th, ph) * Delta_of(A) * U_cart(th, ph).inverse();
      worst_exp = std::max(worst_exp, (lhs - rhs).cwiseAbs().maxCoeff());
      // Gibbs composition: the polar rotation followed by the azimuthal one
      if (std::abs(ph - M_PI) > 0.2) {
        const double t2v = std::tan(0.5 * th);
        const Vec3c c(t2v * std::sin(ph), -t2v * std::cos(ph), 0.0);
        const Vec3c cp(0.0, 0.0, -std::tan(0.5 * ph));
        const Vec3c cpp = gibbs_compose(cp, c);
        worst_comp = std::max(worst_comp, (gibbs_rotation(cp) * gibbs_rotation(c) -
                                           gibbs_rotation(cpp))
                                              .cwiseAbs()
                                              .maxCoeff());
        const Vec3c closed_form(std::tan(0.5 * th) * std::tan(0.5 * ph), -std::tan(0.5 * th),
                            -std::tan(0.5 * ph));
        worst_comp = std::max(worst_comp, (cpp - closed_form).cwiseAbs().maxCoeff());
        worst_sl2c = std::max(worst_sl2c, (sl2c::vector_map_spatial(sl2c::from_gibbs(cpp)) -
                                           gibbs_rotation(cpp))
                                              .cwiseAbs()
                                              .maxCoeff());
      }
    }
    out.push_back({"algebra.t_tilde0_projector", worst_proj, 1e-12});
    out.push_back({"algebra.axis_rotation_conjugation", worst_exp, 1e-11});
    out.push_back({"algebra.gibbs_composition", worst_comp, 1e-12});
    out.push_back({"algebra.sl2c_vector_map", worst_sl2c, 1e-11});
  }
  {  // Kronecker mixed product
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
      Mat3 a = Mat3::Random(), ap = Mat3::Random();
      Mat4 b = Mat4::Random(), bp = Mat4::Random();
      worst = std::max(worst, (kron(a, b) * kron(ap, bp) - kron(Mat3(a * ap), Mat4(b * bp)))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    out.push_back({"algebra.kron_mixed_product", worst, 1e-13});
  }
  {  // gamma anticommutators = 2 eta
    double worst = 0;
    const double eta[4] = {1, -1, -1, -1};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const Mat4 anti = bisp::gamma(a) * bisp::gamma(b) + bisp::gamma(b) * bisp::gamma(a) -
                          (a == b ? 2.0 * eta[a] : 0.0) * Mat4::Identity();
        worst = std::max(worst, anti.cwiseAbs().maxCoeff());
      }
    out.push_back({"algebra.gamma_anticommutators", worst, 0.0});
  }
  {  // real-A axis rotations are complex-orthogonal in the Cartesian basis
    double worst = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const double A = rng.uniform(-3, 3);
      const Vec3 n = n_of(rng.uniform(0.01, M_PI - 0.01), rng.uniform(0, 2 * M_PI));
      const Mat3 m = S().inverse() * axis_rotation(cplx(A, 0), n) * S();
      worst = std::max(worst, (m * m.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff());
      worst = std::max(worst, m.imag().cwiseAbs().maxCoeff());
    }
    out.push_back({"algebra.axis_rotation_orthogonal", worst, 1e-11});
  }
  return out;
}

std::vector<Check> suite_gauges(const SuiteOptions& opt) {
  std::vector<Check> out;
  using namespace gauges;
  const MonopoleProfile bps = builtin_profile("bps:1");
  const MonopoleProfile trivial = builtin_profile("trivial");
  const MonopoleProfile& prof = opt.profile.K ? opt.profile : bps;

  auto compare = [](const GaugePotential& a, const GaugePotential& b, double r, double th,
                    double ph) {
    const auto ca = a.at(r, th, ph), cb = b.at(r, th, ph);
    double dev = 0;
    for (int k = 0; k < 5; ++k) dev = std::max(dev, (ca[k] - cb[k]).cwiseAbs().maxCoeff());
    return dev;
  };

  {
    double dev = 0;
    const GaugePotential hed = hedgehog_potential(prof);
    const GaugePotential dir =
        gauge_transform(hed, gibbs_hedgehog_to_dirac(), prof.e, Frame::Dirac);
    const GaugePotential dir_ref = dirac_potential(prof);
    for (auto [r, th, ph] : {std::tuple{2.0, 0.8, 0.3}, {0.7, 1.9, 2.4}, {5.0, 2.6, 5.1}})
      dev = std::max(dev, compare(dir, dir_ref, r, th, ph));
    out.push_back({"gauges.hedgehog_to_dirac", dev, 1e-9});

    const GaugePotential sch =
        gauge_transform(dir_ref, gibbs_dirac_to_schwinger(), prof.e, Frame::Schwinger);
    const GaugePotential sch_ref = schwinger_potential(prof);
    dev = 0;
    for (auto [r, th, ph] : {std::tuple{2.0, 0.8, 0.3}, {0.7, 1.9, 2.4}, {5.0, 2.6, 5.1}})
      dev = std::max(dev, compare(sch, sch_ref, r, th, ph));
    out.push_back({"gauges.dirac_to_schwinger", dev, 1e-9});
  }
  out.push_back({"gauges.abelian_embedding",
                 abelian_embedding_deviation(trivial, 1.5, 1.0, 0.2), 1e-12});
  {  // round trip
    const GaugePotential hed = hedgehog_potential(prof);
    const GibbsField fwd = gibbs_hedgehog_to_dirac();
    GibbsField bwd;
    bwd.c = [fwd](double r, double th, double ph) { return Vec3c(-fwd.c(r, th, ph)); };
    const GaugePotential there =
        gauge_transform(hed, fwd, prof.e, Frame::Dirac);
    const GaugePotential back = gauge_transform(there, bwd, prof.e, Frame::Cartesian);
    const double dev = compare(back, hed, 1.3, 0.9, 1.1);
    out.push_back({"gauges.round_trip", dev, 1e-9});
  }
  {  // W_r = 0 in unitary frames; field strength 1/(e r^2) for the trivial profile
    double wr = 0;
    for (auto [r, th, ph] : {std::tuple{0.5, 0.7, 0.2}, {3.0, 2.0, 4.0}}) {
      wr = std::max(wr, dirac_potential(prof).W_r(r, th, ph).cwiseAbs().maxCoeff());
      wr = std::max(wr, schwinger_potential(prof).W_r(r, th, ph).cwiseAbs().maxCoeff());
    }
    out.push_back({"gauges.unitary_W_r_zero", wr, 0.0});

    double fs = 0;
    for (double r : {5.0, 10.0}) {
      for (const GaugePotential& g :
           {hedgehog_potential(trivial), dirac_potential(trivial), schwinger_potential(trivial)})
        fs = std::max(fs, std::abs(radial_field_strength(g, trivial.e, r, 1.1, 0.7) -
                                   1.0 / (trivial.e * r * r)));
    }
    out.push_back({"gauges.abelian_field_strength", fs, 1e-6});
  }
  {
    const double w0 = bps.W(1e-4);
    out.push_back({"gauges.bps_W_origin", std::abs(w0 - 1.0), 1e-7});
    out.push_back({"gauges.bps_W_falloff", bps.W(10.0), 1e-3});
    out.push_back({"gauges.trivial_W_zero", std::abs(trivial.W(3.0)), 1e-13});
  }
  return out;
}

std::vector<Check> suite_discrete(const SuiteOptions& opt) {
  Rng rng;
  std::vector<Check> out;
  const gauges::MonopoleProfile trivial = gauges::builtin_profile("trivial");
  const gauges::MonopoleProfile bps = gauges::builtin_profile("bps:1");

  {  // sector constraint eigen residuals
    double worst = 0;
    for (int tj : {1, 3, 5}) {
      const HalfInt j{tj};
      const auto st = random_sector_state(rng, j, HalfInt{std::min(1, tj)}, tj % 4 == 1 ? 1 : -1,
                                          cplx{0.4, 0.1}, cplx{0.3, 0.0});
      worst = std::max(worst, nsym::sector_residual(st, 1.7));
      // field-level application agrees with the eigenvalue
      const double th = rng.uniform(0.2, M_PI - 0.2), ph = rng.uniform(0, 2 * M_PI);
      const auto op = nsym::build_N(std::exp(I * st.A), gauges::Frame::Schwinger);
      const Vec12 lhs = nsym::apply_N(op, angular::field_at_r(st, 1.7), th, ph);
      const Vec12 rhs =
          nsym::n_eigenvalue(j, st.delta) * angular::assemble_state(st, 1.7, th, ph);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    out.push_back({"discrete.sector_eigen", worst, 1e-12});
  }
  {  // the pi conjugation identity and frame conjugations
    double worst34 = 0, worstconj = 0;
    const cplx alpha = opt.have_alpha ? opt.alpha : cplx{0.3, 0.8};
    for (int trial = 0; trial < 100; ++trial) {
      const double th = rng.uniform(0.05, M_PI - 0.05), ph = rng.uniform(0, 2 * M_PI);
      Mat3 piS = Mat3::Zero();
      piS(0, 2) = piS(1, 1) = piS(2, 0) = 1.0;
      const Mat3 lhs =
          iso3::U_cart(th, ph) * piS * iso3::U_cart(M_PI - th, ph + M_PI).inverse();
      worst34 = std::max(worst34, (lhs + Mat3::Identity()).cwiseAbs().maxCoeff());

      const auto opS = nsym::build_N(alpha, gauges::Frame::Schwinger);
      const auto opD = nsym::build_N(alpha, gauges::Frame::Dirac);
      const auto opC = nsym::build_N(alpha, gauges::Frame::Cartesian);
      const Mat3 d = iso3::U_dirac(ph) * nsym::pi_matrix(opS, th, ph) *
                         iso3::U_dirac(ph + M_PI).inverse() -
                     nsym::pi_matrix(opD, th, ph);
      const Mat3 c = iso3::U_cart(th, ph) * nsym::pi_matrix(opS, th, ph) *
                         iso3::U_cart(M_PI - th, ph + M_PI).inverse() -
                     nsym::pi_matrix(opC, th, ph);
      worstconj = std::max({worstconj, d.cwiseAbs().maxCoeff(), c.cwiseAbs().maxCoeff()});
    }
    out.push_back({"discrete.pi_antipode_identity", worst34, 1e-11});
    out.push_back({"discrete.frame_conjugation", worstconj, 1e-11});
  }
  {  // projector algebra
    const HalfInt j{3};
    const cplx alpha = std::exp(I * cplx{0.4, 0.1});
    const Mat12 p_plus = nsym::sector_projector(j, +1, alpha);
    const Mat12 p_minus = nsym::sector_projector(j, -1, alpha);
    const double r1 = (p_plus + p_minus - Mat12::Identity()).cwiseAbs().maxCoeff();
    const double r2 = (p_plus * p_minus).cwiseAbs().maxCoeff();
    out.push_back({"discrete.projectors", std::max(r1, r2), 1e-13});
  }
  {  // commutation dichotomy; the assertion direction follows the predicted class
    const gauges::MonopoleProfile& prof = opt.profile.K ? opt.profile : bps;
    const cplx alpha = opt.have_alpha ? opt.alpha : std::exp(I * 0.7);
    const bool w_zero = [&] {
      for (double r : {0.5, 1.0, 4.0})
        if (std::abs(prof.W(r)) > 1e-12) return false;
      return true;
    }();
    const bool expect_commute =
        w_zero || std::min(std::abs(alpha - 1.0), std::abs(alpha + 1.0)) < 1e-12;
    const auto rep = radial::commutation_dichotomy(prof, HalfInt{3}, alpha, {1.0});
    if (expect_commute)
      out.push_back({"discrete.dichotomy_commutes", rep.min_norm, 1e-12});
    else
      out.push_back({"discrete.dichotomy_noncommuting", rep.min_norm, 1e-3, true});
    const auto rep_triv =
        radial::commutation_dichotomy(trivial, HalfInt{3}, std::exp(I * 1.1));
    out.push_back({"discrete.dichotomy_trivial", rep_triv.min_norm, 1e-12});
    const auto rep_bps1 = radial::commutation_dichotomy(bps, HalfInt{3}, cplx{1.0, 0.0});
    const auto rep_bpsm = radial::commutation_dichotomy(bps, HalfInt{3}, cplx{-1.0, 0.0});
    out.push_back(
        {"discrete.dichotomy_bps_pm1", std::max(rep_bps1.min_norm, rep_bpsm.min_norm), 1e-12});
  }
  {  // K decomposition eigenvalues and N-stability
    double worst_fd = 0, worst_stab = 0;
    for (int tj : {3, 5}) {
      const HalfInt j{tj};
      const auto lc = wigner::ladder_coefficients(j);
      const auto h = angular::k_h_sector_state(
          0, j, HalfInt{1}, +1, cplx{0.2, 0.0}, cplx{0, 0}, bump(2.0, 1.0, cplx{1, 0.2}),
          bump(2.5, 0.8, cplx{0.7, -0.3}));
      const auto kd = nsym::k_decompose(h, 1.3);
      worst_fd = std::max(worst_fd, std::abs(kd.lambda - lc.a));
      worst_fd = std::max(worst_fd, kd.fd_residual);
      const auto f = angular::k_f_sector_state(0, j, HalfInt{1}, +1, -1, cplx{0.2, 0.0},
                                               bump(2.0, 1.0, cplx{1, 0.1}),
                                               bump(3.0, 1.2, cplx{0.4, 0.6}));
      const auto kf = nsym::k_decompose(f, 1.3);
      worst_fd = std::max(worst_fd, std::abs(kf.lambda + lc.b));
      worst_fd = std::max(worst_fd, kf.fd_residual);
      // N-stability: V maps each K-sector into itself
      const Mat12 v = nsym::amplitude_matrix(std::exp(I * cplx{0.2, 0.0}), {1, 0}, j);
      const Mat12 k = nsym::k_amplitude_matrix(j);
      worst_stab = std::max(worst_stab, (k * v - v * k).cwiseAbs().maxCoeff());
    }
    out.push_back({"discrete.k_eigenvalues", worst_fd, 1e-6});
    out.push_back({"discrete.k_sectors_N_stable", worst_stab, 1e-11});
  }
  {  // Delta/D/B-freedom maps
    double worst = 0;
    const cplx A{0.0, 0.0}, Ap{0.8, 0.0};
    auto st = random_sector_state(rng, HalfInt{3}, HalfInt{-1}, +1, A, cplx{0.1, 0.0});
    auto stp = nsym::basis_change_V(st, Ap);
    worst = std::max(worst, nsym::sector_residual(stp, 2.2));
    // D commutes with N; Delta conjugation moves alpha
    const Mat3 delta = iso3::Delta_of(0.5 * (Ap - A));
    const Mat3 piA = nsym::pi_matrix(nsym::build_N(std::exp(I * A), gauges::Frame::Schwinger), 0, 0);
    const Mat3 piAp =
        nsym::pi_matrix(nsym::build_N(std::exp(I * Ap), gauges::Frame::Schwinger), 0, 0);
    worst = std::max(worst, (delta * piA * delta.inverse() - piAp).cwiseAbs().maxCoeff());
    const Mat3 dmat = iso3::D_of(cplx{1.2, 0.0});
    worst = std::max(worst, (dmat * piA * dmat.inverse() - piA).cwiseAbs().maxCoeff());
    // B-freedom leaves the eigen residual
    auto stb = nsym::apply_B_freedom(st, st.B, st.B + M_PI);
    worst = std::max(worst, nsym::sector_residual(stb, 2.2));
    // Cartesian factorizations
    const double th = 1.1, ph = 2.2;
    const cplx g{0.35, 0.1};
    worst = std::max(worst, (nsym::Delta_cartesian(g, th, ph) -
                             iso3::U_cart(th, ph) * iso3::Delta_of(g) * iso3::U_cart(th, ph).inverse())
                                .cwiseAbs()
                                .maxCoeff());
    worst = std::max(worst, (nsym::D_cartesian(g, th, ph) -
                             iso3::U_cart(th, ph) * iso3::D_of(g) * iso3::U_cart(th, ph).inverse())
                                .cwiseAbs()
                                .maxCoeff());
    out.push_back({"discrete.basis_change_maps", worst, 1e-11});
  }
  return out;
}

std::vector<Check> suite_radial(const SuiteOptions& opt) {
  Rng rng;
  std::vector<Check> out;
  const gauges::MonopoleProfile trivial = gauges::builtin_profile("trivial");
  const gauges::MonopoleProfile bps = gauges::builtin_profile("bps:1");
  (void)opt;

  {  // assembled M reproduces the component equations
    double worst = 0;
    for (radial::Case tag :
         {radial::Case::full_j, radial::Case::full_min, radial::Case::reduced_W0,
          radial::Case::reduced_W, radial::Case::reduced_min_W0, radial::Case::reduced_min_W}) {
      radial::Params p;
      p.epsilon = 0.8;
      p.mass = 0.5;
      p.j = (tag == radial::Case::full_min || tag == radial::Case::reduced_min_W0 ||
             tag == radial::Case::reduced_min_W)
                ? HalfInt{1}
                : HalfInt{3};
      p.delta = -1;
      p.profile = bps;
      const auto sys = radial::assemble(tag, p);
      for (double r : {0.4, 1.1, 3.3}) {
        Eigen::VectorXcd y(sys.dim);
        for (int i = 0; i < sys.dim; ++i) y(i) = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
        worst = std::max(worst, sys.equation_residual(y, r));
      }
    }
    out.push_back({"radial.component_equations", worst, 1e-13});
  }
  {  // constraint reduction
    const auto r1 =
        radial::constraint_reduction_check(HalfInt{3}, +1, std::exp(I * 0.4), trivial);
    out.push_back({"radial.reduction_trivial",
                   std::max(r1.pair_inconsistency, r1.reduced_match), 1e-13});
    const auto r2 = radial::constraint_reduction_check(HalfInt{3}, +1, cplx{1, 0}, bps);
    out.push_back(
        {"radial.reduction_bps_alpha1", std::max(r2.pair_inconsistency, r2.reduced_match), 1e-13});
    const auto r3 =
        radial::constraint_reduction_check(HalfInt{3}, +1, std::exp(I * 0.4), bps, {1.0});
    out.push_back({"radial.reduction_bps_inconsistent", r3.pair_inconsistency, 1e-3, true});
    const auto r4 = radial::constraint_reduction_check(HalfInt{1}, -1, cplx{1, 0}, bps);
    out.push_back(
        {"radial.reduction_minimal", std::max(r4.pair_inconsistency, r4.reduced_match), 1e-13});
  }
  {  // h-block Riccati-Bessel oracle
    radial::Params p;
    p.epsilon = 1.0;
    p.mass = 0.0;
    p.j = HalfInt{3};
    p.delta = +1;
    p.profile = trivial;
    const auto sys = radial::assemble(radial::Case::reduced_W0, p);
    auto sph = [](int l, double x) {
      const int lmax = l + 20;
      double jp = 0, jc = 1e-30;
      std::vector<double> vals(lmax + 1, 0.0);
      for (int k = lmax; k >= 0; --k) {
        const double jm = (2.0 * k + 3.0) / x * jc - jp;
        jp = jc;
        jc = jm;
        if (k <= l) vals[k] = jc;
      }
      return vals[l] * (std::sin(x) / x) / jc;
    };
    auto S = [&](int l, double x) { return x * sph(l, x); };
    const double r0 = 1e-3, r1 = 5.0;
    Eigen::VectorXcd y0 = Eigen::VectorXcd::Zero(6);
    y0(4) = 0.5 * (S(2, r0) - I * S(1, r0));
    y0(5) = 0.5 * (S(2, r0) + I * S(1, r0));
    const auto sol = radial::integrate(sys, r0, r1, y0, 1e-12);
    const double dev =
        std::max(std::abs(sol.y.back()(4) - 0.5 * (S(2, r1) - I * S(1, r1))),
                 std::abs(sol.y.back()(5) - 0.5 * (S(2, r1) + I * S(1, r1))));
    out.push_back({"radial.bessel_oracle", dev, 1e-8});
    out.push_back({"radial.current_conservation", radial::pairing_drift(sys, sol), 1e-10});
  }
  {  // block independence at W = 0 (bitwise)
    radial::Params p;
    p.epsilon = 0.9;
    p.mass = 0.4;
    p.j = HalfInt{3};
    p.delta = +1;
    p.profile = trivial;
    const auto sys = radial::assemble(radial::Case::reduced_W0, p);
    Eigen::VectorXcd yf = Eigen::VectorXcd::Zero(6);
    yf(0) = cplx{0.3, 0.2};
    yf(1) = cplx{-0.1, 0.5};
    yf(2) = cplx{0.7, 0.0};
    yf(3) = cplx{0.2, -0.4};
    Eigen::VectorXcd yh = Eigen::VectorXcd::Zero(6);
    yh(4) = cplx{0.6, -0.2};
    yh(5) = cplx{-0.3, 0.1};
    // common (fixed) step sequence: block evolution is bitwise additive
    const double hstep = 0.05;
    const auto sol_f = radial::integrate(sys, 0.5, 6.0, yf, 0.0, hstep);
    const auto sol_h = radial::integrate(sys, 0.5, 6.0, yh, 0.0, hstep);
    const auto sol_joint = radial::integrate(sys, 0.5, 6.0, yf + yh, 0.0, hstep);
    double dev = 0;
    for (size_t k = 0; k < sol_joint.r.size(); ++k) {
      dev = std::max(dev, (sol_joint.y[k] - (sol_f.y[k] + sol_h.y[k])).cwiseAbs().maxCoeff());
      if (sol_f.y[k](4) != 0.0 || sol_f.y[k](5) != 0.0) dev = 1.0;  // h stays exactly zero
      for (int i = 0; i < 4; ++i)
        if (sol_h.y[k](i) != 0.0) dev = 1.0;  // f stays exactly zero
    }
    // adaptive zero-block preservation
    const auto ad = radial::integrate(sys, 0.5, 6.0, yf, 1e-10);
    for (const auto& yk : ad.y)
      if (yk(4) != 0.0 || yk(5) != 0.0) dev = 1.0;
    out.push_back({"radial.block_independence", dev, 0.0});
  }
  {  // self-convergence order >= 4
    radial::Params p;
    p.epsilon = 0.9;
    p.mass = 0.4;
    p.j = HalfInt{3};
    p.delta = +1;
    p.profile = bps;
    const auto sys = radial::assemble(radial::Case::reduced_W, p);
    Eigen::VectorXcd y0(6);
    for (int i = 0; i < 6; ++i) y0(i) = cplx(0.3 + 0.1 * i, -0.2 + 0.05 * i);
    const auto ref = radial::integrate(sys, 0.5, 4.5, y0, 1e-13);
    double prev_err = 0, order = 10;
    for (int k = 0; k < 3; ++k) {
      const double h = 0.2 / (1 << k);
      const auto sol = radial::integrate(sys, 0.5, 4.5, y0, 0.0, h);
      const double err = (sol.y.back() - ref.y.back()).cwiseAbs().maxCoeff();
      if (k > 0) order = std::min(order, std::log2(prev_err / err));
      prev_err = err;
    }
    out.push_back({"radial.self_convergence_order", order, 4.0, true});
  }
  {  // delta <-> -delta equals m -> -m on the h block
    radial::Params pp;
    pp.epsilon = 0.7;
    pp.mass = 0.5;
    pp.j = HalfInt{3};
    pp.profile = trivial;
    radial::Params pm = pp;
    pp.delta = +1;
    pm.delta = -1;
    pm.mass = -pp.mass;
    const auto sp = radial::assemble(radial::Case::reduced_W0, pp);
    const auto sm = radial::assemble(radial::Case::reduced_W0, pm);
    const double dev = (sp.M(1.3).block(4, 4, 2, 2) - sm.M(1.3).block(4, 4, 2, 2))
                           .cwiseAbs()
                           .maxCoeff();
    out.push_back({"radial.delta_mass_flip", dev, 1e-15});
  }
  {  // Frobenius exponents
    radial::Params p;
    p.epsilon = 0.8;
    p.mass = 0.3;
    p.j = HalfInt{3};
    p.delta = +1;
    p.profile = trivial;
    const auto fs = radial::frobenius_start(radial::assemble(radial::Case::reduced_W0, p));
    double dev = std::abs(fs.regular[0].exponent - 2.0);
    dev = std::max(dev, std::abs(fs.regular[1].exponent - std::sqrt(3.0)));
    dev = std::max(dev, std::abs(fs.regular[2].exponent - std::sqrt(3.0)));
    radial::Params pmin = p;
    pmin.j = HalfInt{1};
    const auto fsm = radial::frobenius_start(radial::assemble(radial::Case::reduced_min_W0, pmin));
    // f block has no 1/r coupling: two exponents 0, one +1 from the h block
    int zero_count = 0;
    for (const auto& m : fsm.regular)
      if (std::abs(m.exponent) < 1e-7) ++zero_count;
    if (zero_count != 2) dev = 1.0;
    out.push_back({"radial.frobenius_exponents", dev, 1e-6});
  }
  return out;
}

std::vector<Check> suite_matelem() {
  Rng rng;
  std::vector<Check> out;
  matelem::QuadratureOptions opts;

  const auto st = random_sector_state(rng, HalfInt{3}, HalfInt{1}, +1, cplx{0, 0}, cplx{0, 0});
  matelem::Observable id;

  {  // identity = norm
    const cplx me = matelem::matrix_element(st, id, st);
    const auto grid = quad::geometric_grid(opts.r_lo, opts.r_hi, opts.n_r);
    const auto w = quad::trapezoid_weights(grid);
    double nrm = 0;
    for (size_t k = 0; k < grid.size(); ++k)
      nrm += w[k] * st.amplitudes_at(grid[k]).squaredNorm();
    nrm *= 4 * M_PI / (st.j.twice + 1.0);
    out.push_back({"matelem.identity_norm", std::abs(me - nrm) / nrm, 1e-8});
  }
  {  // m-orthogonality
    const auto st2 = random_sector_state(rng, HalfInt{3}, HalfInt{-1}, +1, cplx{0, 0}, cplx{0, 0});
    out.push_back({"matelem.m_orthogonality",
                   std::abs(matelem::matrix_element(st, id, st2)), 1e-10});
  }
  {  // order doubling
    matelem::Observable g;
    g.angular = [](double th, double) { return cplx(std::cos(th) * std::cos(th), 0.0); };
    matelem::QuadratureOptions big = opts;
    big.n_theta *= 2;
    big.n_phi *= 2;
    const cplx a = matelem::matrix_element(st, g, st, opts);
    const cplx b = matelem::matrix_element(st, g, st, big);
    out.push_back({"matelem.order_doubling", std::abs(a - b), 1e-10});
  }
  {  // hermiticity
    matelem::Observable g;
    g.iso = iso3::t3();
    g.bisp = bisp::gamma(0);
    const auto st2 = random_sector_state(rng, HalfInt{3}, HalfInt{1}, -1, cplx{0, 0}, cplx{0, 0});
    const cplx ab = matelem::matrix_element(st, g, st2, opts);
    const cplx ba = matelem::matrix_element(st2, g, st, opts);
    out.push_back({"matelem.hermiticity", std::abs(ab - std::conj(ba)), 1e-10});
  }
  {  // classification
    const auto c1 = matelem::classify_parity(id, cplx{0.7, 0.0});
    matelem::Observable ps;
    ps.bisp = bisp::gamma5();
    const auto c2 = matelem::classify_parity(ps, cplx{0.4, 0.0});
    matelem::Observable g13;
    g13.iso = Mat3::Zero();
    g13.iso(0, 2) = 1.0;
    g13.hermitian = false;
    const auto c3 = matelem::classify_parity(g13, cplx{0.4, 0.0});
    const bool ok = c1.omega == 1 && c2.omega == -1 && c3.omega == 0;
    out.push_back({"matelem.classification", ok ? 0.0 : 1.0, 0.0});
  }
  {  // selection rules at j = j' = 3/2
    matelem::Observable g;
    g.bisp = bisp::gamma(0);
    const auto bra = random_sector_state(rng, HalfInt{3}, HalfInt{1}, +1, cplx{0.3, 0.0},
                                         cplx{0.2, 0.0});
    const auto ket_same =
        random_sector_state(rng, HalfInt{3}, HalfInt{1}, +1, cplx{0.3, 0.0}, cplx{0.1, 0.0});
    const auto ket_opp =
        random_sector_state(rng, HalfInt{3}, HalfInt{1}, -1, cplx{0.3, 0.0}, cplx{0.1, 0.0});
    const auto rows = matelem::selection_rule_check(
        g, cplx{0.3, 0.0}, {{bra, ket_opp}, {bra, ket_same}}, opts);
    double worst = 0;
    for (const auto& row : rows)
      if (!row.pass) worst = 1.0;
    out.push_back({"matelem.selection_rules", worst, 0.0});
  }
  {  // six-term expansion, complex A
    const auto stc = random_sector_state(rng, HalfInt{3}, HalfInt{1}, +1, cplx{0.3, 0.2},
                                         cplx{0.1, 0.0});
    matelem::Observable g;
    g.iso = iso3::t3();
    const auto exp1 = matelem::expectation_expansion(stc, g, opts);
    out.push_back({"matelem.expansion_complex_A", exp1.residual, 1e-9});
    const auto expr = matelem::expectation_expansion(st, id, opts);
    out.push_back({"matelem.expansion_real_A", expr.residual, 1e-9});
  }
  return out;
}

std::vector<std::string> suite_names() {
  return {"wigner", "algebra", "gauges", "discrete", "radial", "matelem"};
}

std::vector<Check> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "wigner") return suite_wigner();
  if (name == "algebra") return suite_algebra();
  if (name == "gauges") return suite_gauges(opt);
  if (name == "discrete") return suite_discrete(opt);
  if (name == "radial") return suite_radial(opt);
  if (name == "matelem") return suite_matelem();
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace isomono::verify
