#include <doctest.h>

#include "isomono/nsym.hpp"
#include "isomono/radial.hpp"
#include "support/oracles.hpp"

using namespace isomono;
using namespace isomono::nsym;
using gauges::Frame;

namespace {
const cplx I{0.0, 1.0};
}

TEST_CASE("build_N basics") {
  CHECK_THROWS_AS(build_N(cplx{0, 0}, Frame::Schwinger), std::domain_error);
  CHECK_THROWS_AS(build_N(cplx{1, 0}, Frame::Schwinger, cplx{0.5, 0}), std::domain_error);

  // pi^2 = I on the beta = 1 branch
  const auto op = build_N(std::exp(I * 0.3), Frame::Schwinger);
  const Mat3 pi = pi_matrix(op, 0.4, 1.1);
  CHECK((pi * pi - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-14);

  // alpha = 1 in the Cartesian frame: the isotopic factor is -I everywhere
  const auto opc = build_N(cplx{1, 0}, Frame::Cartesian);
  for (int k = 0; k < 20; ++k) {
    const double th = 0.1 + 0.14 * k, ph = 0.3 * k;
    CHECK((pi_matrix(opc, th, ph) + Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("frame conjugation reproduces the frame forms") {
  const cplx alpha = std::exp(I * cplx{0.3, 0.2});
  const auto opS = build_N(alpha, Frame::Schwinger);
  const auto opD = build_N(alpha, Frame::Dirac);
  const auto opC = build_N(alpha, Frame::Cartesian);
  for (int k = 0; k < 10; ++k) {
    const double th = 0.2 + 0.27 * k, ph = 0.1 + 0.55 * k;
    const Mat3 piS = pi_matrix(opS, th, ph);
    const Mat3 d = iso3::U_dirac(ph) * piS * iso3::U_dirac(ph + M_PI).inverse();
    CHECK((d - pi_matrix(opD, th, ph)).cwiseAbs().maxCoeff() < 1e-11);
    const Mat3 c = iso3::U_cart(th, ph) * piS * iso3::U_cart(M_PI - th, ph + M_PI).inverse();
    CHECK((c - pi_matrix(opC, th, ph)).cwiseAbs().maxCoeff() < 1e-11);
    // Dirac frame phases e^{-+ 2 i phi} on the corners
    const Mat3 piD = pi_matrix(opD, th, ph);
    CHECK(std::abs(piD(0, 2) * alpha * std::exp(2.0 * I * ph) + 1.0) < 1e-12);
    CHECK(std::abs(piD(2, 0) / alpha * std::exp(-2.0 * I * ph) + 1.0) < 1e-12);
    CHECK(std::abs(piD(1, 1) - 1.0) < 1e-15);
  }
  // U(th,ph) pi^S U^-1(pi-th, ph+pi) = -I at random points
  for (int k = 0; k < 100; ++k) {
    const double th = 0.03 + 0.0305 * k, ph = 0.02 + 0.0618 * k;
    Mat3 piS = Mat3::Zero();
    piS(0, 2) = piS(1, 1) = piS(2, 0) = 1.0;
    const Mat3 lhs = iso3::U_cart(th, ph) * piS * iso3::U_cart(M_PI - th, ph + M_PI).inverse();
    CHECK((lhs + Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("field-level application equals the amplitude matrix") {
  const auto st = oracles::random_sector_state(3u, HalfInt{3}, HalfInt{1}, +1, cplx{0.4, 0.1},
                                               cplx{0.2, 0.0});
  const cplx alpha = std::exp(I * st.A);
  const auto op = build_N(alpha, Frame::Schwinger);
  const double r = 1.7;
  for (auto [th, ph] : {std::pair{0.8, 1.3}, {2.1, 4.0}}) {
    const Vec12 lhs = apply_N(op, angular::field_at_r(st, r), th, ph);
    const Vec12 amps = amplitude_matrix(alpha, cplx{1, 0}, st.j) * st.amplitudes_at(r);
    const Vec12 rhs = angular::assemble_values(st.j, st.m, amps, r, th, ph);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("eigen sectors") {
  // N = delta (-1)^{j+1} under the principal branch
  CHECK(std::abs(n_eigenvalue(HalfInt{3}, +1) - I) < 1e-15);       // (-1)^{5/2} = i
  CHECK(std::abs(n_eigenvalue(HalfInt{1}, -1) - I) < 1e-15);       // -(-1)^{3/2} = i
  CHECK(std::abs(n_eigenvalue(HalfInt{5}, +1) + I) < 1e-15);       // (-1)^{7/2} = -i

  // sector states are exact eigenvectors
  for (int tj : {1, 3}) {
    for (int delta : {+1, -1}) {
      const auto st = oracles::random_sector_state(100u + tj + delta, HalfInt{tj}, HalfInt{1},
                                                   delta, cplx{0.7, 0.3}, cplx{0.1, 0.0});
      CHECK(sector_residual(st, 2.4) < 1e-12);
    }
  }

  // projector pair: complementary and orthogonal; projected states stay eigen
  const cplx alpha = std::exp(I * cplx{0.5, 0.1});
  const Mat12 pp = sector_projector(HalfInt{3}, +1, alpha);
  const Mat12 pm = sector_projector(HalfInt{3}, -1, alpha);
  CHECK((pp + pm - Mat12::Identity()).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((pp * pm).cwiseAbs().maxCoeff() < 1e-13);
  Vec12 raw;
  raw << cplx{0.3, 0.4}, cplx{-0.2, 0.8}, cplx{0.5, 0.0}, cplx{0.1, -0.7}, cplx{0.9, 0.2},
      cplx{-0.3, 0.3}, cplx{0.2, 0.2}, cplx{0.4, -0.1}, cplx{-0.6, 0.5}, cplx{0.8, 0.0},
      cplx{0.1, 0.1}, cplx{-0.4, -0.2};
  const Vec12 proj = pp * raw;
  const Mat12 v = amplitude_matrix(alpha, cplx{1, 0}, HalfInt{3});
  CHECK((v * proj - n_eigenvalue(HalfInt{3}, +1) * proj).cwiseAbs().maxCoeff() < 1e-12);

  // N^2 = (-1)^{2j+2} = -1 on half-integer j
  CHECK((v * v + Mat12::Identity()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("commutation dichotomy") {
  const auto trivial = gauges::builtin_profile("trivial");
  const auto bps = gauges::builtin_profile("bps:1");

  CHECK(radial::commutation_dichotomy(trivial, HalfInt{3}, std::exp(I * 1.1)).commutes);
  CHECK(radial::commutation_dichotomy(bps, HalfInt{3}, cplx{1, 0}).commutes);
  CHECK(radial::commutation_dichotomy(bps, HalfInt{3}, cplx{-1, 0}).commutes);
  const auto rep = radial::commutation_dichotomy(bps, HalfInt{3}, std::exp(I * 0.7), {1.0});
  CHECK(!rep.commutes);
  CHECK(rep.min_norm > 1e-3);
  // minimal j as well
  CHECK(radial::commutation_dichotomy(trivial, HalfInt{1}, std::exp(I * 0.9)).commutes);
  CHECK(radial::commutation_dichotomy(bps, HalfInt{1}, cplx{-1, 0}).commutes);
  CHECK(!radial::commutation_dichotomy(bps, HalfInt{1}, std::exp(I * 0.7), {1.0}).commutes);
}

TEST_CASE("K operator decomposition") {
  // h sector: lambda = delta a = 2 at j = 3/2
  const auto h = angular::k_h_sector_state(0.0, HalfInt{3}, HalfInt{1}, +1, cplx{0, 0},
                                           cplx{0, 0}, oracles::bump(2.0, 1.0, {1, 0}),
                                           oracles::bump(2.5, 0.8, {1, 0}));
  const auto kd = k_decompose(h, 1.3);
  CHECK(kd.sector == KSector::h_sector);
  CHECK(std::abs(kd.lambda - 2.0) < 1e-14);
  CHECK(kd.fd_residual < 1e-6);

  // f sector with mu = -1: lambda = -b = -sqrt3
  const auto f = angular::k_f_sector_state(0.0, HalfInt{3}, HalfInt{1}, +1, -1, cplx{0, 0},
                                           oracles::bump(2.0, 1.0, {1, 0}),
                                           oracles::bump(3.0, 1.2, {0.5, 0}));
  const auto kf = k_decompose(f, 1.3);
  CHECK(kf.sector == KSector::f_sector);
  CHECK(std::abs(kf.lambda + std::sqrt(3.0)) < 1e-14);
  CHECK(kf.fd_residual < 1e-6);

  // j = 1/2 f sector: lambda = 0; h sector: lambda = delta
  const auto fmin = angular::k_f_sector_state(0.0, HalfInt{1}, HalfInt{1}, -1, +1, cplx{0, 0},
                                              {}, oracles::bump(2.0, 1.0, {1, 0}));
  const auto kfm = k_decompose(fmin, 1.3);
  CHECK(std::abs(kfm.lambda) == 0.0);
  CHECK(kfm.fd_residual < 1e-6);
  const auto hmin = angular::k_h_sector_state(0.0, HalfInt{1}, HalfInt{1}, -1, cplx{0, 0},
                                              cplx{0, 0}, oracles::bump(2.0, 1.0, {1, 0}),
                                              oracles::bump(2.5, 0.8, {1, 0}));
  const auto khm = k_decompose(hmin, 1.3);
  CHECK(std::abs(khm.lambda + 1.0) < 1e-14);  // delta a = -1
  CHECK(khm.fd_residual < 1e-6);

  // mixed state: classification error listing both projections
  const auto mixed = oracles::random_sector_state(7u, HalfInt{3}, HalfInt{1}, +1, cplx{0, 0},
                                                  cplx{0, 0});
  CHECK_THROWS_WITH_AS(k_decompose(mixed, 1.3), doctest::Contains("fraction"),
                       std::runtime_error);
}

TEST_CASE("K sectors are N-stable") {
  for (int tj : {3, 5}) {
    const HalfInt j{tj};
    const Mat12 v = amplitude_matrix(std::exp(I * 0.2), cplx{1, 0}, j);
    const Mat12 k = k_amplitude_matrix(j);
    CHECK((k * v - v * k).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("basis change V(A', A)") {
  const cplx A{0.0, 0.0}, Ap{0.8, 0.0};
  const auto st = oracles::random_sector_state(11u, HalfInt{3}, HalfInt{-1}, +1, A,
                                               cplx{0.1, 0.0});

  // Gamma = 0 is the identity
  const auto same = basis_change_V(st, A);
  CHECK((same.amplitudes_at(1.9) - st.amplitudes_at(1.9)).cwiseAbs().maxCoeff() < 1e-15);

  // Delta conjugation maps the alpha = 1 sector into alpha = e^{0.8 i}
  const auto stp = basis_change_V(st, Ap);
  CHECK(std::abs(stp.A - Ap) < 1e-15);
  CHECK(sector_residual(stp, 2.2) < 1e-11);
  // explicitly: g4/f1 ratio moved from delta to delta e^{iA'}
  const Vec12 a = stp.amplitudes_at(2.2);
  CHECK(std::abs(a(angular::g4) / a(angular::f1) - std::exp(I * Ap)) < 1e-12);

  // matrix identities: Delta moves alpha, D leaves N alone
  const cplx g = 0.5 * (Ap - A);
  const Mat3 piA = pi_matrix(build_N(std::exp(I * A), Frame::Schwinger), 0, 0);
  const Mat3 piAp = pi_matrix(build_N(std::exp(I * Ap), Frame::Schwinger), 0, 0);
  CHECK((iso3::Delta_of(g) * piA * iso3::Delta_of(g).inverse() - piAp)
            .cwiseAbs()
            .maxCoeff() < 1e-14);
  CHECK((iso3::D_of(cplx{1.2, 0}) * piA * iso3::D_of(cplx{1.2, 0}).inverse() - piA)
            .cwiseAbs()
            .maxCoeff() < 1e-14);

  // D(G) scales only the T0 block
  const auto std_ = apply_D(st, cplx{1.2, 0.0});
  const Vec12 before = st.amplitudes_at(1.5), after = std_.amplitudes_at(1.5);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(after(angular::f1 + i) - before(angular::f1 + i)) < 1e-15);
    CHECK(std::abs(after(angular::g1 + i) - before(angular::g1 + i)) < 1e-15);
    CHECK(std::abs(after(angular::h1 + i) - std::exp(-I * 1.2) * before(angular::h1 + i)) <
          1e-15);
  }

  // Cartesian factorizations
  const double th = 1.1, ph = 2.2;
  CHECK((Delta_cartesian(g, th, ph) -
         iso3::U_cart(th, ph) * iso3::Delta_of(g) * iso3::U_cart(th, ph).inverse())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK((D_cartesian(g, th, ph) -
         iso3::U_cart(th, ph) * iso3::D_of(g) * iso3::U_cart(th, ph).inverse())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK((D_cartesian(g, th, ph) -
         (Mat3::Identity() + (std::exp(-I * g) - 1.0) * iso3::t_tilde0(th, ph)))
            .cwiseAbs()
            .maxCoeff() < 1e-13);
}

TEST_CASE("B freedom") {
  const auto st = oracles::random_sector_state(13u, HalfInt{3}, HalfInt{1}, -1, cplx{0.3, 0.0},
                                               cplx{0.0, 0.0});
  // identity move
  const auto same = apply_B_freedom(st, st.B, st.B);
  CHECK((same.amplitudes_at(1.5) - st.amplitudes_at(1.5)).cwiseAbs().maxCoeff() < 1e-15);

  // B' - B = pi negates the T0 block; eigen residual unchanged
  const auto neg = apply_B_freedom(st, st.B, st.B + M_PI);
  const Vec12 a = st.amplitudes_at(1.5), b = neg.amplitudes_at(1.5);
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(b(angular::h1 + i) + a(angular::h1 + i)) < 1e-14);
  CHECK(sector_residual(neg, 1.5) < 1e-12);

  // D and Delta act diagonally, so their order is immaterial on states
  const cplx g{0.4, 0.1};
  const auto ab = apply_Delta(apply_D(st, g), g);
  const auto ba = apply_D(apply_Delta(st, g), g);
  CHECK((ab.amplitudes_at(2.0) - ba.amplitudes_at(2.0)).cwiseAbs().maxCoeff() < 1e-12);
}
