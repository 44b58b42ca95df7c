#include <doctest.h>

#include <random>

#include "isomono/algebra.hpp"

using namespace isomono;
using namespace isomono::iso3;

namespace {
const cplx I{0.0, 1.0};
}

TEST_CASE("cyclic generators") {
  // t3 T_s = s T_s
  Eigen::Vector3cd Tp{1, 0, 0}, T0{0, 1, 0}, Tm{0, 0, 1};
  CHECK((t3() * Tp - Tp).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((t3() * T0).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((t3() * Tm + Tm).cwiseAbs().maxCoeff() < 1e-15);
  // su(2) algebra
  CHECK((t1() * t2() - t2() * t1() - I * t3()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((t2() * t3() - t3() * t2() - I * t1()).cwiseAbs().maxCoeff() < 1e-15);
  // spin-1 Casimir
  CHECK((t1() * t1() + t2() * t2() + t3() * t3() - 2.0 * Mat3::Identity())
            .cwiseAbs()
            .maxCoeff() < 1e-15);
}

TEST_CASE("gibbs rotation basics") {
  CHECK((gibbs_rotation(Vec3c::Zero()) - Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);

  // c' = (0,0,-tan(phi/2)) is the z-rotation of the Dirac->Schwinger map
  const double phi = 0.8;
  Mat3 ref;
  ref << std::cos(phi), std::sin(phi), 0, -std::sin(phi), std::cos(phi), 0, 0, 0, 1;
  const Mat3 o = gibbs_rotation(Vec3c(0, 0, -std::tan(phi / 2)));
  CHECK((o - ref.cast<cplx>()).cwiseAbs().maxCoeff() < 1e-12);

  // the hedgehog-aligning rotation sends r Phi n_{theta,phi} to (0, 0, r Phi)
  const double th = 0.8, ph = 0.3, rphi = 2.7;
  const double t2v = std::sin(th) / (1.0 + std::cos(th));
  const Vec3c c(t2v * std::sin(ph), -t2v * std::cos(ph), 0.0);
  const Vec3c rotated = gibbs_rotation(c) * (rphi * n_of(th, ph)).cast<cplx>();
  CHECK(std::abs(rotated(0)) < 1e-12);
  CHECK(std::abs(rotated(1)) < 1e-12);
  CHECK(std::abs(rotated(2) - rphi) < 1e-12);

  CHECK_THROWS_AS(gibbs_rotation(Vec3c(I, 0, 0)), std::domain_error);  // 1 + c.c = 0
}

TEST_CASE("gibbs composition law against the closed-form c''") {
  std::mt19937_64 rng(23u);
  std::uniform_real_distribution<double> uth(0.05, M_PI - 0.05), uph(0.05, 2 * M_PI - 0.35);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const double th = uth(rng), ph = uph(rng);
    if (std::abs(ph - M_PI) < 0.1) continue;  // tan(phi/2) pole
    const double t2v = std::tan(th / 2);
    const Vec3c c(t2v * std::sin(ph), -t2v * std::cos(ph), 0.0);
    const Vec3c cp(0.0, 0.0, -std::tan(ph / 2));
    const Vec3c cpp = gibbs_compose(cp, c);
    worst = std::max(worst, (gibbs_rotation(cp) * gibbs_rotation(c) - gibbs_rotation(cpp))
                                .cwiseAbs()
                                .maxCoeff());
    // closed form of the composed vector
    const Vec3c closed_form(std::tan(th / 2) * std::tan(ph / 2), -std::tan(th / 2),
                        -std::tan(ph / 2));
    worst = std::max(worst, (cpp - closed_form).cwiseAbs().maxCoeff());
    // and the composed matrix is the spherical-tetrad rotation
    Mat3 ref;
    ref << std::cos(th) * std::cos(ph), std::cos(th) * std::sin(ph), -std::sin(th),
        -std::sin(ph), std::cos(ph), 0, std::sin(th) * std::cos(ph),
        std::sin(th) * std::sin(ph), std::cos(th);
    worst = std::max(worst, (gibbs_rotation(cpp) - ref.cast<cplx>()).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("axis rotation") {
  CHECK((axis_rotation(cplx{0, 0}, Vec3(0, 0, 1)) - Mat3::Identity()).cwiseAbs().maxCoeff() <
        1e-15);
  // integer spin: 2pi rotation is the identity
  CHECK((axis_rotation(cplx{2 * M_PI, 0}, Vec3(0, 0, 1)) - Mat3::Identity())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  // z-axis gives Delta(A)
  const cplx A{0.7, 0.2};
  CHECK((axis_rotation(A, Vec3(0, 0, 1)) - Delta_of(A)).cwiseAbs().maxCoeff() < 1e-13);
  // general axis equals the U-conjugated Delta
  const double th = 1.2, ph = 0.5;
  const Mat3 lhs = axis_rotation(cplx{0.7, 0.0}, n_of(th, ph));
  const Mat3 rhs = U_cart(th, ph) * Delta_of(cplx{0.7, 0.0}) * U_cart(th, ph).inverse();
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-11);
  CHECK_THROWS_AS(axis_rotation(cplx{1, 0}, Vec3(0, 0, 2)), std::domain_error);
}

TEST_CASE("axis rotations are complex-orthogonal in the Cartesian basis") {
  std::mt19937_64 rng(31u);
  std::uniform_real_distribution<double> u(-3.0, 3.0), uth(0.01, M_PI - 0.01),
      uph(0, 2 * M_PI);
  for (int trial = 0; trial < 50; ++trial) {
    const double A = u(rng);
    const Mat3 m = S().inverse() * axis_rotation(cplx(A, 0), n_of(uth(rng), uph(rng))) * S();
    CHECK((m * m.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-11);
    CHECK(m.imag().cwiseAbs().maxCoeff() < 1e-11);  // real-orthogonal for real A
  }
}

TEST_CASE("t0 projector") {
  const Mat3 p = t0_projector();
  CHECK((p * p - p).cwiseAbs().maxCoeff() == 0.0);
  CHECK((t0_from_squares() - p).cwiseAbs().maxCoeff() == 0.0);  // entrywise exact
  // D(G) = e^{-i G t0}
  const cplx g{1.3, 0.0};
  const Mat3 d = expm(Mat3(-I * g * p));
  CHECK((d - D_of(g)).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(std::abs(d(1, 1) - std::exp(-I * g)) < 1e-13);
  CHECK(std::abs(d(0, 0) - 1.0) < 1e-15);
}

TEST_CASE("t_tilde0") {
  CHECK((t_tilde0(0.0, 0.3) - t0_projector()).cwiseAbs().maxCoeff() < 1e-15);
  const Mat3 tt = t_tilde0(1.1, 2.2);
  CHECK((tt * tt - tt).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(t_tilde0(M_PI / 2, 0.4)(0, 0) - 0.5) < 1e-15);
  // equals U t0 U^-1
  const Mat3 ref = U_cart(1.1, 2.2) * t0_projector() * U_cart(1.1, 2.2).inverse();
  CHECK((tt - ref).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("SL(2,C) spinor map") {
  CHECK((sl2c::from_gibbs(Vec3c::Zero()) - Mat2::Identity()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((sl2c::vector_map_spatial(Mat2::Identity()) - Mat3::Identity()).cwiseAbs().maxCoeff() <
        1e-14);

  const double th = 0.9, ph = 0.4;
  const Vec3c cpp(std::tan(th / 2) * std::tan(ph / 2), -std::tan(th / 2), -std::tan(ph / 2));
  const Mat2 B = sl2c::from_gibbs(cpp);
  // explicit entries of the Cartesian<->spherical tetrad spinor map
  Mat2 ref;
  ref << std::cos(th / 2) * std::exp(I * ph / 2.0), std::sin(th / 2) * std::exp(-I * ph / 2.0),
      -std::sin(th / 2) * std::exp(I * ph / 2.0), std::cos(th / 2) * std::exp(-I * ph / 2.0);
  CHECK((B - ref).cwiseAbs().maxCoeff() < 1e-13);

  // vector map reproduces O(c'') on the spatial block; rotation leaves time alone
  CHECK((sl2c::vector_map_spatial(B) - gibbs_rotation(cpp)).cwiseAbs().maxCoeff() < 1e-11);
  const Eigen::Matrix4cd L = sl2c::vector_map(B);
  CHECK(std::abs(L(0, 0) - 1.0) < 1e-13);
  CHECK(L.row(0).tail(3).cwiseAbs().maxCoeff() < 1e-13);

  // the sign branch is immaterial for the vector map
  CHECK((sl2c::vector_map(Mat2(-B)) - L).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("Weyl gamma matrices") {
  const double eta[4] = {1, -1, -1, -1};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Mat4 anti = bisp::gamma(a) * bisp::gamma(b) + bisp::gamma(b) * bisp::gamma(a);
      const Mat4 expect = (a == b ? 2.0 * eta[a] : 0.0) * Mat4::Identity();
      CHECK((anti - expect).cwiseAbs().maxCoeff() == 0.0);
    }
  // gamma5 = -i g0 g1 g2 g3 in this convention (pinned by the explicit
  // anti-diagonal parity kernel)
  const Mat4 g5 = -I * bisp::gamma(0) * bisp::gamma(1) * bisp::gamma(2) * bisp::gamma(3);
  CHECK((g5 - bisp::gamma5()).cwiseAbs().maxCoeff() < 1e-15);
  // parity kernel: anti-diagonal -1's, squares to the identity
  const Mat4 pk = bisp::parity_kernel();
  for (int r = 0; r < 4; ++r) CHECK(pk(r, 3 - r) == cplx{-1.0, 0.0});
  CHECK((pk * pk - Mat4::Identity()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Kronecker composite") {
  std::mt19937_64 rng(41u);
  for (int trial = 0; trial < 10; ++trial) {
    (void)rng();
    const Mat3 x = Mat3::Random(), xp = Mat3::Random();
    const Mat4 y = Mat4::Random(), yp = Mat4::Random();
    CHECK((kron(x, y) * kron(xp, yp) - kron(Mat3(x * xp), Mat4(y * yp)))
              .cwiseAbs()
              .maxCoeff() < 1e-13);
  }
  // layout: iso index slow
  Mat3 e13 = Mat3::Zero();
  e13(0, 2) = 1.0;
  const Mat12 k = kron(e13, Mat4::Identity());
  CHECK(k(0, 8) == cplx{1.0, 0.0});
  CHECK(k(3, 11) == cplx{1.0, 0.0});
  CHECK(k.cwiseAbs().sum() == doctest::Approx(4.0));
}

TEST_CASE("matrix exponential") {
  // against the diagonal case and the 2x2 closed form
  const Mat3 d = expm(Mat3(-I * 1.3 * t0_projector()));
  CHECK(std::abs(d(1, 1) - std::exp(-I * 1.3)) < 1e-14);
  Eigen::Matrix2cd a;
  a << 0, 1.7, -1.7, 0;
  const Eigen::Matrix2cd e = expm(a);
  CHECK(std::abs(e(0, 0) - std::cos(1.7)) < 1e-14);
  CHECK(std::abs(e(0, 1) - std::sin(1.7)) < 1e-14);
}
