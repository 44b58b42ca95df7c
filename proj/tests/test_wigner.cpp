#include <doctest.h>

#include <random>

#include "isomono/wigner.hpp"
#include "support/oracles.hpp"

using namespace isomono;
using wigner::D;
using wigner::D_sigma;
using wigner::small_d;

TEST_CASE("small-d trivial values") {
  CHECK(small_d(HalfInt{1}, HalfInt{1}, HalfInt{1}, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  // half turn flips the weight (this convention: d^{1/2}_{1/2,-1/2}(pi) = -1)
  CHECK(small_d(HalfInt{1}, HalfInt{1}, HalfInt{-1}, M_PI) ==
        doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("small-d against the arbitrary-precision factorial-sum oracle") {
  // frozen oracle values (256-bit factorial sum)
  CHECK(std::abs(small_d(HalfInt{3}, HalfInt{1}, HalfInt{1}, 0.7) -
                 0.60802146413063997272689526893499) < 1e-12);
  CHECK(std::abs(small_d(HalfInt{5}, HalfInt{3}, HalfInt{-1}, 1.3) -
                 0.48191744412862004064917611292896) < 1e-12);
  CHECK(std::abs(small_d(HalfInt{9}, HalfInt{1}, HalfInt{5}, 2.1) -
                 0.39944144895627398853058755444674) < 1e-12);

  // and live, across the 2j <= 40 stability contract
  std::mt19937_64 rng(7u);
  std::uniform_real_distribution<double> uth(0.05, M_PI - 0.05);
  for (int twoj : {1, 4, 9, 17, 26, 33, 40}) {
    std::uniform_int_distribution<int> um(0, twoj);
    for (int trial = 0; trial < 8; ++trial) {
      const int twomp = -twoj + 2 * um(rng);
      const int twom = -twoj + 2 * um(rng);
      const double th = uth(rng);
      const double mine = small_d(HalfInt{twoj}, HalfInt{twomp}, HalfInt{twom}, th);
      const double ref = oracles::mpfr_small_d(twoj, twomp, twom, th);
      CHECK(std::abs(mine - ref) < 1e-11 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("small-d domain errors") {
  CHECK_THROWS_AS(small_d(HalfInt{1}, HalfInt{3}, HalfInt{1}, 0.3), std::domain_error);
  CHECK_THROWS_AS(small_d(HalfInt{2}, HalfInt{1}, HalfInt{0}, 0.3), std::domain_error);
  CHECK_THROWS_AS(small_d(HalfInt{-1}, HalfInt{1}, HalfInt{1}, 0.3), std::domain_error);
}

TEST_CASE("full D-function") {
  // identity rotation is diagonal
  CHECK(std::abs(D(HalfInt{1}, HalfInt{-1}, HalfInt{1}, 0, 0, 0)) < 1e-15);
  // theta = 0 reduces to phases
  const cplx v = D(HalfInt{1}, HalfInt{1}, HalfInt{1}, M_PI / 3, 0, 0);
  CHECK(std::abs(v - std::exp(cplx(0, -M_PI / 6))) < 1e-15);
  // row normalization by direct summation
  double row = 0;
  for (int twom = -3; twom <= 3; twom += 2)
    row += std::norm(D(HalfInt{3}, HalfInt{1}, HalfInt{twom}, 1.1, 0.6, 0));
  CHECK(row == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("D-matrix unitarity property") {
  std::mt19937_64 rng(11u);
  std::uniform_real_distribution<double> uth(0.05, M_PI - 0.05), uph(0, 2 * M_PI);
  for (int twoj = 1; twoj <= 9; twoj += 2) {
    const int n = twoj + 1;
    Eigen::MatrixXcd M(n, n);
    const double th = uth(rng), ph = uph(rng);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        M(a, b) = D(HalfInt{twoj}, HalfInt{twoj - 2 * a}, HalfInt{twoj - 2 * b}, ph, th, 0);
    CHECK((M * M.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("ladder coefficients") {
  const auto lc32 = wigner::ladder_coefficients(HalfInt{3});
  CHECK(lc32.a == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(lc32.b == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  REQUIRE(lc32.c.has_value());
  CHECK(*lc32.c == doctest::Approx(0.0));

  const auto lc12 = wigner::ladder_coefficients(HalfInt{1});
  CHECK(lc12.a == doctest::Approx(1.0));
  CHECK(lc12.b == doctest::Approx(0.0));
  CHECK(!lc12.c.has_value());

  const auto lc52 = wigner::ladder_coefficients(HalfInt{5});
  CHECK(lc52.a == doctest::Approx(3.0));
  CHECK(lc52.b == doctest::Approx(std::sqrt(8.0)));
  // c = sqrt((j-3/2)(j+5/2)) = sqrt(5) at j = 5/2; the finite-difference
  // recurrence checks pin this value
  CHECK(*lc52.c == doctest::Approx(std::sqrt(5.0)));

  CHECK_THROWS_AS(wigner::ladder_coefficients(HalfInt{0}), std::domain_error);
}

TEST_CASE("ladder recurrences by finite differences") {
  CHECK(wigner::verify_recurrences(HalfInt{3}, HalfInt{1}, 1.0, 0.4).max_residual < 1e-8);
  CHECK(wigner::verify_recurrences(HalfInt{5}, HalfInt{-3}, 2.0, 1.7).max_residual < 1e-8);
  CHECK(wigner::verify_recurrences(HalfInt{3}, HalfInt{3}, M_PI / 2, 0.0).max_residual < 1e-8);
  // pole guard
  CHECK_THROWS_AS(wigner::verify_recurrences(HalfInt{3}, HalfInt{1}, 1e-8, 0.0),
                  std::domain_error);
  // subset for j = 1/2 (only the sigma = +-1/2 relations are defined)
  const auto rep = wigner::verify_recurrences(HalfInt{1}, HalfInt{1}, 0.9, 0.2);
  CHECK(rep.checked == 4);
  CHECK(rep.max_residual < 1e-8);
}

TEST_CASE("recurrences over 100 random samples") {
  std::mt19937_64 rng(5u);
  std::uniform_real_distribution<double> uth(0.2, M_PI - 0.2), uph(0, 2 * M_PI);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int twoj = 2 * static_cast<int>(rng() % 4) + 3;  // 3/2 .. 9/2
    const int twom = -twoj + 2 * static_cast<int>(rng() % (twoj + 1));
    worst = std::max(worst, wigner::verify_recurrences(HalfInt{twoj}, HalfInt{twom}, uth(rng),
                                                       uph(rng))
                                .max_residual);
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("parity relation") {
  auto check_pair = [](int tj, int tm, int ts, double th, double ph) {
    const auto [lhs, rhs] = wigner::parity_flip(HalfInt{tj}, HalfInt{tm}, HalfInt{ts}, th, ph);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  };
  check_pair(1, 1, 1, 0.9, 0.3);
  check_pair(3, -1, -3, 1.4, 2.0);
  check_pair(1, 1, 1, M_PI / 2, 0.0);
  // all |sigma| <= 3/2, j <= 9/2
  std::mt19937_64 rng(3u);
  std::uniform_real_distribution<double> uth(0.05, M_PI - 0.05), uph(0, 2 * M_PI);
  for (int tj = 1; tj <= 9; tj += 2)
    for (int ts : {-3, -1, 1, 3}) {
      if (std::abs(ts) > tj) continue;
      const int tm = -tj + 2 * static_cast<int>(rng() % (tj + 1));
      check_pair(tj, tm, ts, uth(rng), uph(rng));
    }
}

TEST_CASE("pauli criterion") {
  CHECK(wigner::pauli_criterion(Rational(1, 2), Rational(1, 2)).admissible);
  CHECK(!wigner::pauli_criterion(Rational(1, 2), Rational(1)).admissible);
  CHECK(!wigner::pauli_criterion(Rational(1, 4), Rational(1, 4)).admissible);
  // integer and derivative rules agree on the whole grid (throws on mismatch)
  for (int tl = -8; tl <= 8; ++tl)
    for (int tj = -8; tj <= 8; ++tj) {
      const auto v = wigner::pauli_criterion(Rational(tl, 2), Rational(tj, 2));
      CHECK(v.integer_rule == v.derivative_rule);
    }
}

TEST_CASE("pauli phi: Legendre ratio at lambda = 0, j = 1") {
  // proportional to P_1(cos th) = cos th, constant ratio over theta
  const double phi = 0.0;
  const cplx r0 = wigner::pauli_phi(HalfInt{0}, HalfInt::of(1), HalfInt{0}, 0.1, phi) /
                  std::cos(0.1);
  for (double th : {0.3, 0.9, 1.8, 2.4, 3.0}) {
    const cplx r = wigner::pauli_phi(HalfInt{0}, HalfInt::of(1), HalfInt{0}, th, phi) /
                   std::cos(th);
    CHECK(std::abs(r - r0) < 1e-10);
  }
}

TEST_CASE("pauli phi: Wigner correspondence (documented index mapping)") {
  // Phi^l_jm = sqrt((2j+1)/4pi) (-1)^{j-m} D^j_{-m,-l}(phi,theta,0) in this
  // repo's D convention.
  std::mt19937_64 rng(17u);
  std::uniform_real_distribution<double> uth(0.15, M_PI - 0.15), uph(0, 2 * M_PI);
  for (int tl : {-2, -1, 0, 1, 3})
    for (int tj = (tl == 0 ? 2 : std::abs(tl)); tj <= 7; tj += 2)
      for (int tm = -tj; tm <= tj; tm += 2) {
        const HalfInt lam{tl}, j{tj}, m{tm};
        const double th = uth(rng), ph = uph(rng);
        const cplx phi = wigner::pauli_phi(lam, j, m, th, ph);
        const cplx ref = std::sqrt((tj + 1.0) / (4.0 * M_PI)) * minus_one_pow(j - m) *
                         D_sigma(j, m, -lam, th, ph);
        CHECK(std::abs(phi - ref) < 1e-10);
      }
  // the half-integer case quoted in the docs
  const double th = 1.1, ph = 0.7;
  const cplx phi = wigner::pauli_phi(HalfInt{1}, HalfInt{1}, HalfInt{1}, th, ph);
  const cplx ref = std::sqrt(2.0 / (4.0 * M_PI)) *
                   D(HalfInt{1}, HalfInt{-1}, HalfInt{-1}, ph, th, 0);
  CHECK(std::abs(phi - ref) < 1e-10);
}

TEST_CASE("pauli phi: J- annihilates the lowest weight") {
  CHECK(std::abs(wigner::apply_J_minus_fd(HalfInt{1}, HalfInt{1}, HalfInt{-1}, 1.0, 0.7)) <
        1e-7);
  CHECK(std::abs(wigner::apply_J_minus_fd(HalfInt{-1}, HalfInt{3}, HalfInt{-3}, 1.7, 2.2)) <
        1e-7);
  // inadmissible pair is a criterion error
  CHECK_THROWS_AS(wigner::pauli_phi(HalfInt{1}, HalfInt::of(1), HalfInt{0}, 1.0, 0.0),
                  std::domain_error);
}
