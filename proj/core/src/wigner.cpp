#include "isomono/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace isomono::wigner {

namespace {

long double ln_factorial(int n) { return std::lgamma(static_cast<long double>(n) + 1.0L); }

void check_indices(HalfInt j, HalfInt mp, HalfInt m) {
  if (j.twice < 0) throw std::domain_error("wigner: j must be >= 0");
  if (!valid_projection(j, mp) || !valid_projection(j, m))
    throw std::domain_error("wigner: projection out of range for j = " + j.str());
}

// f'(x) by the 5-point central stencil.
template <typename F>
auto diff5(const F& f, double x, double h) -> decltype(f(x)) {
  return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

}  // namespace

double small_d(HalfInt j, HalfInt mp, HalfInt m, double theta) {
  check_indices(j, mp, m);

  // Integer combinations of the half-integer labels.
  const int jpm = (j.twice + m.twice) / 2;    // j + m
  const int jmm = (j.twice - m.twice) / 2;    // j - m
  const int jpmp = (j.twice + mp.twice) / 2;  // j + m'
  const int jmmp = (j.twice - mp.twice) / 2;  // j - m'
  const int dm = (mp.twice - m.twice) / 2;    // m' - m

  const int kmin = std::max(0, -dm);
  const int kmax = std::min(jpm, jmmp);
  if (kmin > kmax) return 0.0;

  const long double c = std::cos(0.5L * static_cast<long double>(theta));
  const long double s = std::sin(0.5L * static_cast<long double>(theta));
  const long double log_pref =
      0.5L * (ln_factorial(jpmp) + ln_factorial(jmmp) + ln_factorial(jpm) + ln_factorial(jmm));

  long double sum = 0.0L;
  for (int k = kmin; k <= kmax; ++k) {
    const long double log_den =
        ln_factorial(jpm - k) + ln_factorial(k) + ln_factorial(jmmp - k) + ln_factorial(dm + k);
    const int p_cos = jpm + jmmp - 2 * k;  // 2j + m - m' - 2k
    const int p_sin = dm + 2 * k;
    const long double sgn = ((dm + k) & 1) ? -1.0L : 1.0L;
    sum += sgn * std::exp(log_pref - log_den) * std::pow(c, p_cos) * std::pow(s, p_sin);
  }
  return static_cast<double>(sum);
}

cplx D(HalfInt j, HalfInt mp, HalfInt m, double phi, double theta, double psi) {
  const double d = small_d(j, mp, m, theta);
  return std::exp(cplx(0.0, -(mp.value() * phi + m.value() * psi))) * d;
}

LadderCoeffs ladder_coefficients(HalfInt j) {
  if (j.twice < 1) throw std::domain_error("ladder_coefficients: requires j >= 1/2");
  const double jv = j.value();
  LadderCoeffs lc;
  lc.a = jv + 0.5;
  lc.b = std::sqrt((jv - 0.5) * (jv + 1.5));
  if (j.twice >= 3) lc.c = std::sqrt((jv - 1.5) * (jv + 2.5));
  return lc;
}

RecurrenceReport verify_recurrences(HalfInt j, HalfInt m, double theta, double phi, double step) {
  if (theta < 1e-6 || theta > M_PI - 1e-6)
    throw std::domain_error("verify_recurrences: theta too close to a pole (1/sin theta)");
  if (!valid_projection(j, m)) throw std::domain_error("verify_recurrences: invalid (j, m)");

  const LadderCoeffs lc = ladder_coefficients(j);
  const double cval = lc.c.value_or(0.0);

  // Coefficients of D_{s-1} and D_{s+1} per weight s; the theta relation is
  // d/dtheta D_s = (1/2)(lo * D_{s-1} - hi * D_{s+1}), the phi relation
  // [sin^-1 th (i d/dphi - s cos th)] D_s = (1/2)(-lo * D_{s-1} - hi * D_{s+1}).
  struct Rel { HalfInt sigma; double lo, hi; };
  const std::array<Rel, 4> rels{{
      {HalfInt{1}, lc.a, lc.b},    // s = +1/2
      {HalfInt{-1}, lc.b, lc.a},   // s = -1/2
      {HalfInt{3}, lc.b, cval},    // s = +3/2
      {HalfInt{-3}, cval, lc.b},   // s = -3/2
  }};

  auto Dval = [&](HalfInt sigma, double th, double ph) -> cplx {
    if (sigma.abs() <= j) return D_sigma(j, m, sigma, th, ph);
    return {0.0, 0.0};
  };

  RecurrenceReport rep;
  int idx = 0;
  for (const Rel& rel : rels) {
    if (rel.sigma.abs() <= j) {
      const HalfInt lo_s = rel.sigma - HalfInt::of(1);
      const HalfInt hi_s = rel.sigma + HalfInt::of(1);
      const cplx Dlo = Dval(lo_s, theta, phi);
      const cplx Dhi = Dval(hi_s, theta, phi);

      const cplx dth =
          diff5([&](double th) { return Dval(rel.sigma, th, phi); }, theta, step);
      const cplx rhs_th = 0.5 * (rel.lo * Dlo - rel.hi * Dhi);
      const double r1 = std::abs(dth - rhs_th);

      const cplx dph =
          diff5([&](double ph) { return Dval(rel.sigma, theta, ph); }, phi, step);
      const cplx lhs_ph = (cplx(0, 1) * dph - rel.sigma.value() * std::cos(theta) *
                                                  Dval(rel.sigma, theta, phi)) /
                          std::sin(theta);
      const cplx rhs_ph = 0.5 * (-rel.lo * Dlo - rel.hi * Dhi);
      const double r2 = std::abs(lhs_ph - rhs_ph);

      rep.residual[idx] = r1;
      rep.residual[idx + 1] = r2;
      rep.max_residual = std::max({rep.max_residual, r1, r2});
      rep.checked += 2;
    }
    idx += 2;
  }
  return rep;
}

std::pair<cplx, cplx> parity_flip(HalfInt j, HalfInt m, HalfInt sigma, double theta, double phi) {
  const cplx lhs = D_sigma(j, m, sigma, M_PI - theta, phi + M_PI);
  const cplx rhs = minus_one_pow(j) * D_sigma(j, m, -sigma, theta, phi);
  return {lhs, rhs};
}

// ---- Pauli functions ---------------------------------------------------------

PauliVerdict pauli_criterion(Rational lambda, Rational j) {
  PauliVerdict v;

  // Rule 1: 2*lambda integral; rule 2: j in {|lambda|, |lambda|+1, ...}.
  const Rational two_lambda = lambda * Rational(2);
  v.integer_rule = two_lambda.is_integer() && (j - lambda.abs()).is_nonneg_integer();

  // Independent route: (1+x)^{j+l}(1-x)^{j-l} must be a polynomial of degree 2j,
  // i.e. formally differentiating 2j+1 times must yield the zero polynomial.
  const Rational p = j + lambda;
  const Rational q = j - lambda;
  if (!p.is_nonneg_integer() || !q.is_nonneg_integer()) {
    v.derivative_rule = false;  // not a polynomial at all
  } else {
    const auto pi = static_cast<int>(p.num);
    const auto qi = static_cast<int>(q.num);
    // Exact monomial coefficients of (1+x)^p (1-x)^q.
    std::vector<long long> poly(static_cast<size_t>(pi + qi) + 1, 0);
    std::vector<long long> binp(static_cast<size_t>(pi) + 1), binq(static_cast<size_t>(qi) + 1);
    binp[0] = 1;
    for (int k = 1; k <= pi; ++k) binp[k] = binp[k - 1] * (pi - k + 1) / k;
    binq[0] = 1;
    for (int k = 1; k <= qi; ++k) binq[k] = binq[k - 1] * (qi - k + 1) / k;
    for (int a = 0; a <= pi; ++a)
      for (int b = 0; b <= qi; ++b)
        poly[static_cast<size_t>(a + b)] += binp[a] * ((b & 1) ? -binq[b] : binq[b]);
    const int nderiv = pi + qi + 1;  // 2j + 1
    for (int d = 0; d < nderiv && !poly.empty(); ++d) {
      std::vector<long long> der(poly.size() > 1 ? poly.size() - 1 : 0, 0);
      for (size_t n = 1; n < poly.size(); ++n) der[n - 1] = poly[n] * static_cast<long long>(n);
      poly.swap(der);
    }
    v.derivative_rule = std::all_of(poly.begin(), poly.end(), [](long long c) { return c == 0; });
  }

  v.admissible = v.integer_rule;
  if (v.integer_rule != v.derivative_rule)
    throw std::logic_error("pauli_criterion: integer and derivative rules disagree");
  if (!v.admissible) {
    if (!two_lambda.is_integer())
      v.reason = "2*lambda is not an integer";
    else
      v.reason = "j is not in {|lambda|, |lambda|+1, ...}";
  }
  return v;
}

cplx pauli_phi(HalfInt lambda, HalfInt j, HalfInt m, double theta, double phi) {
  const PauliVerdict verdict = pauli_criterion(Rational::of(lambda), Rational::of(j));
  if (!verdict.admissible)
    throw std::domain_error("pauli_phi: inadmissible (lambda, j): " + verdict.reason);
  if (!valid_projection(j, m)) throw std::domain_error("pauli_phi: invalid (j, m)");

  const int p = (j.twice + lambda.twice) / 2;  // j + lambda, integer >= 0
  const int q = (j.twice - lambda.twice) / 2;  // j - lambda, integer >= 0
  const int n = (j.twice - m.twice) / 2;       // j - m derivatives

  const long double x = std::cos(static_cast<long double>(theta));
  const long double one_p = 1.0L + x;
  const long double one_m = 1.0L - x;

  // Leibniz expansion of (d/dx)^n [(1+x)^p (1-x)^q].
  long double deriv = 0.0L;
  for (int k = std::max(0, n - q); k <= std::min(n, p); ++k) {
    // C(n,k) p!/(p-k)! (1+x)^{p-k} * (-1)^{n-k} q!/(q-n+k)! (1-x)^{q-n+k}
    const long double lg = ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k) +
                           ln_factorial(p) - ln_factorial(p - k) + ln_factorial(q) -
                           ln_factorial(q - n + k);
    const long double sgn = ((n - k) & 1) ? -1.0L : 1.0L;
    deriv += sgn * std::exp(lg) * std::pow(one_p, p - k) * std::pow(one_m, q - n + k);
  }

  const long double jv = j.value();
  const long double mv = m.value();
  const long double lv = lambda.value();
  const long double logN = -0.5L * std::log(2.0L * static_cast<long double>(M_PI)) - jv * std::log(2.0L) +
                           0.5L * (std::log(2.0L * jv + 1.0L) + ln_factorial((j.twice + m.twice) / 2) -
                                   std::log(2.0L) - ln_factorial(n) - std::lgamma(jv + lv + 1.0L) -
                                   std::lgamma(jv - lv + 1.0L));

  const long double sin_th = std::sin(static_cast<long double>(theta));
  const long double shape = std::pow(sin_th, -mv) * std::pow(one_m, 0.5L * lv) *
                            std::pow(one_p, -0.5L * lv);
  const long double mag = std::exp(logN) * shape * deriv;
  return std::exp(cplx(0.0, m.value() * phi)) * static_cast<double>(mag);
}

cplx apply_J_minus_fd(HalfInt lambda, HalfInt j, HalfInt m, double theta, double phi, double step) {
  auto f_th = [&](double th) { return pauli_phi(lambda, j, m, th, phi); };
  auto f_ph = [&](double ph) { return pauli_phi(lambda, j, m, theta, ph); };
  const cplx d_th = diff5(f_th, theta, step);
  const cplx d_ph = diff5(f_ph, phi, step);
  const cplx val = pauli_phi(lambda, j, m, theta, phi);
  const cplx bracket = -d_th + cplx(0, 1) * (std::cos(theta) / std::sin(theta)) * d_ph +
                       lambda.value() / std::sin(theta) * val;
  return std::exp(cplx(0.0, -phi)) * bracket;
}

}  // namespace isomono::wigner
