#include "isomono/radial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "isomono/nsym.hpp"
#include "isomono/quadrature.hpp"
#include "isomono/wigner.hpp"

namespace isomono::radial {

namespace {

const cplx I{0.0, 1.0};

using CoeffFn = std::function<cplx(double)>;

CoeffFn constant(cplx c) {
  return [c](double) { return c; };
}

struct EqBuilder {
  ScalarEquation eq;
  EqBuilder& term(int var, CoeffFn c) {
    eq.terms.push_back({var, false, std::move(c)});
    return *this;
  }
  EqBuilder& term(int var, cplx c) { return term(var, constant(c)); }
  EqBuilder& deriv(int var, cplx c) {
    eq.terms.push_back({var, true, constant(c)});
    return *this;
  }
};

double ladder_a(HalfInt j) { return j.value() + 0.5; }
double ladder_b(HalfInt j) { return std::sqrt((j.value() - 0.5) * (j.value() + 1.5)); }

}  // namespace

std::string case_name(Case c) {
  switch (c) {
    case Case::full_j: return "full_j";
    case Case::full_min: return "full_min";
    case Case::reduced_W0: return "reduced_W0";
    case Case::reduced_W: return "reduced_W";
    case Case::reduced_min_W0: return "reduced_min_W0";
    case Case::reduced_min_W: return "reduced_min_W";
  }
  return "?";
}

MatX RadialSystem::M(double r) const {
  MatX m = MatX::Zero(dim, dim);
  for (const ScalarEquation& eq : eqs) {
    int dvar = -1;
    cplx dcoef;
    for (const Term& t : eq.terms)
      if (t.deriv) {
        dvar = t.var;
        dcoef = t.coeff(r);
      }
    for (const Term& t : eq.terms)
      if (!t.deriv) m(dvar, t.var) -= t.coeff(r) / dcoef;
  }
  return m;
}

double RadialSystem::equation_residual(const VecX& y, double r) const {
  const VecX yp = M(r) * y;
  double worst = 0;
  for (const ScalarEquation& eq : eqs) {
    cplx sum{0.0, 0.0};
    for (const Term& t : eq.terms) sum += t.coeff(r) * (t.deriv ? yp(t.var) : y(t.var));
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

Eigen::VectorXd RadialSystem::pairing_diagonal() const {
  static const double g0g3[4] = {1.0, -1.0, -1.0, 1.0};
  Eigen::VectorXd d(dim);
  for (int i = 0; i < dim; ++i) d(i) = g0g3[vars[i].bispinor_row];
  return d;
}

RadialSystem assemble(Case tag, const Params& p) {
  const bool minimal =
      tag == Case::full_min || tag == Case::reduced_min_W0 || tag == Case::reduced_min_W;
  const bool reduced = tag != Case::full_j && tag != Case::full_min;
  if (minimal && p.j.twice != 1)
    throw std::invalid_argument("assemble: minimal cases require j = 1/2");
  if (!minimal && p.j.twice < 3)
    throw std::invalid_argument("assemble: " + case_name(tag) + " requires j >= 3/2");
  if (reduced) {
    if (!p.profile.F_is_zero() || p.profile.kappa != 0.0)
      throw std::invalid_argument(
          "assemble: reduced systems are consistent only with F = 0 and kappa = 0");
    if (p.delta != 1 && p.delta != -1)
      throw std::invalid_argument("assemble: reduced systems need delta = +-1");
  }
  if ((tag == Case::reduced_W || tag == Case::reduced_min_W) &&
      std::min(std::abs(p.alpha - 1.0), std::abs(p.alpha + 1.0)) > 1e-12)
    throw std::invalid_argument("assemble: W != 0 sector systems require alpha = +-1");

  const double eps = p.epsilon, mass = p.mass;
  const double d = p.delta;
  const double a = ladder_a(p.j);
  const double b = ladder_b(p.j);
  const MonopoleProfile prof = p.profile;

  const CoeffFn iw = [prof](double r) { return I * std::sqrt(2.0) * prof.W(r) / r; };
  const CoeffFn miw = [prof](double r) { return -I * std::sqrt(2.0) * prof.W(r) / r; };
  auto over_r = [](cplx c) -> CoeffFn {
    return [c](double r) { return c / r; };
  };
  // Dyon terms of the full systems.
  const CoeffFn ep_plus = [prof, eps](double r) { return cplx(eps + prof.e * r * prof.F(r)); };
  const CoeffFn ep_minus = [prof, eps](double r) { return cplx(eps - prof.e * r * prof.F(r)); };
  const CoeffFn m_plus = [prof, mass](double r) {
    return cplx(-(mass + prof.kappa * r * prof.Phi(r)));
  };
  const CoeffFn m_minus = [prof, mass](double r) {
    return cplx(-(mass - prof.kappa * r * prof.Phi(r)));
  };

  RadialSystem sys;
  sys.tag = tag;
  sys.params = p;

  using A = angular::Slot;

  switch (tag) {
    case Case::full_j: {
      sys.dim = 12;
      sys.vars = {{"f1", 0}, {"f2", 1}, {"f3", 2}, {"f4", 3}, {"h1", 0}, {"h2", 1},
                  {"h3", 2}, {"h4", 3}, {"g1", 0}, {"g2", 1}, {"g3", 2}, {"g4", 3}};
      EqBuilder e1, e2, e3, e4, e5, e6, e7, e8, e9, e10, e11, e12;
      e1.term(A::f3, ep_plus).deriv(A::f3, -I).term(A::f4, over_r(-I * b)).term(A::f1, m_plus);
      e2.term(A::f4, ep_plus).deriv(A::f4, I).term(A::f3, over_r(I * b)).term(A::h3, iw).term(
          A::f2, m_plus);
      e3.term(A::f1, ep_plus).deriv(A::f1, I).term(A::f2, over_r(I * b)).term(A::f3, m_plus);
      e4.term(A::f2, ep_plus).deriv(A::f2, -I).term(A::f1, over_r(-I * b)).term(A::h1, miw).term(
          A::f4, m_plus);
      e5.term(A::g3, ep_minus).deriv(A::g3, -I).term(A::g4, over_r(-I * b)).term(A::h4, miw).term(
          A::g1, m_minus);
      e6.term(A::g4, ep_minus).deriv(A::g4, I).term(A::g3, over_r(I * b)).term(A::g2, m_minus);
      e7.term(A::g1, ep_minus).deriv(A::g1, I).term(A::g2, over_r(I * b)).term(A::h2, iw).term(
          A::g3, m_minus);
      e8.term(A::g2, ep_minus).deriv(A::g2, -I).term(A::g1, over_r(-I * b)).term(A::g4, m_minus);
      e9.term(A::h3, eps).deriv(A::h3, -I).term(A::h4, over_r(-I * a)).term(A::f4, miw).term(
          A::h1, -mass);
      e10.term(A::h4, eps).deriv(A::h4, I).term(A::h3, over_r(I * a)).term(A::g3, iw).term(
          A::h2, -mass);
      e11.term(A::h1, eps).deriv(A::h1, I).term(A::h2, over_r(I * a)).term(A::f2, iw).term(
          A::h3, -mass);
      e12.term(A::h2, eps).deriv(A::h2, -I).term(A::h1, over_r(-I * a)).term(A::g1, miw).term(
          A::h4, -mass);
      sys.eqs = {e1.eq, e2.eq, e3.eq, e4.eq,  e5.eq,  e6.eq,
                 e7.eq, e8.eq, e9.eq, e10.eq, e11.eq, e12.eq};
      break;
    }
    case Case::full_min: {
      sys.dim = 8;
      // vars: f2 f4 h1 h2 h3 h4 g1 g3
      sys.vars = {{"f2", 1}, {"f4", 3}, {"h1", 0}, {"h2", 1},
                  {"h3", 2}, {"h4", 3}, {"g1", 0}, {"g3", 2}};
      enum { F2, F4, H1, H2, H3, H4, G1, G3 };
      EqBuilder eA, eB, eC, eD, eE, eF, eG, eH;
      eA.term(F4, ep_plus).deriv(F4, I).term(H3, iw).term(F2, m_plus);
      eB.term(F2, ep_plus).deriv(F2, -I).term(H1, miw).term(F4, m_plus);
      eC.term(G3, ep_minus).deriv(G3, -I).term(H4, miw).term(G1, m_minus);
      eD.term(G1, ep_minus).deriv(G1, I).term(H2, iw).term(G3, m_minus);
      eE.term(H3, eps).deriv(H3, -I).term(H4, over_r(-I)).term(F4, miw).term(H1, -mass);
      eF.term(H4, eps).deriv(H4, I).term(H3, over_r(I)).term(G3, iw).term(H2, -mass);
      eG.term(H1, eps).deriv(H1, I).term(H2, over_r(I)).term(F2, iw).term(H3, -mass);
      eH.term(H2, eps).deriv(H2, -I).term(H1, over_r(-I)).term(G1, miw).term(H4, -mass);
      sys.eqs = {eA.eq, eB.eq, eC.eq, eD.eq, eE.eq, eF.eq, eG.eq, eH.eq};
      break;
    }
    case Case::reduced_W0:
    case Case::reduced_W: {
      sys.dim = 6;
      sys.vars = {{"f1", 0}, {"f2", 1}, {"f3", 2}, {"f4", 3}, {"h1", 0}, {"h2", 1}};
      enum { F1, F2, F3, F4, H1, H2 };
      const bool with_w = tag == Case::reduced_W;
      EqBuilder e1, e2, e3, e4, e5, e6;
      e1.term(F3, eps).deriv(F3, -I).term(F4, over_r(-I * b)).term(F1, -mass);
      e2.term(F4, eps).deriv(F4, I).term(F3, over_r(I * b)).term(F2, -mass);
      if (with_w) e2.term(H2, [prof, d](double r) { return I * d * std::sqrt(2.0) * prof.W(r) / r; });
      e3.term(F1, eps).deriv(F1, I).term(F2, over_r(I * b)).term(F3, -mass);
      e4.term(F2, eps).deriv(F2, -I).term(F1, over_r(-I * b)).term(F4, -mass);
      if (with_w) e4.term(H1, miw);
      e5.term(H2, eps).deriv(H2, -I).term(H1, over_r(-I * a)).term(H1, -d * mass);
      if (with_w) e5.term(F4, [prof, d](double r) { return -I * d * std::sqrt(2.0) * prof.W(r) / r; });
      e6.term(H1, eps).deriv(H1, I).term(H2, over_r(I * a)).term(H2, -d * mass);
      if (with_w) e6.term(F2, iw);
      sys.eqs = {e1.eq, e2.eq, e3.eq, e4.eq, e5.eq, e6.eq};
      break;
    }
    case Case::reduced_min_W0:
    case Case::reduced_min_W: {
      sys.dim = 4;
      sys.vars = {{"f2", 1}, {"f4", 3}, {"h1", 0}, {"h2", 1}};
      enum { F2, F4, H1, H2 };
      const bool with_w = tag == Case::reduced_min_W;
      EqBuilder e1, e2, e3, e4;
      e1.term(F4, eps).deriv(F4, I).term(F2, -mass);
      if (with_w) e1.term(H2, [prof, d](double r) { return I * d * std::sqrt(2.0) * prof.W(r) / r; });
      e2.term(F2, eps).deriv(F2, -I).term(F4, -mass);
      if (with_w) e2.term(H1, miw);
      e3.term(H2, eps).deriv(H2, -I).term(H1, over_r(-I)).term(H1, -d * mass);
      if (with_w) e3.term(F4, [prof, d](double r) { return -I * d * std::sqrt(2.0) * prof.W(r) / r; });
      e4.term(H1, eps).deriv(H1, I).term(H2, over_r(I)).term(H2, -d * mass);
      if (with_w) e4.term(F2, iw);
      sys.eqs = {e1.eq, e2.eq, e3.eq, e4.eq};
      break;
    }
  }
  return sys;
}

// ---- Dormand-Prince 5(4) -------------------------------------------------------

namespace {

struct DP5 {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  // b - b* (embedded 4th-order error coefficients), k7 = f(y5).
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
};

}  // namespace

Solution integrate(const RadialSystem& sys, double r0, double r1, const VecX& y0, double tol,
                   double fixed_step, double atol) {
  if (y0.size() != sys.dim) throw std::invalid_argument("integrate: initial vector size");
  if (!(tol > 0) && fixed_step == 0.0) throw std::invalid_argument("integrate: tol > 0 required");
  if (atol < 0) atol = tol * 1e-6;

  auto f = [&sys](double r, const VecX& y) -> VecX { return sys.M(r) * y; };
  const double dir = (r1 >= r0) ? 1.0 : -1.0;

  Solution sol;
  sol.tol = tol;

  double r = r0;
  VecX y = y0;
  VecX k1 = f(r, y);
  sol.r.push_back(r);
  sol.y.push_back(y);
  sol.yp.push_back(k1);

  double h = fixed_step > 0 ? dir * fixed_step : dir * std::min(std::abs(r1 - r0), 1e-2 * (1.0 + std::abs(r0)));

  while (dir * (r1 - r) > 0) {
    bool clamped = false;
    if (std::abs(h) > std::abs(r1 - r)) {
      h = r1 - r;
      clamped = true;
    }
    if (std::abs(h) < 1e-14 * (1.0 + std::abs(r))) {
      if (clamped) break;  // endpoint reached up to roundoff
      throw std::runtime_error("integrate: step underflow at r = " + std::to_string(r));
    }

    const VecX k2 = f(r + DP5::c2 * h, y + h * (DP5::a21 * k1));
    const VecX k3 = f(r + DP5::c3 * h, y + h * (DP5::a31 * k1 + DP5::a32 * k2));
    const VecX k4 = f(r + DP5::c4 * h, y + h * (DP5::a41 * k1 + DP5::a42 * k2 + DP5::a43 * k3));
    const VecX k5 = f(r + DP5::c5 * h,
                      y + h * (DP5::a51 * k1 + DP5::a52 * k2 + DP5::a53 * k3 + DP5::a54 * k4));
    const VecX k6 = f(r + h, y + h * (DP5::a61 * k1 + DP5::a62 * k2 + DP5::a63 * k3 +
                                      DP5::a64 * k4 + DP5::a65 * k5));
    const VecX y5 = y + h * (DP5::b1 * k1 + DP5::b3 * k3 + DP5::b4 * k4 + DP5::b5 * k5 +
                             DP5::b6 * k6);
    const VecX k7 = f(r + h, y5);

    if (fixed_step > 0) {
      r += h;
      y = y5;
      k1 = k7;
      ++sol.steps_accepted;
      sol.r.push_back(r);
      sol.y.push_back(y);
      sol.yp.push_back(k1);
      continue;
    }

    const VecX err = h * (DP5::e1 * k1 + DP5::e3 * k3 + DP5::e4 * k4 + DP5::e5 * k5 +
                          DP5::e6 * k6 + DP5::e7 * k7);
    // Max-norm error measure: zero components contribute nothing, so decoupled
    // blocks evolve bit-identically whether integrated jointly or alone.
    double errnorm = 0;
    for (int i = 0; i < sys.dim; ++i) {
      const double sc = atol + tol * std::max(std::abs(y(i)), std::abs(y5(i)));
      errnorm = std::max(errnorm, std::abs(err(i)) / sc);
    }

    if (errnorm <= 1.0) {
      r += h;
      y = y5;
      k1 = k7;
      ++sol.steps_accepted;
      sol.r.push_back(r);
      sol.y.push_back(y);
      sol.yp.push_back(k1);
    } else {
      ++sol.steps_rejected;
    }
    const double factor =
        errnorm > 0 ? std::clamp(0.9 * std::pow(errnorm, -0.2), 0.2, 5.0) : 5.0;
    h *= factor;
  }
  return sol;
}

VecX Solution::eval(double rq) const {
  if (r.empty()) throw std::runtime_error("Solution::eval: empty solution");
  const bool fwd = r.back() >= r.front();
  auto inside = [&](size_t k) {
    return fwd ? (r[k] <= rq && rq <= r[k + 1]) : (r[k + 1] <= rq && rq <= r[k]);
  };
  size_t k = 0;
  bool found = false;
  for (size_t i = 0; i + 1 < r.size(); ++i)
    if (inside(i)) {
      k = i;
      found = true;
      break;
    }
  if (!found) {
    if ((fwd && rq <= r.front()) || (!fwd && rq >= r.front())) return y.front();
    return y.back();
  }
  const double h = r[k + 1] - r[k];
  const double t = (rq - r[k]) / h;
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * y[k] + (t3 - 2 * t2 + t) * h * yp[k] +
         (-2 * t3 + 3 * t2) * y[k + 1] + (t3 - t2) * h * yp[k + 1];
}

double Solution::norm_sq() const {
  double acc = 0;
  for (size_t i = 0; i + 1 < r.size(); ++i)
    acc += 0.5 * std::abs(r[i + 1] - r[i]) * (y[i].squaredNorm() + y[i + 1].squaredNorm());
  return acc;
}

double pairing_drift(const RadialSystem& sys, const Solution& sol) {
  const Eigen::VectorXd d = sys.pairing_diagonal();
  auto q = [&](const VecX& y) {
    double s = 0;
    for (int i = 0; i < sys.dim; ++i) s += d(i) * std::norm(y(i));
    return s;
  };
  const double q0 = q(sol.y.front());
  const double scale = std::max(std::abs(q0), 1e-300);
  double drift = 0;
  for (const VecX& yk : sol.y) drift = std::max(drift, std::abs(q(yk) - q0) / scale);
  return drift;
}

// ---- Frobenius -------------------------------------------------------------------

FrobeniusStart frobenius_start(const RadialSystem& sys) {
  // r M(r) = M_{-1} + r M_0 + O(r^2); Richardson step removes the linear term.
  const double rs = 1e-7;
  FrobeniusStart out;
  const MatX f1 = rs * sys.M(rs);
  const MatX f2 = 2 * rs * sys.M(2 * rs);
  out.residue = 2.0 * f1 - f2;
  const MatX m0 = sys.M(rs) - out.residue / rs;

  Eigen::ComplexEigenSolver<MatX> es(out.residue);
  const MatX vecs = es.eigenvectors();
  {
    Eigen::JacobiSVD<MatX> svd(vecs);
    const double cond = svd.singularValues()(0) / svd.singularValues().tail(1)(0);
    out.defective = !(cond < 1e10);
  }

  for (int i = 0; i < sys.dim; ++i) {
    const cplx lam = es.eigenvalues()(i);
    if (lam.real() <= -0.5 + 1e-9) continue;  // not square-integrable at 0
    FrobeniusMode mode;
    mode.exponent = lam;
    mode.v = vecs.col(i).normalized();
    const MatX lhs = (lam + 1.0) * MatX::Identity(sys.dim, sys.dim) - out.residue;
    Eigen::FullPivLU<MatX> lu(lhs);
    if (lu.rank() < sys.dim) {
      mode.resonant = true;
      mode.c1 = VecX::Zero(sys.dim);
    } else {
      mode.c1 = lu.solve(m0 * mode.v);
    }
    out.regular.push_back(std::move(mode));
  }
  std::sort(out.regular.begin(), out.regular.end(),
            [](const FrobeniusMode& a, const FrobeniusMode& b) {
              return a.exponent.real() > b.exponent.real();
            });
  return out;
}

VecX FrobeniusStart::start(int mode, double r0) const {
  const FrobeniusMode& m = regular.at(mode);
  return std::pow(cplx(r0, 0.0), m.exponent) * (m.v + r0 * m.c1);
}

// ---- sector reduction and commutation --------------------------------------------

namespace {

MonopoleProfile monopole_only(const MonopoleProfile& p) {
  MonopoleProfile q = p;
  q.F = [](double) { return 0.0; };
  q.kappa = 0.0;
  return q;
}

// Full-system variable -> reduced-variable lift under the sector constraints
// (h3 = d h2, h4 = d h1, g_i = d (alpha/beta) f_{5-i}).
MatX sector_lift(Case full_tag, int delta, cplx alpha, cplx beta) {
  const cplx s = static_cast<double>(delta) * alpha / beta;
  const double d = delta;
  if (full_tag == Case::full_j) {
    MatX L = MatX::Zero(12, 6);
    for (int i = 0; i < 4; ++i) L(angular::f1 + i, i) = 1.0;
    L(angular::h1, 4) = 1.0;
    L(angular::h2, 5) = 1.0;
    L(angular::h3, 5) = d;
    L(angular::h4, 4) = d;
    L(angular::g1, 3) = s;
    L(angular::g2, 2) = s;
    L(angular::g3, 1) = s;
    L(angular::g4, 0) = s;
    return L;
  }
  // full_min vars: f2 f4 h1 h2 h3 h4 g1 g3 -> reduced f2 f4 h1 h2
  MatX L = MatX::Zero(8, 4);
  L(0, 0) = 1.0;
  L(1, 1) = 1.0;
  L(2, 2) = 1.0;
  L(3, 3) = 1.0;
  L(4, 3) = d;  // h3 = d h2
  L(5, 2) = d;  // h4 = d h1
  L(6, 1) = s;  // g1 = s f4
  L(7, 0) = s;  // g3 = s f2
  return L;
}

// Substituted equation as (value row, deriv row) in the reduced variables,
// normalized so the derivative coefficient is exactly 1.
struct SubRow {
  Eigen::RowVectorXcd val;
  int deriv_var = -1;
};

SubRow substitute(const ScalarEquation& eq, const MatX& lift, double r) {
  const int nred = static_cast<int>(lift.cols());
  Eigen::RowVectorXcd val = Eigen::RowVectorXcd::Zero(nred);
  Eigen::RowVectorXcd der = Eigen::RowVectorXcd::Zero(nred);
  for (const Term& t : eq.terms) {
    const cplx c = t.coeff(r);
    (t.deriv ? der : val) += c * lift.row(t.var);
  }
  SubRow row;
  int nz = 0;
  cplx dcoef;
  for (int k = 0; k < nred; ++k)
    if (der(k) != cplx{0.0, 0.0}) {
      ++nz;
      row.deriv_var = k;
      dcoef = der(k);
    }
  if (nz != 1) throw std::logic_error("substitute: expected a single derivative term");
  row.val = val / dcoef;
  return row;
}

SubRow reduced_row(const ScalarEquation& eq, int dim, double r) {
  MatX id = MatX::Identity(dim, dim);
  return substitute(eq, id, r);
}

}  // namespace

ReductionReport constraint_reduction_check(HalfInt j, int delta, cplx alpha,
                                           const MonopoleProfile& profile,
                                           const std::vector<double>& r_samples) {
  const bool minimal = j.twice == 1;
  Params p;
  p.j = j;
  p.delta = delta;
  p.alpha = alpha;
  p.profile = monopole_only(profile);
  const RadialSystem full = assemble(minimal ? Case::full_min : Case::full_j, p);

  // Duplicated pairs (primary member first) and the reduced equation each
  // primary member must reproduce.
  const std::vector<std::pair<int, int>> pairs =
      minimal ? std::vector<std::pair<int, int>>{{0, 3}, {1, 2}, {4, 7}, {5, 6}}
              : std::vector<std::pair<int, int>>{{0, 7}, {1, 6}, {2, 5}, {3, 4}, {8, 11}, {9, 10}};

  const bool w_zero = [&] {
    for (double r : {0.3, 1.0, 3.0, 7.0})
      if (std::abs(p.profile.W(r)) > 1e-13) return false;
    return true;
  }();

  Params pr = p;
  pr.alpha = w_zero ? alpha : cplx{1.0, 0.0};
  const RadialSystem red = assemble(
      minimal ? (w_zero ? Case::reduced_min_W0 : Case::reduced_min_W)
              : (w_zero ? Case::reduced_W0 : Case::reduced_W),
      pr);

  ReductionReport best;
  best.pair_inconsistency = std::numeric_limits<double>::infinity();
  for (const cplx beta : {cplx{1.0, 0.0}, cplx{-1.0, 0.0}}) {
    const MatX lift = sector_lift(full.tag, delta, alpha, beta);
    double mismatch = 0, match = 0;
    for (double r : r_samples) {
      for (const auto& [i1, i2] : pairs) {
        const SubRow a = substitute(full.eqs[i1], lift, r);
        const SubRow b = substitute(full.eqs[i2], lift, r);
        if (a.deriv_var != b.deriv_var)
          throw std::logic_error("constraint_reduction_check: pair derivative mismatch");
        mismatch = std::max(mismatch, (a.val - b.val).cwiseAbs().maxCoeff());
      }
      // primary members vs the reduced-system equations, matched by deriv var
      for (const auto& [i1, i2] : pairs) {
        const SubRow a = substitute(full.eqs[i1], lift, r);
        for (const ScalarEquation& req : red.eqs) {
          const SubRow b = reduced_row(req, red.dim, r);
          if (b.deriv_var == a.deriv_var)
            match = std::max(match, (a.val - b.val).cwiseAbs().maxCoeff());
        }
      }
    }
    if (mismatch < best.pair_inconsistency) {
      best.pair_inconsistency = mismatch;
      best.reduced_match = match;
      best.beta_used = beta;
    }
  }
  return best;
}

DichotomyReport commutation_dichotomy(const MonopoleProfile& profile, HalfInt j, cplx alpha,
                                      const std::vector<double>& r_samples) {
  const bool minimal = j.twice == 1;
  Params p;
  p.j = j;
  p.profile = monopole_only(profile);
  const RadialSystem full = assemble(minimal ? Case::full_min : Case::full_j, p);

  // slot map of the system variables into the 12-amplitude space
  std::vector<int> slots;
  if (minimal)
    slots = {angular::f2, angular::f4, angular::h1, angular::h2,
             angular::h3, angular::h4, angular::g1, angular::g3};
  else
    for (int i = 0; i < 12; ++i) slots.push_back(i);

  auto restricted_V = [&](cplx beta) {
    const Mat12 v12 = nsym::amplitude_matrix(alpha, beta, j);
    MatX v(full.dim, full.dim);
    for (int a = 0; a < full.dim; ++a)
      for (int b = 0; b < full.dim; ++b) v(a, b) = v12(slots[a], slots[b]);
    return v;
  };

  auto comm_norm = [&](const MatX& v) {
    double n = 0;
    for (double r : r_samples) {
      const MatX m = full.M(r);
      n = std::max(n, (m * v - v * m).cwiseAbs().maxCoeff());
    }
    return n;
  };

  DichotomyReport rep;
  rep.norm_beta_plus = comm_norm(restricted_V(cplx{1.0, 0.0}));
  rep.norm_beta_minus = comm_norm(restricted_V(cplx{-1.0, 0.0}));
  rep.min_norm = std::min(rep.norm_beta_plus, rep.norm_beta_minus);
  rep.commutes = rep.min_norm < 1e-12;
  return rep;
}

// ---- mode search -----------------------------------------------------------------

namespace {

struct ShootingPieces {
  std::vector<Solution> reg;  // r0 -> r_mid
  std::vector<Solution> dec;  // rmax -> r_mid
  MatX matching;              // columns [reg | dec] at r_mid, normalized
};

ShootingPieces shoot(const RadialSystem& sys, double r0, double r_mid, double rmax, double tol) {
  ShootingPieces out;
  const FrobeniusStart fs = frobenius_start(sys);
  int n_reg = static_cast<int>(fs.regular.size());

  Eigen::ComplexEigenSolver<MatX> es(sys.M(rmax));
  std::vector<int> dec_idx;
  for (int i = 0; i < sys.dim; ++i)
    if (es.eigenvalues()(i).real() < -1e-12) dec_idx.push_back(i);
  const int n_dec = static_cast<int>(dec_idx.size());
  // Limit-circle channels (degenerate zero exponents, e.g. the free j = 1/2
  // f block) make the square-integrable-at-0 space over-complete; keep the
  // largest exponents, a deterministic boundary-condition convention.
  if (n_reg > sys.dim - n_dec) n_reg = sys.dim - n_dec;
  if (n_reg + n_dec != sys.dim)
    throw std::runtime_error("find_modes: regular+decaying subspace split (" +
                             std::to_string(n_reg) + "+" + std::to_string(n_dec) +
                             ") does not span dim " + std::to_string(sys.dim));

  out.matching = MatX::Zero(sys.dim, sys.dim);
  for (int i = 0; i < n_reg; ++i) {
    VecX y0 = fs.start(i, r0);
    y0 /= y0.norm();
    out.reg.push_back(integrate(sys, r0, r_mid, y0, tol));
    VecX ym = out.reg.back().y.back();
    out.matching.col(i) = ym / ym.norm();
  }
  for (int i = 0; i < n_dec; ++i) {
    VecX z0 = es.eigenvectors().col(dec_idx[i]).normalized();
    out.dec.push_back(integrate(sys, rmax, r_mid, z0, tol));
    VecX zm = out.dec.back().y.back();
    out.matching.col(n_reg + i) = zm / zm.norm();
  }
  return out;
}

}  // namespace

ModeSearch find_modes(Case tag, const Params& base, double eps_lo, double eps_hi, double rmax,
                      double tol, int n_scan, double r0, double r_mid) {
  if (!(eps_hi > eps_lo)) throw std::invalid_argument("find_modes: bad epsilon range");
  ModeSearch out;

  auto det_at = [&](double eps) {
    Params p = base;
    p.epsilon = eps;
    const RadialSystem sys = assemble(tag, p);
    return shoot(sys, r0, r_mid, rmax, tol).matching.determinant();
  };

  out.scan.reserve(n_scan + 1);
  for (int k = 0; k <= n_scan; ++k) {
    const double eps = eps_lo + (eps_hi - eps_lo) * k / n_scan;
    out.scan.push_back({eps, det_at(eps)});
  }

  double dmax = 0;
  for (const ScanPoint& sp : out.scan) dmax = std::max(dmax, std::abs(sp.det));
  if (dmax == 0) return out;
  const cplx anchor = out.scan.front().det / std::abs(out.scan.front().det);
  auto anchored = [&](cplx d) { return (std::conj(anchor) * d).real(); };

  for (size_t k = 0; k + 1 < out.scan.size(); ++k) {
    double s1 = anchored(out.scan[k].det), s2 = anchored(out.scan[k + 1].det);
    if (s1 == 0.0 || s1 * s2 >= 0.0) continue;
    double lo = out.scan[k].epsilon, hi = out.scan[k + 1].epsilon;
    cplx dlo = out.scan[k].det;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      const cplx dm = det_at(mid);
      if (anchored(dlo) * anchored(dm) <= 0.0)
        hi = mid;
      else {
        lo = mid;
        dlo = dm;
      }
    }
    const double eps_root = 0.5 * (lo + hi);
    const cplx droot = det_at(eps_root);
    if (std::abs(droot) > 1e-6 * dmax) continue;  // phase rotation, not a mode

    // Assemble the matched solution.
    Params p = base;
    p.epsilon = eps_root;
    const RadialSystem sys = assemble(tag, p);
    const ShootingPieces pieces = shoot(sys, r0, r_mid, rmax, tol);
    Eigen::JacobiSVD<MatX> svd(pieces.matching, Eigen::ComputeFullV);
    const VecX coef = svd.matrixV().col(sys.dim - 1);
    const int n_reg = static_cast<int>(pieces.reg.size());

    Mode mode;
    mode.epsilon = eps_root;
    mode.det_abs = std::abs(droot);

    Solution sol;
    sol.tol = tol;
    const std::vector<double> grid = quad::geometric_grid(r0, rmax, 400);
    for (double r : grid) {
      VecX y = VecX::Zero(sys.dim);
      if (r <= r_mid) {
        for (int i = 0; i < n_reg; ++i)
          y += coef(i) * pieces.reg[i].eval(r) / pieces.reg[i].y.back().norm();
      } else {
        for (size_t i = 0; i < pieces.dec.size(); ++i)
          y -= coef(n_reg + static_cast<int>(i)) * pieces.dec[i].eval(r) /
               pieces.dec[i].y.back().norm();
      }
      sol.r.push_back(r);
      sol.y.push_back(y);
      sol.yp.push_back(sys.M(r) * y);
    }
    const double scale = std::max(1e-300, std::sqrt(sol.norm_sq()));
    for (auto& yk : sol.y) yk /= scale;
    for (auto& yk : sol.yp) yk /= scale;

    mode.norm = 1.0;
    mode.ode_residual = svd.singularValues()(sys.dim - 1);
    mode.solution = std::move(sol);
    out.modes.push_back(std::move(mode));
  }
  std::sort(out.modes.begin(), out.modes.end(),
            [](const Mode& a, const Mode& b) { return a.epsilon < b.epsilon; });
  return out;
}

}  // namespace isomono::radial
