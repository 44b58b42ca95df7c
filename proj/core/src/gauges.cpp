#include "isomono/gauges.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace isomono::gauges {

namespace {

constexpr double kStringTol = 1e-6;

double x_over_sinh(double x) {
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + 7.0 * x2 * x2 / 360.0;
  }
  return x / std::sinh(x);
}

// (mu coth(mu r) - 1/r): regular at r = 0 (limit mu^2 r / 3).
double coth_term(double mu, double r) {
  const double x = mu * r;
  if (std::abs(x) < 1e-3) return mu * x * (1.0 / 3.0 - x * x / 45.0);
  return mu / std::tanh(x) - 1.0 / r;
}

}  // namespace

bool MonopoleProfile::F_is_zero(double r_probe) const {
  for (double r : {0.1 * r_probe, r_probe, 5.0 * r_probe})
    if (std::abs(F(r)) > 0.0) return false;
  return true;
}

MonopoleProfile builtin_profile(const std::string& spec, double e, double kappa) {
  MonopoleProfile p;
  p.e = e;
  p.kappa = kappa;
  p.name = spec;
  if (spec == "trivial") {
    p.K = [e](double r) { return -1.0 / (e * r * r); };  // W == 0
    p.F = [](double) { return 0.0; };
    p.Phi = [](double) { return 0.0; };
    return p;
  }
  if (spec.rfind("bps", 0) == 0) {
    double mu = 1.0;
    if (const auto pos = spec.find(':'); pos != std::string::npos)
      mu = std::stod(spec.substr(pos + 1));
    if (!(mu > 0)) throw std::invalid_argument("builtin_profile: bps needs mu > 0");
    p.K = [e, mu](double r) {
      // (W - 1)/(e r^2) with W = mu r / sinh(mu r).
      const double x = mu * r;
      if (std::abs(x) < 1e-3) {
        const double x2 = x * x;
        return mu * mu / e * (-1.0 / 6.0 + 7.0 * x2 / 360.0);
      }
      return (x_over_sinh(x) - 1.0) / (e * r * r);
    };
    p.F = [](double) { return 0.0; };
    p.Phi = [e, mu](double r) { return coth_term(mu, r) / (e * r); };
    return p;
  }
  throw std::invalid_argument("builtin_profile: unknown profile '" + spec + "'");
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const size_t n = x_.size();
  if (n < 3 || y_.size() != n) throw std::invalid_argument("CubicSpline: need >= 3 samples");
  for (size_t i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1])) throw std::invalid_argument("CubicSpline: x not increasing");
  // Natural spline: solve the tridiagonal system for second derivatives.
  std::vector<double> a(n, 0), b(n, 0), c(n, 0), d(n, 0);
  m_.assign(n, 0.0);
  b[0] = b[n - 1] = 1.0;
  for (size_t i = 1; i + 1 < n; ++i) {
    const double h0 = x_[i] - x_[i - 1], h1 = x_[i + 1] - x_[i];
    a[i] = h0 / 6.0;
    b[i] = (h0 + h1) / 3.0;
    c[i] = h1 / 6.0;
    d[i] = (y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0;
  }
  for (size_t i = 1; i < n; ++i) {
    const double w = a[i] / b[i - 1];
    b[i] -= w * c[i - 1];
    d[i] -= w * d[i - 1];
  }
  m_[n - 1] = d[n - 1] / b[n - 1];
  for (size_t i = n - 1; i-- > 0;) m_[i] = (d[i] - c[i] * m_[i + 1]) / b[i];
}

double CubicSpline::operator()(double x) const {
  const size_t n = x_.size();
  if (x <= x_.front()) {
    const double slope = (y_[1] - y_[0]) / (x_[1] - x_[0]);
    return y_[0] + slope * (x - x_[0]);
  }
  if (x >= x_.back()) {
    const double slope = (y_[n - 1] - y_[n - 2]) / (x_[n - 1] - x_[n - 2]);
    return y_[n - 1] + slope * (x - x_[n - 1]);
  }
  size_t lo = 0, hi = n - 1;
  while (hi - lo > 1) {
    const size_t mid = (lo + hi) / 2;
    (x_[mid] <= x ? lo : hi) = mid;
  }
  const double h = x_[hi] - x_[lo];
  const double t = (x - x_[lo]) / h;
  const double u = 1.0 - t;
  return u * y_[lo] + t * y_[hi] +
         h * h / 6.0 * ((u * u * u - u) * m_[lo] + (t * t * t - t) * m_[hi]);
}

CubicSpline load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_table: cannot open " + path);
  std::vector<double> x, y;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    double a, b;
    if (ss >> a >> b) {
      x.push_back(a);
      y.push_back(b);
    }
  }
  return CubicSpline(std::move(x), std::move(y));
}

MonopoleProfile profile_from_tables(const std::string& k_path, const std::string& f_path,
                                    const std::string& phi_path, double e, double kappa) {
  MonopoleProfile p;
  p.e = e;
  p.kappa = kappa;
  p.name = "custom";
  auto component = [](const std::string& path) -> RadialFn {
    if (path.empty()) return [](double) { return 0.0; };
    auto spline = std::make_shared<CubicSpline>(load_table(path));
    return [spline](double r) { return (*spline)(r); };
  };
  p.K = component(k_path);
  p.F = component(f_path);
  p.Phi = component(phi_path);
  return p;
}

std::string frame_name(Frame f) {
  switch (f) {
    case Frame::Cartesian: return "cartesian";
    case Frame::Dirac: return "dirac";
    case Frame::Schwinger: return "schwinger";
  }
  return "?";
}

namespace {

void check_string(Frame frame, double th) {
  if (frame == Frame::Dirac && th > M_PI - kStringTol)
    throw std::domain_error("gauge: evaluation on the Dirac string line theta = pi");
  if (frame == Frame::Schwinger && (th < kStringTol || th > M_PI - kStringTol))
    throw std::domain_error("gauge: evaluation on the Schwinger string line theta = 0 or pi");
}

}  // namespace

std::array<Vec3c, 5> GaugePotential::at(double r, double th, double ph) const {
  check_string(frame, th);
  return {W_t(r, th, ph), W_r(r, th, ph), W_th(r, th, ph), W_ph(r, th, ph), higgs(r, th, ph)};
}

GaugePotential hedgehog_potential(const MonopoleProfile& p) {
  GaugePotential g;
  g.frame = Frame::Cartesian;
  auto n = [](double th, double ph) {
    return Vec3c{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
  };
  g.W_t = [p, n](double r, double th, double ph) { return Vec3c(r * p.F(r) * n(th, ph)); };
  g.W_r = [](double, double, double) { return Vec3c::Zero().eval(); };
  g.W_th = [p](double r, double th, double ph) {
    // -K r^2 (e_theta x n) = K r^2 (-sin ph, +cos ph, 0)
    (void)th;
    return Vec3c{-p.K(r) * r * r * std::sin(ph), p.K(r) * r * r * std::cos(ph), 0.0};
  };
  g.W_ph = [p](double r, double th, double ph) {
    const double c = -p.K(r) * r * r * std::sin(th);
    return Vec3c{c * std::cos(th) * std::cos(ph), c * std::cos(th) * std::sin(ph),
                 -c * std::sin(th)};
  };
  g.higgs = [p, n](double r, double th, double ph) { return Vec3c(r * p.Phi(r) * n(th, ph)); };
  return g;
}

GaugePotential dirac_potential(const MonopoleProfile& p) {
  GaugePotential g;
  g.frame = Frame::Dirac;
  const double e = p.e;
  g.W_t = [p](double r, double, double) { return Vec3c{0.0, 0.0, r * p.F(r)}; };
  g.W_r = [](double, double, double) { return Vec3c::Zero().eval(); };
  g.W_th = [p](double r, double, double ph) {
    const double q = r * r * p.K(r) + 1.0 / p.e;  // = W/e
    return Vec3c{-q * std::sin(ph), q * std::cos(ph), 0.0};
  };
  g.W_ph = [p, e](double r, double th, double ph) {
    const double q = r * r * p.K(r) + 1.0 / p.e;
    return Vec3c{-q * std::sin(th) * std::cos(ph), -q * std::sin(th) * std::sin(ph),
                 (std::cos(th) - 1.0) / e};
  };
  g.higgs = [p](double r, double, double) { return Vec3c{0.0, 0.0, r * p.Phi(r)}; };
  return g;
}

GaugePotential schwinger_potential(const MonopoleProfile& p) {
  GaugePotential g;
  g.frame = Frame::Schwinger;
  const double e = p.e;
  g.W_t = [p](double r, double, double) { return Vec3c{0.0, 0.0, r * p.F(r)}; };
  g.W_r = [](double, double, double) { return Vec3c::Zero().eval(); };
  g.W_th = [p](double r, double, double) {
    return Vec3c{0.0, r * r * p.K(r) + 1.0 / p.e, 0.0};
  };
  g.W_ph = [p, e](double r, double th, double) {
    const double q = r * r * p.K(r) + 1.0 / p.e;
    return Vec3c{-q * std::sin(th), 0.0, std::cos(th) / e};
  };
  g.higgs = [p](double r, double, double) { return Vec3c{0.0, 0.0, r * p.Phi(r)}; };
  return g;
}

GibbsField gibbs_hedgehog_to_dirac() {
  GibbsField f;
  f.c = [](double, double th, double ph) {
    const double t = std::tan(0.5 * th);
    return Vec3c{t * std::sin(ph), -t * std::cos(ph), 0.0};
  };
  f.dc_dr = [](double, double, double) { return Vec3c::Zero().eval(); };
  f.dc_dth = [](double, double th, double ph) {
    const double sec2 = 0.5 / (std::cos(0.5 * th) * std::cos(0.5 * th));
    return Vec3c{sec2 * std::sin(ph), -sec2 * std::cos(ph), 0.0};
  };
  f.dc_dph = [](double, double th, double ph) {
    const double t = std::tan(0.5 * th);
    return Vec3c{t * std::cos(ph), t * std::sin(ph), 0.0};
  };
  return f;
}

GibbsField gibbs_dirac_to_schwinger() {
  GibbsField f;
  f.c = [](double, double, double ph) { return Vec3c{0.0, 0.0, -std::tan(0.5 * ph)}; };
  f.dc_dr = [](double, double, double) { return Vec3c::Zero().eval(); };
  f.dc_dth = [](double, double, double) { return Vec3c::Zero().eval(); };
  f.dc_dph = [](double, double, double ph) {
    const double sec2 = 0.5 / (std::cos(0.5 * ph) * std::cos(0.5 * ph));
    return Vec3c{0.0, 0.0, -sec2};
  };
  return f;
}

namespace {

Vec3c fd_derivative(const GibbsField& f, int coord, double r, double th, double ph) {
  const double h = 1e-6;
  auto eval = [&](double dr, double dth, double dph) { return f.c(r + dr, th + dth, ph + dph); };
  switch (coord) {
    case 0: return (eval(h, 0, 0) - eval(-h, 0, 0)) / (2 * h);
    case 1: return (eval(0, h, 0) - eval(0, -h, 0)) / (2 * h);
    default: return (eval(0, 0, h) - eval(0, 0, -h)) / (2 * h);
  }
}

}  // namespace

GaugePotential gauge_transform(const GaugePotential& w, const GibbsField& c, double e,
                               Frame new_frame) {
  GaugePotential out;
  out.frame = new_frame;

  auto transformed = [w, c, e](int alpha) {
    return [w, c, e, alpha](double r, double th, double ph) -> Vec3c {
      const Vec3c cv = c.c(r, th, ph);
      const cplx c2 = cv(0) * cv(0) + cv(1) * cv(1) + cv(2) * cv(2);
      if (std::abs(1.0 + c2) < 1e-14)
        throw std::domain_error("gauge_transform: singular gauge, 1 + c.c = 0");
      const Mat3 O = iso3::gibbs_rotation(cv);
      const Mat3 f = -2.0 / (1.0 + c2) * (Mat3::Identity() + iso3::cross_matrix(cv));

      Vec3c wv;
      Vec3c dc;
      switch (alpha) {
        case 0:
          wv = w.W_t(r, th, ph);
          dc = Vec3c::Zero();  // static backgrounds
          break;
        case 1:
          wv = w.W_r(r, th, ph);
          dc = c.dc_dr ? c.dc_dr(r, th, ph) : fd_derivative(c, 0, r, th, ph);
          break;
        case 2:
          wv = w.W_th(r, th, ph);
          dc = c.dc_dth ? c.dc_dth(r, th, ph) : fd_derivative(c, 1, r, th, ph);
          break;
        default:
          wv = w.W_ph(r, th, ph);
          dc = c.dc_dph ? c.dc_dph(r, th, ph) : fd_derivative(c, 2, r, th, ph);
          break;
      }
      return O * wv + (1.0 / e) * (f * dc);
    };
  };

  out.W_t = transformed(0);
  out.W_r = transformed(1);
  out.W_th = transformed(2);
  out.W_ph = transformed(3);
  out.higgs = [w, c](double r, double th, double ph) -> Vec3c {
    return iso3::gibbs_rotation(c.c(r, th, ph)) * w.higgs(r, th, ph);
  };
  return out;
}

double abelian_embedding_deviation(const MonopoleProfile& p, double r, double th, double ph) {
  const GaugePotential d = dirac_potential(p);
  const auto comps = d.at(r, th, ph);
  const Vec3c abelian_ph{0.0, 0.0, (std::cos(th) - 1.0) / p.e};
  double dev = 0.0;
  dev = std::max(dev, comps[0].cwiseAbs().maxCoeff());                 // W_t
  dev = std::max(dev, comps[1].cwiseAbs().maxCoeff());                 // W_r
  dev = std::max(dev, comps[2].cwiseAbs().maxCoeff());                 // W_th
  dev = std::max(dev, (comps[3] - abelian_ph).cwiseAbs().maxCoeff());  // W_ph
  return dev;
}

double radial_field_strength(const GaugePotential& w, double e, double r, double th, double ph) {
  const double h = 1e-6;
  const Vec3c dth_Wph = (w.W_ph(r, th + h, ph) - w.W_ph(r, th - h, ph)) / (2 * h);
  const Vec3c dph_Wth = (w.W_th(r, th, ph + h) - w.W_th(r, th, ph - h)) / (2 * h);
  const Vec3c wth = w.W_th(r, th, ph);
  const Vec3c wph = w.W_ph(r, th, ph);
  const Vec3c comm{wth(1) * wph(2) - wth(2) * wph(1), wth(2) * wph(0) - wth(0) * wph(2),
                   wth(0) * wph(1) - wth(1) * wph(0)};
  const Vec3c F = dth_Wph - dph_Wth + e * comm;
  return F.norm() / (r * r * std::sin(th));
}

Mat3 wavefunction_gauge_map(Frame from, Frame to, double theta, double phi) {
  if (from == to) throw std::invalid_argument("wavefunction_gauge_map: frames must differ");
  auto from_schwinger = [&](Frame f) -> Mat3 {
    switch (f) {
      case Frame::Dirac: return iso3::U_dirac(phi);
      case Frame::Cartesian: return iso3::U_cart(theta, phi);
      default: return Mat3::Identity();
    }
  };
  // Psi_f = M(f) Psi_S, so the from->to map is M(to) M(from)^-1.
  return from_schwinger(to) * from_schwinger(from).inverse();
}

}  // namespace isomono::gauges
