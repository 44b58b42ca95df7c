#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "isomono/algebra.hpp"

namespace isomono::gauges {

using RadialFn = std::function<double(double)>;

/// Monopole background data: radial profiles K, F, Phi and the couplings e,
/// kappa. The structure function is W(r) = e r^2 K(r) + 1; W == 0 is the
/// trivial (embedded Abelian) monopole, the regular hedgehog has W(0) = 1.
struct MonopoleProfile {
  RadialFn K;
  RadialFn F;
  RadialFn Phi;
  double e = 1.0;
  double kappa = 0.0;
  std::string name;

  double W(double r) const { return e * r * r * K(r) + 1.0; }
  bool F_is_zero(double r_probe = 1.0) const;
};

/// trivial | bps:<mu> | custom profiles loaded elsewhere.
/// bps(mu): W(r) = mu r / sinh(mu r), F = 0, Phi(r) = (mu coth(mu r) - 1/r)/(e r)
/// (a convenience profile; repo convention, exponentially W -> 0 at infinity).
MonopoleProfile builtin_profile(const std::string& spec, double e = 1.0, double kappa = 0.0);

/// Natural cubic spline through (x, y) samples; used for tabulated profiles.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y);
  double operator()(double x) const;

 private:
  std::vector<double> x_, y_, m_;
};

/// Two-column whitespace-separated (r, value) table.
CubicSpline load_table(const std::string& path);

/// Profile from tabulated K/F/Phi files (empty path = identically zero).
MonopoleProfile profile_from_tables(const std::string& k_path, const std::string& f_path,
                                    const std::string& phi_path, double e, double kappa);

enum class Frame { Cartesian, Dirac, Schwinger };
std::string frame_name(Frame f);

/// Isotopic-vector potential in spherical coordinates: components W^(a)_alpha
/// for alpha in {t, r, theta, phi}, each a complex 3-vector in the Cartesian
/// isotopic basis, plus the Higgs triplet Phi^(a). Evaluation near the string
/// line of a unitary frame (theta within 1e-6 of pi for Dirac, of 0 or pi for
/// Schwinger) throws rather than returning NaNs.
struct GaugePotential {
  Frame frame = Frame::Cartesian;
  std::function<Vec3c(double r, double th, double ph)> W_t, W_r, W_th, W_ph, higgs;

  std::array<Vec3c, 5> at(double r, double th, double ph) const;
};

/// Hedgehog (Cartesian-gauge) background of a profile:
/// W^(a)_i = -K(r) eps_{aib} x_b, W^(a)_t = r F(r) n_a, Higgs = r Phi(r) n_a.
GaugePotential hedgehog_potential(const MonopoleProfile& p);

/// Unitary-frame forms: Dirac (string along the negative axis reaching the
/// theta = pi line) and Schwinger (strings at both poles).
GaugePotential dirac_potential(const MonopoleProfile& p);
GaugePotential schwinger_potential(const MonopoleProfile& p);

/// Gibbs-vector field c(r,theta,phi) with optional analytic coordinate
/// derivatives; missing derivatives fall back to central differences
/// (step 1e-6).
struct GibbsField {
  std::function<Vec3c(double r, double th, double ph)> c;
  std::function<Vec3c(double r, double th, double ph)> dc_dr, dc_dth, dc_dph;
};

/// Rotation from the hedgehog to the Dirac frame (theta,phi-dependent) and
/// from Dirac to Schwinger (phi-dependent), with analytic derivatives.
GibbsField gibbs_hedgehog_to_dirac();
GibbsField gibbs_dirac_to_schwinger();

/// Non-Abelian gauge transformation law
///   W' = O(c) W + (1/e) f(c) dc,  f(c) = -2 (I + c^x)/(1 + c.c),
/// applied componentwise; the Higgs triplet just rotates. Throws if 1 + c.c
/// vanishes along the evaluation path.
GaugePotential gauge_transform(const GaugePotential& w, const GibbsField& c, double e,
                               Frame new_frame);

/// Largest deviation of the trivial-profile Dirac potential from the embedded
/// Abelian form (0, 0, A^D), A^D_phi = (1/e)(cos th - 1), at the given point.
/// Nonzero for genuinely non-Abelian profiles (reported, not an error).
double abelian_embedding_deviation(const MonopoleProfile& p, double r, double th, double ph);

/// Radial magnetic field strength magnitude |F^(a)_{theta phi}| / (r^2 sin th)
/// from the potential (derivatives by central differences plus the e W^W term).
double radial_field_strength(const GaugePotential& w, double e, double r, double th, double ph);

/// Wavefunction gauge map between isotopic frames in the cyclic basis
/// (Schwinger->Dirac: U(phi); Schwinger->Cartesian: U(theta,phi); remaining
/// pairs by composition/inversion).
Mat3 wavefunction_gauge_map(Frame from, Frame to, double theta, double phi);

}  // namespace isomono::gauges
