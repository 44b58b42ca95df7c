// isomono -- command-line front end: verification suites, radial spectra,
// matrix elements, gauge tables.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "isomono/io.hpp"
#include "isomono/matelem.hpp"
#include "isomono/nsym.hpp"
#include "isomono/quadrature.hpp"
#include "isomono/radial.hpp"
#include "verify_suites.hpp"

using json = nlohmann::ordered_json;
using namespace isomono;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

gauges::MonopoleProfile parse_profile(const std::string& spec, double e, double kappa) {
  if (spec.rfind("files:", 0) == 0) {
    // files:K=path[,F=path][,Phi=path]
    std::string rest = spec.substr(6);
    std::string kp, fp, pp;
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      const std::string part = rest.substr(pos, comma - pos);
      const size_t eq = part.find('=');
      if (eq == std::string::npos) throw CLI::ValidationError("--profile", "expected key=path");
      const std::string key = part.substr(0, eq), path = part.substr(eq + 1);
      if (key == "K") kp = path;
      else if (key == "F") fp = path;
      else if (key == "Phi") pp = path;
      else throw CLI::ValidationError("--profile", "unknown component '" + key + "'");
      pos = comma + 1;
    }
    return gauges::profile_from_tables(kp, fp, pp, e, kappa);
  }
  return gauges::builtin_profile(spec, e, kappa);
}

std::string config_string(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string s;
  for (const auto& [k, v] : kv) s += k + "=" + v + ";";
  return s;
}

matelem::Observable parse_observable(const std::string& spec) {
  matelem::Observable g;
  g.name = spec;
  if (spec == "identity") return g;
  if (spec == "t3") {
    g.iso = iso3::t3();
    return g;
  }
  if (spec == "t0") {
    g.iso = iso3::t0_projector();
    return g;
  }
  if (spec == "pseudoscalar") {
    g.bisp = bisp::gamma5();
    return g;
  }
  // otherwise a JSON file
  std::ifstream in(spec);
  if (!in) throw CLI::ValidationError("--observable", "cannot open '" + spec + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--observable", std::string("malformed JSON: ") + e.what());
  }
  auto load_matrix = [&](const json& node, int n) -> Eigen::MatrixXcd {
    Eigen::MatrixXcd m(n, n);
    if (!node.is_array() || static_cast<int>(node.size()) != n)
      throw CLI::ValidationError("--observable", "matrix must be " + std::to_string(n) + " rows");
    for (int r = 0; r < n; ++r) {
      const json& row = node[r];
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw CLI::ValidationError("--observable",
                                   "row " + std::to_string(r) + " must have " +
                                       std::to_string(n) + " entries");
      for (int c = 0; c < n; ++c) {
        const json& cell = row[c];
        if (cell.is_number())
          m(r, c) = cplx(cell.get<double>(), 0.0);
        else if (cell.is_array() && cell.size() == 2)
          m(r, c) = cplx(cell[0].get<double>(), cell[1].get<double>());
        else if (cell.is_string())
          m(r, c) = io::parse_complex(cell.get<std::string>());
        else
          throw CLI::ValidationError("--observable", "bad matrix entry at row " +
                                                         std::to_string(r) + " col " +
                                                         std::to_string(c));
      }
    }
    return m;
  };
  if (j.contains("iso")) {
    if (j["iso"].is_string()) {
      const std::string t = j["iso"].get<std::string>();
      if (t == "id") g.iso = Mat3::Identity();
      else if (t == "t1") g.iso = iso3::t1();
      else if (t == "t2") g.iso = iso3::t2();
      else if (t == "t3") g.iso = iso3::t3();
      else if (t == "t0") g.iso = iso3::t0_projector();
      else throw CLI::ValidationError("--observable", "unknown iso tag '" + t + "'");
    } else {
      g.iso = load_matrix(j["iso"], 3);
    }
  }
  if (j.contains("bisp")) {
    if (j["bisp"].is_string()) {
      const std::string t = j["bisp"].get<std::string>();
      if (t == "id") g.bisp = Mat4::Identity();
      else if (t == "gamma0") g.bisp = bisp::gamma(0);
      else if (t == "gamma5") g.bisp = bisp::gamma5();
      else throw CLI::ValidationError("--observable", "unknown bisp tag '" + t + "'");
    } else {
      g.bisp = load_matrix(j["bisp"], 4);
    }
  }
  if (j.contains("radial")) {
    const std::string t = j["radial"].get<std::string>();
    if (t == "one") {
    } else if (t == "exp") {
      g.radial = [](double r) { return std::exp(-r); };
    } else if (t.rfind("power:", 0) == 0) {
      const double n = std::stod(t.substr(6));
      g.radial = [n](double r) { return std::pow(r, n); };
    } else {
      throw CLI::ValidationError("--observable", "unknown radial tag '" + t + "'");
    }
  }
  if (j.contains("angular")) {
    const std::string t = j["angular"].get<std::string>();
    if (t == "one") {
    } else if (t == "cos_theta") {
      g.angular = [](double th, double) { return cplx(std::cos(th), 0.0); };
    } else if (t == "cos2_theta") {
      g.angular = [](double th, double) { return cplx(std::cos(th) * std::cos(th), 0.0); };
    } else if (t == "sin2_theta") {
      g.angular = [](double th, double) { return cplx(std::sin(th) * std::sin(th), 0.0); };
    } else {
      throw CLI::ValidationError("--observable", "unknown angular tag '" + t + "'");
    }
  }
  if (j.contains("hermitian")) g.hermitian = j["hermitian"].get<bool>();
  return g;
}

angular::RadialAmp default_amp(double center, double width, cplx scale) {
  return [=](double r) { return scale * std::exp(-(r - center) * (r - center) / (2 * width)); };
}

angular::TripletState demo_sector_state(HalfInt j, HalfInt m, int delta, cplx A, cplx B) {
  if (j.twice == 1)
    return angular::sector_state(0.0, j, m, delta, A, B, {}, default_amp(2.5, 1.1, {1.0, 0.2}),
                                 {}, default_amp(3.0, 0.9, {0.6, -0.4}),
                                 default_amp(2.0, 1.3, {0.8, 0.1}),
                                 default_amp(3.5, 0.8, {-0.5, 0.7}));
  return angular::sector_state(0.0, j, m, delta, A, B, default_amp(2.0, 1.0, {1.0, 0.3}),
                               default_amp(2.5, 1.2, {-0.4, 0.6}),
                               default_amp(3.0, 0.7, {0.7, 0.0}),
                               default_amp(3.5, 1.4, {0.2, -0.8}),
                               default_amp(2.2, 0.9, {0.9, 0.5}),
                               default_amp(2.8, 1.1, {-0.6, 0.2}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isotriplet fermions in SU(2) monopole backgrounds"};
  app.require_subcommand(1);

  std::string profile_spec = "trivial";
  double e_coupling = 1.0, kappa = 0.0;
  std::string A_str = "0", B_str = "0", alpha_str;
  int twoj = 3, twom = 1, delta = 1;
  double tol = 1e-10;
  std::string out_dir = ".";
  std::string format = "csv";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--profile", profile_spec, "trivial | bps:<mu> | files:K=..[,F=..][,Phi=..]");
    cmd->add_option("--e-coupling", e_coupling, "gauge coupling e");
    cmd->add_option("--kappa", kappa, "Higgs coupling kappa");
    cmd->add_option("--A", A_str, "A parameter, complex a+bi");
    cmd->add_option("--B", B_str, "B parameter, complex a+bi");
    cmd->add_option("--alpha", alpha_str, "alpha = e^{iA} directly, complex a+bi");
    cmd->add_option("--twoj", twoj, "2j");
    cmd->add_option("--twom", twom, "2m");
    cmd->add_option("--delta", delta, "sector delta (+1 or -1)");
    cmd->add_option("--tol", tol, "numeric tolerance");
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand("verify", "run module verification suites");
  std::string suite = "all";
  cmd_verify->add_option("--suite", suite, "wigner|algebra|gauges|discrete|radial|matelem|all");
  add_common(cmd_verify);

  // ---- spectrum ----
  auto* cmd_spectrum = app.add_subcommand("spectrum", "assemble/integrate radial systems");
  std::string case_str = "reduced_W0";
  double mass = 0.5, eps_lo = 0.0, eps_hi = 0.0, rmax = 0.0;
  int n_scan = 60;
  cmd_spectrum->add_option("--case", case_str,
                           "full_j|full_min|reduced_W0|reduced_W|reduced_min_W0|reduced_min_W");
  cmd_spectrum->add_option("--mass", mass, "fermion mass m");
  cmd_spectrum->add_option("--eps-lo", eps_lo, "scan lower bound");
  cmd_spectrum->add_option("--eps-hi", eps_hi, "scan upper bound");
  cmd_spectrum->add_option("--rmax", rmax, "outer radius (default 20/max(m,mu))");
  cmd_spectrum->add_option("--n-scan", n_scan, "scan points");
  add_common(cmd_spectrum);

  // ---- matelem ----
  auto* cmd_matelem = app.add_subcommand("matelem", "matrix elements and selection rules");
  std::string observable = "identity";
  int twojp = 3, twomp = 1, deltap = -1;
  cmd_matelem->add_option("--observable", observable,
                          "identity|t3|t0|pseudoscalar or a JSON spec file");
  cmd_matelem->add_option("--twojp", twojp, "2j of the ket");
  cmd_matelem->add_option("--twomp", twomp, "2m of the ket");
  cmd_matelem->add_option("--deltap", deltap, "ket sector delta");
  add_common(cmd_matelem);

  // ---- gauge-table ----
  auto* cmd_gauge = app.add_subcommand("gauge-table", "tabulate monopole potentials per frame");
  int n_r = 8, n_th = 5;
  cmd_gauge->add_option("--n-r", n_r, "radial samples");
  cmd_gauge->add_option("--n-theta", n_th, "polar samples");
  add_common(cmd_gauge);

  CLI11_PARSE(app, argc, argv);

  try {
    const gauges::MonopoleProfile profile = parse_profile(profile_spec, e_coupling, kappa);
    const cplx A = io::parse_complex(A_str);
    const cplx B = io::parse_complex(B_str);
    cplx alpha = std::exp(cplx(0, 1) * A);
    bool have_alpha = A_str != "0";
    if (!alpha_str.empty()) {
      alpha = io::parse_complex(alpha_str);
      have_alpha = true;
    }
    std::filesystem::create_directories(out_dir);

    if (*cmd_verify) {
      verify::SuiteOptions opt;
      opt.profile = profile;
      opt.alpha = alpha;
      opt.have_alpha = have_alpha;
      std::vector<std::string> names;
      if (suite == "all")
        names = verify::suite_names();
      else {
        const auto known = verify::suite_names();
        if (std::find(known.begin(), known.end(), suite) == known.end()) {
          std::cerr << "error: unknown suite '" << suite << "'\n";
          return kExitUsage;
        }
        names = {suite};
      }
      bool all_pass = true;
      for (const std::string& name : names) {
        const auto checks = verify::run_suite(name, opt);
        for (const auto& c : checks) {
          const bool ok = c.pass();
          all_pass = all_pass && ok;
          std::printf("%-40s %12.3e %s %8.1e   %s\n", c.name.c_str(), c.residual,
                      c.invert ? ">" : "<=", c.tolerance, ok ? "PASS" : "FAIL");
        }
      }
      return all_pass ? 0 : 1;
    }

    if (*cmd_spectrum) {
      radial::Case tag;
      if (case_str == "full_j") tag = radial::Case::full_j;
      else if (case_str == "full_min") tag = radial::Case::full_min;
      else if (case_str == "reduced_W0") tag = radial::Case::reduced_W0;
      else if (case_str == "reduced_W") tag = radial::Case::reduced_W;
      else if (case_str == "reduced_min_W0") tag = radial::Case::reduced_min_W0;
      else if (case_str == "reduced_min_W") tag = radial::Case::reduced_min_W;
      else {
        std::cerr << "error: unknown case '" << case_str << "'\n";
        return kExitUsage;
      }
      radial::Params p;
      p.mass = mass;
      p.j = HalfInt{twoj};
      p.delta = delta;
      p.alpha = alpha;
      p.profile = profile;

      if (eps_hi <= eps_lo) {
        eps_lo = -0.9 * mass;
        eps_hi = 0.9 * mass;
      }
      double mu = 1.0;
      if (profile_spec.rfind("bps:", 0) == 0) mu = std::stod(profile_spec.substr(4));
      if (rmax <= 0) rmax = 20.0 / std::max(std::abs(mass), std::abs(mu));

      const std::string cfg = config_string({{"cmd", "spectrum"},
                                             {"case", case_str},
                                             {"profile", profile_spec},
                                             {"mass", io::format_double(mass)},
                                             {"twoj", std::to_string(twoj)},
                                             {"delta", std::to_string(delta)},
                                             {"alpha", io::format_complex(alpha)},
                                             {"eps_lo", io::format_double(eps_lo)},
                                             {"eps_hi", io::format_double(eps_hi)},
                                             {"rmax", io::format_double(rmax)},
                                             {"tol", io::format_double(tol)}});
      const std::string hash = io::hash_hex(cfg);

      // a representative integrated solution from the leading regular mode
      p.epsilon = 0.5 * (eps_lo + eps_hi);
      const auto sys = radial::assemble(tag, p);
      const auto fs = radial::frobenius_start(sys);
      const auto sol = radial::integrate(sys, 1e-3, rmax, fs.start(0, 1e-3), tol);
      io::export_solution_csv(out_dir + "/solutions.csv", sys, sol, hash);

      const auto search = radial::find_modes(tag, p, eps_lo, eps_hi, rmax,
                                             std::max(tol, 1e-11), n_scan);
      json modes = json::object();
      modes["schema"] = 1;
      modes["config"] = hash;
      modes["tol"] = tol;
      modes["case"] = case_str;
      modes["modes"] = json::array();
      for (const auto& m : search.modes)
        modes["modes"].push_back({{"epsilon", m.epsilon},
                                  {"det_abs", m.det_abs},
                                  {"residual", m.ode_residual},
                                  {"norm", m.norm}});
      modes["determinant_trace"] = json::array();
      for (const auto& sp : search.scan)
        modes["determinant_trace"].push_back(
            {{"epsilon", sp.epsilon}, {"re", sp.det.real()}, {"im", sp.det.imag()}});
      std::ofstream mf(out_dir + "/modes.json", std::ios::binary);
      if (!mf) return kExitIo;
      mf << modes.dump(2) << "\n";
      std::cout << "wrote " << out_dir << "/solutions.csv and modes.json ("
                << search.modes.size() << " modes)\n";
      return 0;
    }

    if (*cmd_matelem) {
      matelem::Observable g;
      try {
        g = parse_observable(observable);
      } catch (const CLI::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
      }
      if (g.hermitian && matelem::hermiticity_defect(g) > 1e-12) {
        std::cerr << "error: observable declared Hermitian but is not\n";
        return kExitUsage;
      }

      const auto bra = demo_sector_state(HalfInt{twoj}, HalfInt{twom}, delta, A, B);
      const auto ket = demo_sector_state(HalfInt{twojp}, HalfInt{twomp}, deltap, A, B);
      const auto pc = matelem::classify_parity(g, A);
      std::vector<matelem::SelectionRow> rows;
      if (pc.omega != 0) {
        rows = matelem::selection_rule_check(g, A, {{bra, ket}, {bra, bra}});
      } else {
        // no definite N_A parity (e.g. complex A): report values descriptively
        for (const auto& [b, k] :
             std::vector<std::pair<const angular::TripletState*, const angular::TripletState*>>{
                 {&bra, &ket}, {&bra, &bra}}) {
          matelem::SelectionRow row;
          row.j_bra = b->j;
          row.j_ket = k->j;
          row.delta_bra = b->delta;
          row.delta_ket = k->delta;
          row.omega = 0;
          row.factor = cplx{0.0, 0.0};
          row.value = matelem::matrix_element(*b, g, *k);
          row.half_value =
              matelem::matrix_element(*b, g, *k, {}, matelem::Domain::half_space);
          row.scale = matelem::matrix_element_scale(*b, g, *k);
          row.verdict = "unclassified";
          row.pass = true;
          rows.push_back(std::move(row));
        }
      }

      const std::string cfg = config_string({{"cmd", "matelem"},
                                             {"observable", observable},
                                             {"A", io::format_complex(A)},
                                             {"B", io::format_complex(B)},
                                             {"twoj", std::to_string(twoj)},
                                             {"twojp", std::to_string(twojp)},
                                             {"delta", std::to_string(delta)},
                                             {"deltap", std::to_string(deltap)}});
      const std::string hash = io::hash_hex(cfg);
      const cplx eAA = std::exp(cplx(0, 1) * (A - std::conj(A)));

      if (format == "csv") {
        io::CsvWriter csv(out_dir + "/matelem.csv", hash, {"observable: " + g.name});
        csv.columns({"J", "Jp", "delta", "deltap", "Omega", "factor", "value_re", "value_im",
                     "half_re", "half_im", "verdict", "exp_i_A_minus_Astar"});
        for (const auto& row : rows)
          csv.row({row.j_bra.str(), row.j_ket.str(), std::to_string(row.delta_bra),
                   std::to_string(row.delta_ket), std::to_string(row.omega),
                   io::format_complex(row.factor), io::format_double(row.value.real()),
                   io::format_double(row.value.imag()), io::format_double(row.half_value.real()),
                   io::format_double(row.half_value.imag()), row.verdict,
                   io::format_double(std::abs(eAA))});
      } else {
        json out = json::object();
        out["schema"] = 1;
        out["config"] = hash;
        out["observable"] = g.name;
        out["exp_i_A_minus_Astar"] = std::abs(eAA);
        out["rows"] = json::array();
        for (const auto& row : rows)
          out["rows"].push_back({{"J", row.j_bra.str()},
                                 {"Jp", row.j_ket.str()},
                                 {"delta", row.delta_bra},
                                 {"deltap", row.delta_ket},
                                 {"Omega", row.omega},
                                 {"factor_re", row.factor.real()},
                                 {"factor_im", row.factor.imag()},
                                 {"value_re", row.value.real()},
                                 {"value_im", row.value.imag()},
                                 {"verdict", row.verdict},
                                 {"pass", row.pass}});
        std::ofstream jf(out_dir + "/matelem.json", std::ios::binary);
        if (!jf) return kExitIo;
        jf << out.dump(2) << "\n";
      }
      std::cout << "wrote " << out_dir << "/matelem." << format << "\n";
      return 0;
    }

    if (*cmd_gauge) {
      const std::string cfg = config_string(
          {{"cmd", "gauge-table"}, {"profile", profile_spec}, {"n_r", std::to_string(n_r)}});
      const std::string hash = io::hash_hex(cfg);
      io::CsvWriter csv(out_dir + "/gauge_table.csv", hash, {"profile: " + profile_spec});
      std::vector<std::string> cols{"frame", "r", "theta", "phi", "component"};
      for (const char* a : {"1", "2", "3"}) {
        cols.push_back(std::string("re_") + a);
        cols.push_back(std::string("im_") + a);
      }
      csv.columns(cols);
      const std::array<std::pair<std::string, gauges::GaugePotential>, 3> pots{
          std::pair{std::string("cartesian"), gauges::hedgehog_potential(profile)},
          std::pair{std::string("dirac"), gauges::dirac_potential(profile)},
          std::pair{std::string("schwinger"), gauges::schwinger_potential(profile)}};
      const char* comp_names[5] = {"W_t", "W_r", "W_theta", "W_phi", "higgs"};
      for (const auto& [fname, pot] : pots) {
        for (int ir = 1; ir <= n_r; ++ir) {
          const double r = 0.5 * ir;
          for (int it = 1; it <= n_th; ++it) {
            const double th = M_PI * it / (n_th + 1);
            const double ph = 0.7;
            const auto comps = pot.at(r, th, ph);
            for (int c = 0; c < 5; ++c) {
              std::vector<std::string> row{fname, io::format_double(r), io::format_double(th),
                                           io::format_double(ph), comp_names[c]};
              for (int a = 0; a < 3; ++a) {
                row.push_back(io::format_double(comps[c](a).real()));
                row.push_back(io::format_double(comps[c](a).imag()));
              }
              csv.row(row);
            }
          }
        }
      }
      std::cout << "wrote " << out_dir << "/gauge_table.csv\n";
      return 0;
    }
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
