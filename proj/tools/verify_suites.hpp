#pragma once

#include <string>
#include <vector>

#include "isomono/gauges.hpp"
#include "isomono/half_int.hpp"

namespace isomono::verify {

struct Check {
  std::string name;
  double residual = 0;
  double tolerance = 0;
  bool invert = false;  // check asserts residual > tolerance (non-commutation style)
  bool pass() const { return invert ? residual > tolerance : residual <= tolerance; }
};

struct SuiteOptions {
  gauges::MonopoleProfile profile;
  cplx alpha{1.0, 0.0};
  bool have_alpha = false;
};

std::vector<Check> suite_wigner();
std::vector<Check> suite_algebra();
std::vector<Check> suite_gauges(const SuiteOptions& opt);
std::vector<Check> suite_discrete(const SuiteOptions& opt);
std::vector<Check> suite_radial(const SuiteOptions& opt);
std::vector<Check> suite_matelem();

std::vector<std::string> suite_names();
std::vector<Check> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace isomono::verify
