#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "isomono/radial.hpp"

namespace isomono::io {

/// Shortest round-trip decimal formatting (std::to_chars) for reproducible,
/// byte-identical output files.
std::string format_double(double x);
std::string format_complex(cplx z);  // "a+bi" / "a-bi"

/// FNV-1a 64-bit over the canonical config string.
std::uint64_t fnv1a(const std::string& s);
std::string hash_hex(const std::string& s);

/// CSV writer with RFC-4180-style quoting and a '#' header block carrying
/// schema version, config hash and tolerance settings.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& config_hash,
            const std::vector<std::string>& extra_header = {});
  void columns(const std::vector<std::string>& names);
  void row(const std::vector<std::string>& fields);
  bool good() const { return static_cast<bool>(out_); }

 private:
  std::ofstream out_;
};

/// solutions.csv: columns r, Re/Im of each amplitude.
void export_solution_csv(const std::string& path, const radial::RadialSystem& sys,
                         const radial::Solution& sol, const std::string& config_hash);

/// Parses "a+bi" / "a-bi" / "a" / "bi" complex literals (CLI syntax).
cplx parse_complex(const std::string& s);

}  // namespace isomono::io
