#include "isomono/io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace isomono::io {

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string format_complex(cplx z) {
  const std::string re = format_double(z.real());
  const std::string im = format_double(std::abs(z.imag()));
  return re + (z.imag() < 0 ? "-" : "+") + im + "i";
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(const std::string& s) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a(s)));
  return std::string(buf);
}

namespace {
std::string csv_quote(const std::string& f) {
  if (f.find_first_of(",\"\n") == std::string::npos) return f;
  std::string q = "\"";
  for (char c : f) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}
}  // namespace

CsvWriter::CsvWriter(const std::string& path, const std::string& config_hash,
                     const std::vector<std::string>& extra_header)
    : out_(path, std::ios::binary) {
  if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path);
  out_ << "# schema: 1\n";
  out_ << "# config: " << config_hash << "\n";
  for (const std::string& h : extra_header) out_ << "# " << h << "\n";
}

void CsvWriter::columns(const std::vector<std::string>& names) { row(names); }

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << csv_quote(fields[i]);
  }
  out_ << '\n';
}

void export_solution_csv(const std::string& path, const radial::RadialSystem& sys,
                         const radial::Solution& sol, const std::string& config_hash) {
  CsvWriter csv(path, config_hash,
                {"case: " + radial::case_name(sys.tag), "tol: " + format_double(sol.tol)});
  std::vector<std::string> header{"r"};
  for (const auto& v : sys.vars) {
    header.push_back("Re_" + v.name);
    header.push_back("Im_" + v.name);
  }
  csv.columns(header);
  for (size_t k = 0; k < sol.r.size(); ++k) {
    std::vector<std::string> row{format_double(sol.r[k])};
    for (int i = 0; i < sys.dim; ++i) {
      row.push_back(format_double(sol.y[k](i).real()));
      row.push_back(format_double(sol.y[k](i).imag()));
    }
    csv.row(row);
  }
}

cplx parse_complex(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_complex: empty");
  // forms: a, bi, a+bi, a-bi (also accepts 'j' for 'i')
  std::string t = s;
  const char tail = t.back();
  const bool has_i = tail == 'i' || tail == 'j';
  if (!has_i) {
    size_t pos = 0;
    const double re = std::stod(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("parse_complex: bad literal '" + s + "'");
    return {re, 0.0};
  }
  t.pop_back();
  // locate the split sign (not the leading sign, not an exponent sign)
  size_t split = std::string::npos;
  for (size_t k = 1; k < t.size(); ++k) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') split = k;
  }
  if (split == std::string::npos) {
    if (t.empty() || t == "+" || t == "-") t += "1";
    return {0.0, std::stod(t)};
  }
  const double re = std::stod(t.substr(0, split));
  std::string ims = t.substr(split);
  if (ims == "+" || ims == "-") ims += "1";
  return {re, std::stod(ims)};
}

}  // namespace isomono::io
