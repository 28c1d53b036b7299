#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "sphpd/schoenberg.hpp"

namespace sphpd {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void write_sequence_csv(std::ostream& out, const SchoenbergSequence& seq) {
  out << "#d=" << seq.d << '\n'
      << "#N=" << seq.truncation() << '\n'
      << "#quadrature_order=" << seq.quadrature_order << '\n'
      << "#source=" << to_string(seq.source) << '\n'
      << "n,b\n";
  for (int n = 0; n <= seq.truncation(); ++n) out << n << ',' << format_double(seq.coeffs[n]) << '\n';
}

SchoenbergSequence read_sequence_csv(std::istream& in) {
  SchoenbergSequence seq;
  seq.source = SequenceSource::direct_quadrature;
  int declared_n = -1;
  bool header = false;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("sequence csv line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = trim(line.substr(1, eq - 1));
      const std::string value = trim(line.substr(eq + 1));
      if (key == "source") {
        auto s = sequence_source_from_string(value);
        if (!s) fail("unknown source '" + value + "'");
        seq.source = *s;
        continue;
      }
      if (key != "d" && key != "N" && key != "quadrature_order") continue;
      int parsed = 0;
      try {
        parsed = std::stoi(value);
      } catch (const std::logic_error&) {
        fail("bad value for " + key);
      }
      if (key == "d") seq.d = parsed;
      if (key == "N") declared_n = parsed;
      if (key == "quadrature_order") seq.quadrature_order = parsed;
      continue;
    }
    if (!header) {
      if (line != "n,b") fail("expected header 'n,b'");
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) fail("expected 'n,b'");
    int n = 0;
    double b = 0.0;
    try {
      n = std::stoi(line.substr(0, comma));
      b = std::stod(line.substr(comma + 1));
    } catch (const std::logic_error&) {
      fail("unparseable row");
    }
    if (n != static_cast<int>(seq.coeffs.size())) fail("rows must be consecutive from n=0");
    seq.coeffs.push_back(b);
  }
  if (!header) throw std::invalid_argument("sequence csv: missing header 'n,b'");
  if (seq.d < 1) throw std::invalid_argument("sequence csv: dimension must be at least 1");
  if (declared_n >= 0 && declared_n != seq.truncation()) {
    throw std::invalid_argument("sequence csv: N does not match the number of rows");
  }
  return seq;
}

}  // namespace sphpd
