#include "sphpd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sphpd {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitTol = 1e-9;

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

void require_unit(const std::vector<double>& x) {
  const double norm = std::sqrt(dot(x, x));
  if (!(std::abs(norm - 1.0) <= kUnitTol)) {
    throw std::invalid_argument("point is not a unit vector (norm " + std::to_string(norm) + ")");
  }
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string() : cell.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

SpherePointSet::SpherePointSet(int d) : d_(d) {
  if (d < 1) throw std::invalid_argument("sphere dimension must be at least 1");
}

void SpherePointSet::add(std::vector<double> x, std::string label) {
  if (static_cast<int>(x.size()) != d_ + 1) {
    throw std::invalid_argument("point needs " + std::to_string(d_ + 1) + " coordinates");
  }
  require_unit(x);
  const double norm = std::sqrt(dot(x, x));
  for (double& v : x) v /= norm;
  for (const auto& p : points_) {
    if (p == x) throw std::invalid_argument("points must be pairwise distinct");
  }
  points_.push_back(std::move(x));
  labels_.push_back(std::move(label));
}

double SpherePointSet::distance(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  return std::acos(std::clamp(dot(points_[i], points_[j]), -1.0, 1.0));
}

double great_circle(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("points have different dimensions");
  require_unit(x);
  require_unit(y);
  if (x == y) return 0.0;
  return std::acos(std::clamp(dot(x, y), -1.0, 1.0));
}

std::vector<double> from_lat_lon_deg(double lat_deg, double lon_deg) {
  if (!(lat_deg >= -90.0 && lat_deg <= 90.0)) throw std::invalid_argument("latitude outside [-90, 90]");
  if (!std::isfinite(lon_deg)) throw std::invalid_argument("longitude is not finite");
  const double lat = lat_deg * kPi / 180.0;
  const double lon = lon_deg * kPi / 180.0;
  return {std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon), std::sin(lat)};
}

std::string_view to_string(PointScheme scheme) {
  switch (scheme) {
    case PointScheme::uniform_random: return "uniform_random";
    case PointScheme::fibonacci_s2: return "fibonacci_s2";
    case PointScheme::equator: return "equator";
  }
  return "unknown";
}

std::optional<PointScheme> point_scheme_from_string(std::string_view text) {
  for (auto s : {PointScheme::uniform_random, PointScheme::fibonacci_s2, PointScheme::equator}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

SpherePointSet sample_points(int d, int n, PointScheme scheme, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("point count must be at least 1");
  SpherePointSet pts(d);
  switch (scheme) {
    case PointScheme::uniform_random: {
      std::mt19937_64 rng(seed);
      std::normal_distribution<double> normal;
      while (static_cast<int>(pts.size()) < n) {
        std::vector<double> x(static_cast<std::size_t>(d) + 1);
        double norm = 0.0;
        for (double& v : x) {
          v = normal(rng);
          norm += v * v;
        }
        norm = std::sqrt(norm);
        if (norm < 1e-12) continue;
        for (double& v : x) v /= norm;
        pts.add(std::move(x));
      }
      break;
    }
    case PointScheme::fibonacci_s2: {
      if (d != 2) throw std::invalid_argument("fibonacci_s2 needs d = 2");
      const double golden = kPi * (3.0 - std::sqrt(5.0));
      for (int i = 0; i < n; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / n;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * i;
        pts.add({r * std::cos(phi), r * std::sin(phi), z});
      }
      break;
    }
    case PointScheme::equator: {
      for (int i = 0; i < n; ++i) {
        std::vector<double> x(static_cast<std::size_t>(d) + 1, 0.0);
        x[0] = std::cos(2.0 * kPi * i / n);
        x[1] = std::sin(2.0 * kPi * i / n);
        pts.add(std::move(x));
      }
      break;
    }
  }
  return pts;
}

Eigen::MatrixXd gram_matrix(const KernelSpec& spec, const SpherePointSet& pts) {
  const auto n = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    k(i, i) = eval(spec, 0.0);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = eval(spec, pts.distance(i, j));
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return k;
}

GramReport gram_report(const Eigen::MatrixXd& gram, double tol) {
  GramReport r;
  r.n_points = static_cast<int>(gram.rows());
  r.tolerance_used = tol;
  if (r.n_points == 0) {
    r.psd = true;
    return r;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  r.min_eigenvalue = solver.eigenvalues().minCoeff();
  r.max_eigenvalue = solver.eigenvalues().maxCoeff();
  r.psd = r.min_eigenvalue >= -tol * r.n_points;
  return r;
}

GramReport gram_report(const KernelSpec& spec, const SpherePointSet& pts, double tol) {
  return gram_report(gram_matrix(spec, pts), tol);
}

WitnessSearch search_negative_gram(const KernelSpec& spec, int d, double threshold) {
  WitnessSearch search;
  for (int n : {16, 32, 64, 128, 256}) {
    search.tried.push_back(n);
    const auto report = gram_report(spec, sample_points(d, n, PointScheme::equator));
    if (report.min_eigenvalue < -threshold) {
      search.found = true;
      search.n_points = n;
      search.min_eigenvalue = report.min_eigenvalue;
      return search;
    }
    if (!search.found && (search.n_points == 0 || report.min_eigenvalue < search.min_eigenvalue)) {
      search.n_points = n;
      search.min_eigenvalue = report.min_eigenvalue;
    }
  }
  return search;
}

void write_points_csv(std::ostream& out, const SpherePointSet& pts, bool lat_lon) {
  if (lat_lon && pts.d() != 2) throw std::invalid_argument("lat_deg,lon_deg output needs d = 2");
  if (lat_lon) {
    out << "lat_deg,lon_deg\n";
    for (const auto& x : pts.points()) {
      const double lat = std::asin(std::clamp(x[2], -1.0, 1.0)) * 180.0 / kPi;
      const double lon = std::atan2(x[1], x[0]) * 180.0 / kPi;
      out << format_double(lat) << ',' << format_double(lon) << '\n';
    }
    return;
  }
  for (int k = 0; k <= pts.d(); ++k) out << (k ? "," : "") << 'x' << k;
  out << '\n';
  for (const auto& x : pts.points()) {
    for (std::size_t k = 0; k < x.size(); ++k) out << (k ? "," : "") << format_double(x[k]);
    out << '\n';
  }
}

SpherePointSet read_points_csv(std::istream& in) {
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    header = split_csv(line);
    break;
  }
  if (header.empty()) throw std::invalid_argument("point csv: missing header");
  const bool labelled = header.front() == "label";
  const std::vector<std::string> cols(header.begin() + (labelled ? 1 : 0), header.end());
  const bool lat_lon = cols == std::vector<std::string>{"lat_deg", "lon_deg"};
  if (!lat_lon) {
    if (cols.size() < 2) throw std::invalid_argument("point csv: need lat_deg,lon_deg or x0..xd columns");
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k] != "x" + std::to_string(k)) {
        throw std::invalid_argument("point csv: unexpected column '" + cols[k] + "'");
      }
    }
  }
  SpherePointSet pts(lat_lon ? 2 : static_cast<int>(cols.size()) - 1);
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    auto cells = split_csv(line);
    if (cells.size() != header.size()) {
      throw std::invalid_argument("point csv row " + std::to_string(row) + ": wrong column count");
    }
    std::string label = labelled ? cells.front() : std::string();
    std::vector<double> v;
    try {
      for (std::size_t k = labelled ? 1 : 0; k < cells.size(); ++k) v.push_back(std::stod(cells[k]));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("point csv row " + std::to_string(row) + ": unparseable number");
    }
    pts.add(lat_lon ? from_lat_lon_deg(v[0], v[1]) : v, std::move(label));
  }
  return pts;
}

}  // namespace sphpd
