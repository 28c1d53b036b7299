#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "sphpd/catalog.hpp"

namespace sphpd {

/// Points on S^d stored as unit vectors in R^{d+1}.
class SpherePointSet {
 public:
  explicit SpherePointSet(int d);

  /// Throws std::invalid_argument when the length is not d + 1 or the norm
  /// differs from 1 by more than 1e-9. The stored vector is renormalized.
  void add(std::vector<double> x, std::string label = {});

  int d() const { return d_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<double>& point(std::size_t i) const { return points_[i]; }
  const std::vector<std::vector<double>>& points() const { return points_; }
  const std::vector<std::string>& labels() const { return labels_; }

  double distance(std::size_t i, std::size_t j) const;

 private:
  int d_;
  std::vector<std::vector<double>> points_;
  std::vector<std::string> labels_;
};

/// arccos of the clamped inner product. Throws std::invalid_argument for
/// vectors of different length or norm off 1 by more than 1e-9.
double great_circle(const std::vector<double>& x, const std::vector<double>& y);

/// Unit vector on S^2 from latitude and longitude in degrees.
std::vector<double> from_lat_lon_deg(double lat_deg, double lon_deg);

enum class PointScheme { uniform_random, fibonacci_s2, equator };
std::string_view to_string(PointScheme scheme);
std::optional<PointScheme> point_scheme_from_string(std::string_view text);

/// uniform_random: normalized standard Gaussian vectors from std::mt19937_64
/// seeded with `seed`. fibonacci_s2: golden-angle spiral, d = 2 only.
/// equator: n equally spaced points on the great circle in the first two
/// coordinates.
SpherePointSet sample_points(int d, int n, PointScheme scheme, std::uint64_t seed = 0);

/// K_ij = psi(great_circle(x_i, x_j)); symmetric by construction.
Eigen::MatrixXd gram_matrix(const KernelSpec& spec, const SpherePointSet& pts);

struct GramReport {
  int n_points = 0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  bool psd = false;  // min_eigenvalue >= -tolerance_used * n_points
  double tolerance_used = 0.0;
};

GramReport gram_report(const KernelSpec& spec, const SpherePointSet& pts, double tol = 1e-10);
GramReport gram_report(const Eigen::MatrixXd& gram, double tol = 1e-10);

/// Searches equally spaced point sets on a great circle (n = 16 .. 256) for a
/// Gram matrix with min eigenvalue below -threshold. Equally spaced sets give
/// circulant Grams whose eigenvalues sample the Fourier transform of psi, so
/// a negative Fourier coefficient shows up once n resolves it.
struct WitnessSearch {
  bool found = false;
  int n_points = 0;
  double min_eigenvalue = 0.0;
  std::vector<int> tried;
};

WitnessSearch search_negative_gram(const KernelSpec& spec, int d, double threshold = 1e-6);

/// CSV point files: `lat_deg,lon_deg` (d = 2) or `x0,...,xd`. An optional
/// leading `label` column is kept.
void write_points_csv(std::ostream& out, const SpherePointSet& pts, bool lat_lon = false);
SpherePointSet read_points_csv(std::istream& in);

}  // namespace sphpd
