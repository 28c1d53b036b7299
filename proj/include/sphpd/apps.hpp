#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "sphpd/catalog.hpp"
#include "sphpd/verify.hpp"

namespace sphpd {

/// Raised when a Gram matrix cannot be factorized even after the jitter ladder.
class FactorizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Jitter tried after a failed factorization, as multiples of the mean diagonal.
inline constexpr double kJitterLadder[] = {1e-12, 1e-10, 1e-8};

struct Interpolant {
  KernelSpec spec;
  SpherePointSet nodes;
  std::vector<double> weights;
  double ridge = 0.0;
  double jitter = 0.0;  // absolute diagonal shift added by the ladder, 0 if none
};

/// Solves (K + ridge I) w = data with a Cholesky factorization. The kernel
/// must be valid and strict on S^d for the nodes' d; otherwise
/// std::invalid_argument names the validity rule.
Interpolant interpolate_fit(const KernelSpec& spec, const SpherePointSet& nodes,
                            const std::vector<double>& data, double ridge = 0.0);

/// sum_j w_j psi(great_circle(x, x_j)).
double interpolate_eval(const Interpolant& interp, const std::vector<double>& x);

struct FieldSample {
  KernelSpec spec;
  SpherePointSet points;
  Eigen::MatrixXd values;  // n_samples x n_points
  std::uint64_t seed = 0;
  double jitter = 0.0;
  bool used_ldlt = false;  // semidefinite Gram factorized as L D L^T
};

/// Draws L z with K = L L^T and z standard normal. Draw i uses its own
/// std::mt19937_64 seeded by std::seed_seq{seed, i}, so the output does not
/// depend on how draws are scheduled.
FieldSample simulate(const KernelSpec& spec, const SpherePointSet& pts, int n_samples,
                     std::uint64_t seed);

/// Least-squares slope of log(1 - psi(theta)) against log(theta) on a
/// log-spaced grid. Throws std::domain_error when 1 - psi vanishes on the grid.
double estimate_fractal_index(const KernelSpec& spec, double theta_min = 1e-4,
                              double theta_max = 1e-2, int n_grid = 20);

struct LocalizationRow {
  double theta;
  double psi1;  // phi_GC(sin(theta/2) / sin(c/2)): Gaspari-Cohn at chordal distance
  double psi2;  // phi_GC(theta / c): Gaspari-Cohn at great circle distance
};

std::vector<LocalizationRow> localization_compare(double c, const std::vector<double>& grid);

void write_localization_csv(std::ostream& out, const std::vector<LocalizationRow>& rows);
void write_field_csv(std::ostream& out, const FieldSample& sample);

}  // namespace sphpd
