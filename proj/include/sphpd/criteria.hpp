#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sphpd/catalog.hpp"

namespace sphpd {

enum class Criterion { polya_circle, polya_s3, polya_2n1 };
enum class Satisfied { yes, no, inconclusive };

std::string_view to_string(Criterion criterion);
std::string_view to_string(Satisfied satisfied);

/// Outcome of a grid check of Polya-type hypotheses. A YES is evidence from a
/// finite grid, not a proof of convexity.
struct CriterionReport {
  Criterion criterion = Criterion::polya_circle;
  Satisfied satisfied = Satisfied::inconclusive;
  std::string implied_class;      // empty unless satisfied == yes
  std::vector<double> violations;  // grid points where a hypothesis fails
  int grid_size = 0;
  // polya_circle only: yes when psi is detected as not piecewise linear.
  Satisfied strictness = Satisfied::inconclusive;
  double tolerance = 0.0;  // absolute tolerance used for the convexity test
  std::vector<std::string> notes;
};

struct CircleOptions {
  int grid_size = 1000;
  double convexity_tol = 1e-9;  // relative to max |psi| on the grid
  double roundoff_tol = 1e-12;  // below this a second difference counts as zero
  double integral_tol = 1e-10;
};

/// Continuous, nonincreasing and convex on [0, pi] with psi(0) = 1 and a
/// nonnegative integral. YES implies Psi_1, and Psi_1^+ when psi is not
/// piecewise linear.
CriterionReport polya_circle(const std::function<double(double)>& psi,
                             const CircleOptions& options = {});

/// phi on [0, infinity) with derivatives. When `derivative` is empty the
/// derivatives come from central differences with step `fd_step`.
struct RadialProfile {
  std::function<double(double)> phi;
  std::function<double(int, double)> derivative;
  double fd_step = 1e-3;
  std::optional<double> scale;
  std::string label;
};

/// Profile of a catalog family with a Euclidean form; exact derivatives when
/// available, central differences otherwise. Throws std::invalid_argument for
/// families without one (derivative unavailable).
RadialProfile radial_profile(const KernelSpec& spec);

/// n-th derivative of the profile at t > 0.
double profile_derivative(const RadialProfile& profile, int order, double t);

struct RadialGridOptions {
  int grid_size = 400;
  double t_min_factor = 1e-3;     // smallest radius, times the scale (or 1)
  std::optional<double> horizon;  // default 50 * scale, or 100 without a scale
  double limit_tol = 1e-6;        // |phi(horizon)| must fall below this
  double convexity_tol = 1e-9;    // relative to max |g| on the grid
  double roundoff_tol = 1e-12;
};

/// -phi'(sqrt(t)) convex for t > 0 and phi -> 0. YES implies Psi_3^+.
CriterionReport polya_s3(const RadialProfile& profile, const RadialGridOptions& options = {});

/// (-1)^n phi^(n) convex for t > 0 and phi -> 0, n in {1, 2, 3}. YES implies
/// Psi_{2n+1}^+. Other n throw std::invalid_argument.
CriterionReport polya_2n1(const RadialProfile& profile, int n, const RadialGridOptions& options = {});

}  // namespace sphpd
