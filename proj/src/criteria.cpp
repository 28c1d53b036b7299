#include "sphpd/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "sphpd/quadrature.hpp"

namespace sphpd {

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

struct ConvexityScan {
  std::vector<double> violations;
  int near_misses = 0;
};

// Secant test on consecutive triples of a (possibly nonuniform) grid: the
// middle value may not exceed the chord by more than `tol`. Excess inside
// (band, tol] is counted as a near miss.
ConvexityScan scan_convexity(const std::vector<double>& x, const std::vector<double>& g, double tol,
                             double band) {
  ConvexityScan scan;
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    const double w = (x[i] - x[i - 1]) / (x[i + 1] - x[i - 1]);
    const double chord = (1.0 - w) * g[i - 1] + w * g[i + 1];
    const double excess = g[i] - chord;
    if (excess > tol) {
      scan.violations.push_back(x[i]);
    } else if (excess > band) {
      ++scan.near_misses;
    }
  }
  return scan;
}

std::vector<double> log_grid(double lo, double hi, int size) {
  std::vector<double> x(static_cast<std::size_t>(size));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < size; ++i) x[i] = std::exp(a + (b - a) * i / (size - 1));
  return x;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Rounding noise of a central difference of order n, relative to max |phi|.
double fd_noise(int order, double h) {
  return std::pow(2.0, order) * std::numeric_limits<double>::epsilon() / std::pow(h, order);
}

CriterionReport radial_check(const RadialProfile& profile, Criterion criterion, int order,
                             const RadialGridOptions& options) {
  if (!profile.phi) throw std::invalid_argument("radial profile has no phi");
  if (options.grid_size < 3) throw std::invalid_argument("grid_size must be at least 3");
  CriterionReport report;
  report.criterion = criterion;
  report.grid_size = options.grid_size;

  const double unit = profile.scale.value_or(1.0);
  const double horizon = options.horizon.value_or(profile.scale ? 50.0 * *profile.scale : 100.0);
  double r_min = options.t_min_factor * unit;
  // keep difference stencils on the positive half-line
  if (!profile.derivative) r_min = std::max(r_min, order * profile.fd_step);
  if (!(horizon > r_min)) throw std::invalid_argument("horizon must exceed the smallest radius");

  if (std::abs(profile.phi(0.0) - 1.0) > 1e-12) {
    report.satisfied = Satisfied::no;
    report.notes.push_back("phi(0) is not 1");
    return report;
  }

  // polya_s3 works in the squared variable s = r^2, polya_2n1 in r itself.
  std::vector<double> x;
  std::vector<double> g;
  if (criterion == Criterion::polya_s3) {
    x = log_grid(r_min * r_min, horizon * horizon, options.grid_size);
    for (double s : x) g.push_back(-profile_derivative(profile, 1, std::sqrt(s)));
  } else {
    x = log_grid(r_min, horizon, options.grid_size);
    const double sign = order % 2 == 0 ? 1.0 : -1.0;
    for (double r : x) g.push_back(sign * profile_derivative(profile, order, r));
  }
  for (double v : g) {
    if (!std::isfinite(v)) {
      report.satisfied = Satisfied::inconclusive;
      report.notes.push_back("derivative is not finite on the grid");
      return report;
    }
  }

  const double scale = std::max(max_abs(g), std::numeric_limits<double>::min());
  double tol = options.convexity_tol * scale;
  double band = options.roundoff_tol * scale;
  if (!profile.derivative) {
    // Central differences carry rounding noise; the second difference of the
    // derivative sees up to four times that.
    const double noise = 4.0 * fd_noise(criterion == Criterion::polya_s3 ? 1 : order, profile.fd_step);
    tol = std::max(tol, 10.0 * noise);
    band = std::max(band, noise);
    report.notes.push_back("derivatives by central differences, step " + std::to_string(profile.fd_step));
  }
  report.tolerance = tol;

  const auto scan = scan_convexity(x, g, tol, band);
  report.violations = scan.violations;
  const bool limit_ok = std::abs(profile.phi(horizon)) < options.limit_tol;
  if (!limit_ok) {
    report.notes.push_back("|phi| at the horizon " + std::to_string(horizon) + " is not below " +
                           std::to_string(options.limit_tol));
  }
  if (!scan.violations.empty()) {
    report.satisfied = Satisfied::no;
  } else if (scan.near_misses > 0 || !limit_ok) {
    report.satisfied = Satisfied::inconclusive;
    if (scan.near_misses > 0) {
      report.notes.push_back(std::to_string(scan.near_misses) + " convexity defects within tolerance of zero");
    }
  } else {
    report.satisfied = Satisfied::yes;
    report.implied_class = criterion == Criterion::polya_s3
                               ? "Psi_3^+"
                               : "Psi_" + std::to_string(2 * order + 1) + "^+";
  }
  return report;
}

}  // namespace

std::string_view to_string(Criterion criterion) {
  switch (criterion) {
    case Criterion::polya_circle: return "polya_circle";
    case Criterion::polya_s3: return "polya_s3";
    case Criterion::polya_2n1: return "polya_2n1";
  }
  return "unknown";
}

std::string_view to_string(Satisfied satisfied) {
  switch (satisfied) {
    case Satisfied::yes: return "YES";
    case Satisfied::no: return "NO";
    case Satisfied::inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

CriterionReport polya_circle(const std::function<double(double)>& psi, const CircleOptions& options) {
  if (options.grid_size < 3) throw std::invalid_argument("grid_size must be at least 3");
  CriterionReport report;
  report.criterion = Criterion::polya_circle;
  report.grid_size = options.grid_size;

  const int m = options.grid_size;
  std::vector<double> x(m);
  std::vector<double> y(m);
  for (int i = 0; i < m; ++i) {
    x[i] = kPi * i / (m - 1);
    y[i] = psi(x[i]);
  }
  if (std::abs(y[0] - 1.0) > 1e-12) {
    report.satisfied = Satisfied::no;
    report.notes.push_back("psi(0) is not 1");
    return report;
  }
  const double scale = std::max(max_abs(y), 1.0);
  const double tol = options.convexity_tol * scale;
  const double band = options.roundoff_tol * scale;
  report.tolerance = tol;

  int near_misses = 0;
  for (int i = 0; i + 1 < m; ++i) {
    const double rise = y[i + 1] - y[i];
    if (rise > tol) {
      report.violations.push_back(x[i + 1]);
    } else if (rise > band) {
      ++near_misses;
    }
  }
  if (!report.violations.empty()) report.notes.push_back("not nonincreasing");

  const auto scan = scan_convexity(x, y, tol, band);
  if (!scan.violations.empty()) report.notes.push_back("not convex");
  report.violations.insert(report.violations.end(), scan.violations.begin(), scan.violations.end());
  near_misses += scan.near_misses;

  const PanelRule rule = make_panel_rule(0.0, kPi, {}, PanelOptions{.max_frequency = 16});
  double integral = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) integral += rule.weights[j] * psi(rule.nodes[j]);
  const bool integral_ok = integral >= -options.integral_tol;
  if (!integral_ok) report.notes.push_back("integral over [0, pi] is negative");

  if (!report.violations.empty() || !integral_ok) {
    report.satisfied = Satisfied::no;
    std::sort(report.violations.begin(), report.violations.end());
    return report;
  }
  if (near_misses > 0) {
    report.satisfied = Satisfied::inconclusive;
    report.notes.push_back(std::to_string(near_misses) + " defects within tolerance of zero");
    return report;
  }
  report.satisfied = Satisfied::yes;

  // A piecewise linear function has zero second differences away from its
  // kinks, and a kink between grid points touches at most two of them.
  int run = 0;
  int longest = 0;
  bool faint = false;
  for (int i = 1; i + 1 < m; ++i) {
    const double d2 = y[i - 1] - 2.0 * y[i] + y[i + 1];
    if (d2 > tol) {
      longest = std::max(longest, ++run);
    } else {
      run = 0;
      if (d2 > band) faint = true;
    }
  }
  if (longest >= 3) {
    report.strictness = Satisfied::yes;
    report.implied_class = "Psi_1^+";
    report.notes.push_back("not piecewise linear");
  } else {
    report.strictness = faint ? Satisfied::inconclusive : Satisfied::no;
    report.implied_class = "Psi_1";
    report.notes.push_back(faint ? "piecewise linearity undecided at this tolerance" : "piecewise linear");
  }
  return report;
}

RadialProfile radial_profile(const KernelSpec& spec) {
  if (!has_radial_form(spec.family())) {
    throw std::invalid_argument("derivative unavailable: " + std::string(family_name(spec.family())) +
                                " has no Euclidean form");
  }
  RadialProfile profile;
  profile.phi = [spec](double t) { return eval_radial(spec, std::abs(t)); };
  profile.scale = scale_parameter(spec);
  profile.label = to_string(spec);
  if (radial_derivative(spec, 1, 1.0)) {
    profile.derivative = [spec](int order, double t) {
      auto v = radial_derivative(spec, order, t);
      if (!v) throw std::invalid_argument("derivative unavailable");
      return *v;
    };
  } else {
    profile.fd_step = 1e-3 * profile.scale.value_or(1.0);
  }
  return profile;
}

double profile_derivative(const RadialProfile& profile, int order, double t) {
  if (order < 0) throw std::invalid_argument("derivative order must be nonnegative");
  if (order == 0) return profile.phi(t);
  if (profile.derivative) return profile.derivative(order, t);
  const double h = profile.fd_step;
  double sum = 0.0;
  for (int k = 0; k <= order; ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    sum += sign * binomial(order, k) * profile.phi(t + (0.5 * order - k) * h);
  }
  return sum / std::pow(h, order);
}

CriterionReport polya_s3(const RadialProfile& profile, const RadialGridOptions& options) {
  return radial_check(profile, Criterion::polya_s3, 1, options);
}

CriterionReport polya_2n1(const RadialProfile& profile, int n, const RadialGridOptions& options) {
  if (n < 1 || n > 3) {
    throw std::invalid_argument(
        "polya_2n1 needs n in {1, 2, 3}: the criterion is proven for n <= 3 only, and its "
        "extension to all n >= 1 is an open conjecture");
  }
  return radial_check(profile, Criterion::polya_2n1, n, options);
}

}  // namespace sphpd
