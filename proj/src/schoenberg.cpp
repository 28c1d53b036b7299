#include "sphpd/schoenberg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "sphpd/special_fn.hpp"

namespace sphpd {

namespace {

constexpr double kPi = std::numbers::pi;

void check_truncation(int n_max, const CoefficientOptions& options) {
  if (n_max < 0) throw std::invalid_argument("truncation must be nonnegative");
  if (n_max > options.max_truncation) {
    throw QuadratureResolutionError("truncation " + std::to_string(n_max) +
                                    " exceeds the quadrature capacity " +
                                    std::to_string(options.max_truncation));
  }
}

PanelRule rule_for(const IsotropicFunction& fn, int frequency, const CoefficientOptions& options) {
  PanelOptions panels = options.panels;
  panels.max_frequency = std::max(frequency, 8);
  return make_panel_rule(0.0, kPi, fn.breakpoints, panels);
}

// log of the factor in front of the integral for b_{n,d}, including the
// normalizer C_n^lambda(1) that turns C_n into the normalized basis.
double log_gegenbauer_factor(int n, int d) {
  const double lambda = 0.5 * (d - 1);
  return std::log(2.0 * n + d - 1.0) - (3.0 - d) * std::log(2.0) - std::log(kPi) +
         2.0 * std::lgamma(lambda) - std::lgamma(d - 1.0) +
         std::log(gegenbauer_at_one(n, lambda));
}

void require_dimension(const SchoenbergSequence& seq, int d, const char* what) {
  if (seq.d != d) {
    throw DimensionMismatch(std::string(what) + ": expected a d=" + std::to_string(d) +
                            " sequence, got d=" + std::to_string(seq.d));
  }
}

void require_length(const SchoenbergSequence& seq, int n_min, const char* what) {
  if (seq.truncation() < n_min) {
    throw std::invalid_argument(std::string(what) + ": needs truncation >= " + std::to_string(n_min));
  }
}

// b*_{0,1} = 2 b_{0,1}, b*_{n,1} = b_{n,1} otherwise.
double starred(const std::vector<double>& b, int n) { return n == 0 ? 2.0 * b[0] : b[n]; }

}  // namespace

// -----------------------------------------------------------------------------

IsotropicFunction as_function(const KernelSpec& spec) {
  return {[spec](double theta) { return eval(spec, theta); }, breakpoints(spec), to_string(spec)};
}

std::string_view to_string(SequenceSource source) {
  switch (source) {
    case SequenceSource::direct_quadrature: return "direct_quadrature";
    case SequenceSource::recursion: return "recursion";
    case SequenceSource::analytic: return "analytic";
  }
  return "unknown";
}

std::optional<SequenceSource> sequence_source_from_string(std::string_view text) {
  for (auto s : {SequenceSource::direct_quadrature, SequenceSource::recursion, SequenceSource::analytic}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

double SchoenbergSequence::partial_mass() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), 0.0);
}

int default_truncation(int d) { return d <= 3 ? 200 : 100; }

SchoenbergSequence fourier_coeffs(const IsotropicFunction& fn, int n_max,
                                  const CoefficientOptions& options) {
  check_truncation(n_max, options);
  const PanelRule rule = rule_for(fn, n_max, options);
  std::vector<double> sums(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const double theta = rule.nodes[j];
    const double fw = fn.psi(theta) * rule.weights[j];
    for (int n = 0; n <= n_max; ++n) sums[n] += std::cos(n * theta) * fw;
  }
  SchoenbergSequence seq;
  seq.d = 1;
  seq.coeffs.resize(sums.size());
  seq.coeffs[0] = sums[0] / kPi;
  for (int n = 1; n <= n_max; ++n) seq.coeffs[n] = 2.0 * sums[n] / kPi;
  seq.quadrature_order = static_cast<int>(rule.size());
  seq.source = SequenceSource::direct_quadrature;
  return seq;
}

SchoenbergSequence gegenbauer_coeffs(const IsotropicFunction& fn, int d, int n_max,
                                     const CoefficientOptions& options) {
  if (d < 2) throw DimensionMismatch("gegenbauer_coeffs needs d >= 2");
  check_truncation(n_max, options);
  const double lambda = 0.5 * (d - 1);
  const PanelRule rule = rule_for(fn, n_max + d, options);
  std::vector<double> sums(static_cast<std::size_t>(n_max) + 1, 0.0);
  std::vector<double> basis;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const double theta = rule.nodes[j];
    const double fw = fn.psi(theta) * std::pow(std::sin(theta), d - 1) * rule.weights[j];
    gegenbauer_normalized_all(n_max, lambda, std::cos(theta), basis);
    for (int n = 0; n <= n_max; ++n) sums[n] += basis[n] * fw;
  }
  SchoenbergSequence seq;
  seq.d = d;
  seq.coeffs.resize(sums.size());
  for (int n = 0; n <= n_max; ++n) seq.coeffs[n] = std::exp(log_gegenbauer_factor(n, d)) * sums[n];
  seq.quadrature_order = static_cast<int>(rule.size());
  seq.source = SequenceSource::direct_quadrature;
  return seq;
}

SchoenbergSequence schoenberg_coeffs(const IsotropicFunction& fn, int d, int n_max,
                                     const CoefficientOptions& options) {
  if (d < 1) throw std::invalid_argument("sphere dimension must be at least 1");
  return d == 1 ? fourier_coeffs(fn, n_max, options) : gegenbauer_coeffs(fn, d, n_max, options);
}

// -----------------------------------------------------------------------------

SchoenbergSequence walk_1_to_3(const SchoenbergSequence& seq) {
  require_dimension(seq, 1, "walk_1_to_3");
  require_length(seq, 2, "walk_1_to_3");
  const auto& b = seq.coeffs;
  const int n_out = seq.truncation() - 2;
  SchoenbergSequence out;
  out.d = 3;
  out.source = SequenceSource::recursion;
  out.quadrature_order = seq.quadrature_order;
  out.coeffs.resize(static_cast<std::size_t>(n_out) + 1);
  out.coeffs[0] = b[0] - 0.5 * b[2];
  for (int n = 1; n <= n_out; ++n) out.coeffs[n] = 0.5 * (n + 1) * (b[n] - b[n + 2]);
  return out;
}

SchoenbergSequence walk_d_to_d2(const SchoenbergSequence& seq) {
  if (seq.d < 2) {
    throw DimensionMismatch("walk_d_to_d2: needs d >= 2, got d=" + std::to_string(seq.d));
  }
  require_length(seq, 2, "walk_d_to_d2");
  const auto& b = seq.coeffs;
  const double d = seq.d;
  const int n_out = seq.truncation() - 2;
  SchoenbergSequence out;
  out.d = seq.d + 2;
  out.source = SequenceSource::recursion;
  out.quadrature_order = seq.quadrature_order;
  out.coeffs.resize(static_cast<std::size_t>(n_out) + 1);
  for (int n = 0; n <= n_out; ++n) {
    const double up = (n + d - 1.0) * (n + d) / (d * (2.0 * n + d - 1.0));
    const double down = (n + 1.0) * (n + 2.0) / (d * (2.0 * n + d + 3.0));
    out.coeffs[n] = up * b[n] - down * b[n + 2];
  }
  return out;
}

SchoenbergSequence coeffs_d5_from_d1(const SchoenbergSequence& seq) {
  require_dimension(seq, 1, "coeffs_d5_from_d1");
  require_length(seq, 4, "coeffs_d5_from_d1");
  const auto& b = seq.coeffs;
  const int n_out = seq.truncation() - 4;
  SchoenbergSequence out;
  out.d = 5;
  out.source = SequenceSource::recursion;
  out.quadrature_order = seq.quadrature_order;
  out.coeffs.resize(static_cast<std::size_t>(n_out) + 1);
  for (int n = 0; n <= n_out; ++n) {
    const double m = n;
    out.coeffs[n] = (m + 2.0) * (m + 3.0) / 12.0 *
                    (starred(b, n) - 2.0 * (m + 2.0) / (m + 3.0) * b[n + 2] +
                     (m + 1.0) / (m + 3.0) * b[n + 4]);
  }
  return out;
}

double fourier_legendre_weight(int n, int k) {
  // 2^{2n} (n!)^2 / (2n)!  *  (2k-1)!! / k!  *  prod_{i=1..k} (n+i) / (2n+2i+1)
  double log_w = 2.0 * n * std::log(2.0) + 2.0 * std::lgamma(n + 1.0) - std::lgamma(2.0 * n + 1.0);
  // (2k-1)!! / k! = (2k)! / (2^k k!^2)
  log_w += std::lgamma(2.0 * k + 1.0) - k * std::log(2.0) - 2.0 * std::lgamma(k + 1.0);
  for (int i = 1; i <= k; ++i) log_w += std::log((n + i) / (2.0 * n + 2.0 * i + 1.0));
  return std::exp(log_w);
}

LegendreFromFourier legendre_from_fourier(const SchoenbergSequence& seq, int n_out, int k_max) {
  require_dimension(seq, 1, "legendre_from_fourier");
  if (n_out < 0 || k_max < 0) throw std::invalid_argument("legendre_from_fourier: negative size");
  require_length(seq, n_out + 2 * k_max + 2, "legendre_from_fourier");
  const auto& b = seq.coeffs;
  LegendreFromFourier result;
  result.sequence.d = 2;
  result.sequence.source = SequenceSource::recursion;
  result.sequence.quadrature_order = seq.quadrature_order;
  result.sequence.coeffs.assign(static_cast<std::size_t>(n_out) + 1, 0.0);
  result.tail_residual.assign(static_cast<std::size_t>(n_out) + 1, 0.0);
  for (int n = 0; n <= n_out; ++n) {
    double sum = 0.0;
    double last = 0.0;
    for (int k = 0; k <= k_max; ++k) {
      // The printed weights carry an extra factor 2 relative to the normalized
      // expansion (check: psi = cos(theta) must give b_{1,2} = 1).
      last = 0.5 * fourier_legendre_weight(n, k) * (starred(b, n + 2 * k) - b[n + 2 * k + 2]);
      sum += last;
    }
    result.sequence.coeffs[n] = sum;
    result.tail_residual[n] = std::abs(last);
  }
  return result;
}

double reconstruct(const SchoenbergSequence& seq, double theta) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::domain_error("great circle distance must lie in [0, pi]");
  }
  const int n_max = seq.truncation();
  if (n_max < 0) return 0.0;
  double sum = 0.0;
  if (seq.d == 1) {
    for (int n = 0; n <= n_max; ++n) sum += seq.coeffs[n] * std::cos(n * theta);
    return sum;
  }
  std::vector<double> basis;
  gegenbauer_normalized_all(n_max, 0.5 * (seq.d - 1), std::cos(theta), basis);
  for (int n = 0; n <= n_max; ++n) sum += seq.coeffs[n] * basis[n];
  return sum;
}

// -----------------------------------------------------------------------------

StrictnessEvidence strictness_evidence(const SchoenbergSequence& seq, double tol,
                                       int progression_limit, int min_count) {
  StrictnessEvidence ev;
  ev.d = seq.d;
  ev.truncation = seq.truncation();
  ev.tolerance = tol;
  for (int n = 0; n <= ev.truncation; ++n) {
    if (!(seq.coeffs[n] > tol)) continue;
    if (n % 2 == 0) {
      ++ev.positive_even;
      ev.largest_positive_even = n;
    } else {
      ++ev.positive_odd;
      ev.largest_positive_odd = n;
    }
  }
  if (seq.d >= 2) {
    ev.supports_strictness = ev.positive_even >= min_count && ev.positive_odd >= min_count;
    return ev;
  }
  ev.progression_checked = true;
  ev.progression_limit = progression_limit;
  for (int n = 1; n <= progression_limit && !ev.missing_progression; ++n) {
    for (int j = 0; j < n; ++j) {
      bool hit = false;
      for (int m = j; m <= ev.truncation; m += n) {
        if (seq.coeffs[m] > tol) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        ev.missing_progression = std::make_pair(j, n);
        break;
      }
    }
  }
  ev.supports_strictness = !ev.missing_progression && ev.positive_even >= min_count &&
                           ev.positive_odd >= min_count;
  return ev;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

MembershipVerdict membership(const IsotropicFunction& fn, int d, int n_max,
                             const MembershipOptions& options) {
  if (d < 1) throw std::invalid_argument("sphere dimension must be at least 1");
  MembershipVerdict v;
  v.d = d;
  v.strict_requested = options.strict;
  v.truncation = n_max;
  v.sequence = schoenberg_coeffs(fn, d, n_max, options.coefficients);
  const auto& b = v.sequence.coeffs;

  v.min_index = static_cast<int>(std::min_element(b.begin(), b.end()) - b.begin());
  v.min_coefficient = b[v.min_index];
  for (int n = 0; n <= n_max; ++n) {
    if (b[n] < -options.tol_fail) v.witness.emplace_back(n, b[n]);
  }
  v.tail_mass = 1.0 - v.sequence.partial_mass();
  v.strict_evidence = strictness_evidence(v.sequence, options.positive_tol);

  const double at_zero = fn.psi(0.0);
  if (std::abs(at_zero - 1.0) > 1e-12) {
    v.notes.push_back("psi(0) = " + std::to_string(at_zero) + " is not 1; the classes require psi(0) = 1");
  }

  if (d >= 3) {
    MonotonicityDiagnostics mono;
    mono.base_dimension = d - 2;
    const auto base = schoenberg_coeffs(fn, d - 2, n_max, options.coefficients);
    const auto& a = base.coeffs;
    const double tol = options.tol_pass;
    if (d == 3) {
      mono.leading_condition = a[2] <= 2.0 * a[0] + tol;
      for (int n = 1; n + 2 <= n_max; ++n) {
        if (a[n + 2] > a[n] + tol) mono.violations.push_back(n);
      }
    } else {
      const double dd = d - 2;
      for (int n = 0; n + 2 <= n_max; ++n) {
        const double bound = (2.0 * n + dd + 3.0) / (2.0 * n + dd - 1.0) * (n + dd - 1.0) * (n + dd) /
                             ((n + 1.0) * (n + 2.0)) * a[n];
        if (a[n + 2] > bound + tol) mono.violations.push_back(n);
      }
    }
    mono.holds = mono.leading_condition && mono.violations.empty();
    v.monotonicity = std::move(mono);
  }

  const bool nonnegative = v.min_coefficient >= -options.tol_pass;
  if (!v.witness.empty()) {
    v.verdict = Verdict::fail;
  } else if (nonnegative && v.tail_mass < options.tail_tol && v.notes.empty()) {
    v.verdict = Verdict::pass;
    if (options.strict && !v.strict_evidence.supports_strictness) {
      v.verdict = Verdict::inconclusive;
      v.notes.push_back("no strictness evidence within the truncation window");
    }
  } else {
    v.verdict = Verdict::inconclusive;
    if (!nonnegative) v.notes.push_back("a coefficient lies between -tol_fail and -tol_pass");
    if (v.tail_mass >= options.tail_tol) {
      v.notes.push_back("tail mass " + std::to_string(v.tail_mass) + " not below tail_tol");
    }
  }
  return v;
}

}  // namespace sphpd
