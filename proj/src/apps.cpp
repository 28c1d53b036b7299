#include "sphpd/apps.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

namespace sphpd {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Factor {
  Eigen::MatrixXd lower;  // K + jitter I = lower * lower^T
  double jitter = 0.0;
  bool used_ldlt = false;
};

// LLT, then (when `allow_ldlt`) pivoted LDLT for semidefinite matrices, then
// LLT with the jitter ladder.
Factor factorize(const Eigen::MatrixXd& k, bool allow_ldlt) {
  const auto n = k.rows();
  Factor f;
  Eigen::LLT<Eigen::MatrixXd> llt(k);
  if (llt.info() == Eigen::Success) {
    f.lower = llt.matrixL();
    return f;
  }
  const double mean_diag = n > 0 ? k.diagonal().mean() : 1.0;
  if (allow_ldlt) {
    Eigen::LDLT<Eigen::MatrixXd> ldlt(k);
    if (ldlt.info() == Eigen::Success) {
      const Eigen::VectorXd d = ldlt.vectorD();
      if (d.minCoeff() >= -1e-10 * mean_diag * n) {
        const Eigen::MatrixXd l = ldlt.matrixL();
        Eigen::MatrixXd scaled = l * d.cwiseMax(0.0).cwiseSqrt().asDiagonal();
        // K = P^T L D L^T P
        f.lower = ldlt.transpositionsP().transpose() * scaled;
        f.used_ldlt = true;
        return f;
      }
    }
  }
  for (double rel : kJitterLadder) {
    const double jitter = rel * mean_diag;
    Eigen::MatrixXd shifted = k;
    shifted.diagonal().array() += jitter;
    Eigen::LLT<Eigen::MatrixXd> retry(shifted);
    if (retry.info() == Eigen::Success) {
      f.lower = retry.matrixL();
      f.jitter = jitter;
      return f;
    }
  }
  throw FactorizationError("Gram matrix is not positive definite even with jitter " +
                           format_double(kJitterLadder[2]) + " x mean diagonal");
}

void require_valid(const KernelSpec& spec, int d, bool strict) {
  const auto verdict = validate_params(spec, SphereDimension(d));
  if (!verdict.valid || (strict && !verdict.strict)) {
    throw std::invalid_argument(to_string(spec) + " is not " + (strict ? "strictly " : "") +
                                "positive definite on S^" + std::to_string(d) + " (" + verdict.rule +
                                ": " + verdict.reason + ")");
  }
}

}  // namespace

Interpolant interpolate_fit(const KernelSpec& spec, const SpherePointSet& nodes,
                            const std::vector<double>& data, double ridge) {
  require_valid(spec, nodes.d(), true);
  if (data.size() != nodes.size()) throw std::invalid_argument("data length differs from node count");
  if (!(ridge >= 0.0)) throw std::invalid_argument("ridge must be nonnegative");
  Eigen::MatrixXd k = gram_matrix(spec, nodes);
  k.diagonal().array() += ridge;
  const Factor f = factorize(k, false);
  const Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(data.data(), data.size());
  const Eigen::VectorXd y = f.lower.triangularView<Eigen::Lower>().solve(rhs);
  const Eigen::VectorXd w = f.lower.transpose().triangularView<Eigen::Upper>().solve(y);
  return {spec, nodes, std::vector<double>(w.data(), w.data() + w.size()), ridge, f.jitter};
}

double interpolate_eval(const Interpolant& interp, const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t j = 0; j < interp.weights.size(); ++j) {
    if (interp.weights[j] == 0.0) continue;
    s += interp.weights[j] * eval(interp.spec, great_circle(x, interp.nodes.point(j)));
  }
  return s;
}

FieldSample simulate(const KernelSpec& spec, const SpherePointSet& pts, int n_samples,
                     std::uint64_t seed) {
  require_valid(spec, pts.d(), false);
  if (n_samples < 1) throw std::invalid_argument("sample count must be at least 1");
  const Factor f = factorize(gram_matrix(spec, pts), true);
  const auto n = static_cast<Eigen::Index>(pts.size());
  FieldSample out{spec, pts, Eigen::MatrixXd(n_samples, n), seed, f.jitter, f.used_ldlt};
  Eigen::VectorXd z(n);
  for (int i = 0; i < n_samples; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    for (Eigen::Index k = 0; k < n; ++k) z(k) = normal(rng);
    out.values.row(i) = (f.lower * z).transpose();
  }
  return out;
}

double estimate_fractal_index(const KernelSpec& spec, double theta_min, double theta_max, int n_grid) {
  if (!(theta_min > 0.0 && theta_min < theta_max && theta_max <= 0.1)) {
    throw std::invalid_argument("fractal grid needs 0 < theta_min < theta_max <= 0.1");
  }
  if (n_grid < 2) throw std::invalid_argument("fractal grid needs at least 2 points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double a = std::log(theta_min);
  const double b = std::log(theta_max);
  for (int i = 0; i < n_grid; ++i) {
    const double lx = a + (b - a) * i / (n_grid - 1);
    const double gap = 1.0 - eval(spec, std::exp(lx));
    if (!(gap > 0.0)) {
      throw std::domain_error("1 - psi vanishes on the fractal grid; the index is undefined");
    }
    const double ly = std::log(gap);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double m = n_grid;
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::vector<LocalizationRow> localization_compare(double c, const std::vector<double>& grid) {
  if (!(c > 0.0 && c <= std::numbers::pi)) throw std::invalid_argument("support c must lie in (0, pi]");
  std::vector<LocalizationRow> rows;
  rows.reserve(grid.size());
  const double s = std::sin(0.5 * c);
  for (double theta : grid) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
      throw std::domain_error("great circle distance must lie in [0, pi]");
    }
    const double t1 = theta >= c ? 1.0 : std::sin(0.5 * theta) / s;
    rows.push_back({theta, gaspari_cohn_profile(t1), gaspari_cohn_profile(theta / c)});
  }
  return rows;
}

void write_localization_csv(std::ostream& out, const std::vector<LocalizationRow>& rows) {
  out << "# theta in radians; psi1 = GC at chordal distance, psi2 = GC at great circle distance\n"
      << "theta,psi1,psi2\n";
  for (const auto& r : rows) {
    out << format_double(r.theta) << ',' << format_double(r.psi1) << ',' << format_double(r.psi2) << '\n';
  }
}

void write_field_csv(std::ostream& out, const FieldSample& sample) {
  out << "#kernel=" << to_string(sample.spec) << '\n'
      << "#seed=" << sample.seed << '\n'
      << "#jitter=" << format_double(sample.jitter) << '\n'
      << "#factorization=" << (sample.used_ldlt ? "ldlt" : "llt") << '\n'
      << "draw";
  for (Eigen::Index k = 0; k < sample.values.cols(); ++k) out << ",p" << k;
  out << '\n';
  for (Eigen::Index i = 0; i < sample.values.rows(); ++i) {
    out << i;
    for (Eigen::Index k = 0; k < sample.values.cols(); ++k) out << ',' << format_double(sample.values(i, k));
    out << '\n';
  }
}

}  // namespace sphpd
