#include "sphpd/special_fn.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sphpd {

namespace {

void check_unit_interval(double x) {
  if (!(std::abs(x) <= 1.0)) {
    throw std::domain_error("argument must lie in [-1, 1], got " + std::to_string(x));
  }
}

// ---------------------------------------------------------------------------
// Temme's auxiliary functions for K_mu with |mu| <= 1/2.
//   gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
//   gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
// gam1 suffers cancellation at small mu, where the Taylor series of
// 1/Gamma(1+z) = 1 + c2 z + c3 z^2 + c4 z^3 + ... gives
// gam1 = -(c2 + c4 mu^2 + c6 mu^4).
void temme_gammas(double mu, double& gam1, double& gam2, double& gampl, double& gammi) {
  gampl = 1.0 / std::tgamma(1.0 + mu);
  gammi = 1.0 / std::tgamma(1.0 - mu);
  gam2 = 0.5 * (gammi + gampl);
  if (std::abs(mu) < 1e-3) {
    constexpr double c2 = 0.5772156649015329;
    constexpr double c4 = -0.0420026350340952;
    constexpr double c6 = -0.0421977345555443;
    const double m2 = mu * mu;
    gam1 = -(c2 + m2 * (c4 + m2 * c6));
  } else {
    gam1 = (gammi - gampl) / (2.0 * mu);
  }
}

// K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2, 0 < x < 2.
void bessel_k_series(double mu, double x, double& kmu, double& kmu1) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double x2 = 0.5 * x;
  const double pimu = std::numbers::pi * mu;
  const double fact = std::abs(pimu) < eps ? 1.0 : pimu / std::sin(pimu);
  const double d = -std::log(x2);
  const double e = mu * d;
  const double fact2 = std::abs(e) < eps ? 1.0 : std::sinh(e) / e;

  double gam1 = 0.0, gam2 = 0.0, gampl = 0.0, gammi = 0.0;
  temme_gammas(mu, gam1, gam2, gampl, gammi);

  double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
  double sum = ff;
  const double ee = std::exp(e);
  double p = 0.5 * ee / gampl;
  double q = 0.5 / (ee * gammi);
  double c = 1.0;
  const double dd = x2 * x2;
  double sum1 = p;
  for (int i = 1; i < 10000; ++i) {
    const double fi = i;
    ff = (fi * ff + p + q) / (fi * fi - mu * mu);
    c *= dd / fi;
    p /= (fi - mu);
    q /= (fi + mu);
    const double del = c * ff;
    sum += del;
    const double del1 = c * (p - fi * ff);
    sum1 += del1;
    if (std::abs(del) < std::abs(sum) * eps) break;
  }
  kmu = sum;
  kmu1 = sum1 * 2.0 / x;
}

// K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2, x >= 2, by Steed's algorithm for
// the continued fraction of K_{mu+1}/K_mu together with the normalising sum.
void bessel_k_cf(double mu, double x, double& kmu, double& kmu1) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu * mu;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i < 100000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < eps) break;
  }
  h = a1 * h;
  kmu = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
  kmu1 = kmu * (mu + x + 0.5 - h) / x;
}

}  // namespace

// -----------------------------------------------------------------------------

double gegenbauer(int n, double lambda, double x) {
  check_unit_interval(x);
  if (lambda < 0.0) throw std::domain_error("gegenbauer: lambda must be nonnegative");
  if (n < 0) throw std::domain_error("gegenbauer: degree must be nonnegative");
  if (lambda == 0.0) return std::cos(n * std::acos(x));
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * lambda * x;
  for (int k = 1; k < n; ++k) {
    const double next = (2.0 * (k + lambda) * x * cur - (k + 2.0 * lambda - 1.0) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double gegenbauer_at_one(int n, double lambda) {
  if (lambda == 0.0 || n == 0) return 1.0;
  return std::exp(std::lgamma(n + 2.0 * lambda) - std::lgamma(n + 1.0) - std::lgamma(2.0 * lambda));
}

void gegenbauer_normalized_all(int n_max, double lambda, double x, std::vector<double>& out) {
  out.resize(static_cast<std::size_t>(n_max) + 1);
  out[0] = 1.0;
  if (n_max == 0) return;
  out[1] = x;
  // G_{k+1} = (2 (k + lambda) x G_k - k G_{k-1}) / (k + 2 lambda), G = C / C(1).
  for (int k = 1; k < n_max; ++k) {
    out[k + 1] = (2.0 * (k + lambda) * x * out[k] - k * out[k - 1]) / (k + 2.0 * lambda);
  }
}

double gegenbauer_normalized(int n, double lambda, double x) {
  check_unit_interval(x);
  if (lambda < 0.0) throw std::domain_error("gegenbauer_normalized: lambda must be nonnegative");
  if (n < 0) throw std::domain_error("gegenbauer_normalized: degree must be nonnegative");
  if (lambda == 0.0) return std::cos(n * std::acos(x));
  std::vector<double> g;
  gegenbauer_normalized_all(n, lambda, x, g);
  return g[n];
}

double legendre(int n, double x) {
  check_unit_interval(x);
  if (n < 0) throw std::domain_error("legendre: degree must be nonnegative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0) * x * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double bessel_k(double nu, double t) {
  if (!(t > 0.0)) throw std::domain_error("bessel_k: argument must be positive");
  if (!(nu >= 0.0)) throw std::domain_error("bessel_k: order must be nonnegative");
  if (t < kBesselKFloor) throw std::overflow_error("bessel_k: argument below representable floor");

  const int shift = static_cast<int>(std::floor(nu + 0.5));
  const double mu = nu - shift;
  double kmu = 0.0;
  double kmu1 = 0.0;
  if (t < 2.0) {
    bessel_k_series(mu, t, kmu, kmu1);
  } else {
    bessel_k_cf(mu, t, kmu, kmu1);
  }
  // K_{m+1} = K_{m-1} + (2 m / t) K_m
  for (int i = 1; i <= shift; ++i) {
    const double next = (mu + i) * (2.0 / t) * kmu1 + kmu;
    kmu = kmu1;
    kmu1 = next;
  }
  if (!std::isfinite(kmu)) throw std::overflow_error("bessel_k: result not representable");
  return kmu;
}

QuadratureRule gauss_legendre(int m) {
  if (m < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  QuadratureRule rule;
  rule.order = m;
  rule.nodes.assign(m, 0.0);
  rule.weights.assign(m, 0.0);
  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 1; k < m; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // one more pass to settle the derivative at the converged node
        p0 = 1.0;
        p1 = x;
        for (int k = 1; k < m; ++k) {
          const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
          p0 = p1;
          p1 = p2;
        }
        dp = m * (x * p1 - p0) / (x * x - 1.0);
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[m - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[m - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (m % 2 == 1) rule.nodes[m / 2] = 0.0;
  return rule;
}

}  // namespace sphpd
