#pragma once

#include <vector>

namespace sphpd {

/// Gauss-Legendre rule on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive, summing to 2
  int order = 0;
};

/// Gegenbauer (ultraspherical) polynomial C_n^lambda(x).
///
/// Uses the forward three-term recurrence seeded by C_0 = 1, C_1 = 2 lambda x.
/// For lambda == 0 the trigonometric convention C_n^0(cos t) = cos(n t) is
/// used, so gegenbauer(n, 0, x) == cos(n arccos x).
///
/// Throws std::domain_error if |x| > 1 or lambda < 0.
double gegenbauer(int n, double lambda, double x);

/// C_n^lambda(x) / C_n^lambda(1); equals 1 at x = 1 for every n and lambda.
/// For lambda == 0 the normalizer is 1.
double gegenbauer_normalized(int n, double lambda, double x);

/// C_n^lambda(1) = Gamma(n + 2 lambda) / (n! Gamma(2 lambda)); 1 for lambda == 0.
double gegenbauer_at_one(int n, double lambda);

/// Fills out[0..n_max] with C_k^lambda(x) / C_k^lambda(1). No domain checks.
void gegenbauer_normalized_all(int n_max, double lambda, double x,
                               std::vector<double>& out);

/// Legendre polynomial P_n(x) via the Bonnet recurrence.
double legendre(int n, double x);

/// Modified Bessel function of the second kind K_nu(t).
///
/// Temme's series for t < 2, Steed's continued fraction for t >= 2, then
/// upward recurrence in the order. Accurate to ~1e-13 relative for
/// nu in [0, 5] and t in [1e-8, 50].
///
/// Throws std::domain_error for t <= 0 or nu < 0 and std::overflow_error for
/// t < kBesselKFloor.
double bessel_k(double nu, double t);

/// Arguments below this floor are rejected by bessel_k.
inline constexpr double kBesselKFloor = 1e-60;

/// m-point Gauss-Legendre rule; throws std::invalid_argument for m < 1.
QuadratureRule gauss_legendre(int m);

}  // namespace sphpd
