#pragma once

// Truncated Taylor series arithmetic (forward-mode differentiation to fixed
// order). coef[k] holds f^(k)(t0) / k!.

#include <array>
#include <cmath>

namespace sphpd::detail {

template <int K>
struct Taylor {
  std::array<double, K + 1> coef{};

  Taylor() = default;
  Taylor(double v) { coef[0] = v; }  // NOLINT: implicit constant lift

  static Taylor variable(double t0) {
    Taylor x(t0);
    if constexpr (K >= 1) x.coef[1] = 1.0;
    return x;
  }

  double value() const { return coef[0]; }
};

template <int K>
Taylor<K> operator+(Taylor<K> a, const Taylor<K>& b) {
  for (int k = 0; k <= K; ++k) a.coef[k] += b.coef[k];
  return a;
}

template <int K>
Taylor<K> operator-(Taylor<K> a, const Taylor<K>& b) {
  for (int k = 0; k <= K; ++k) a.coef[k] -= b.coef[k];
  return a;
}

template <int K>
Taylor<K> operator-(Taylor<K> a) {
  for (auto& c : a.coef) c = -c;
  return a;
}

template <int K>
Taylor<K> operator*(const Taylor<K>& a, const Taylor<K>& b) {
  Taylor<K> r;
  for (int k = 0; k <= K; ++k) {
    double s = 0.0;
    for (int i = 0; i <= k; ++i) s += a.coef[i] * b.coef[k - i];
    r.coef[k] = s;
  }
  return r;
}

template <int K>
Taylor<K> operator/(const Taylor<K>& a, const Taylor<K>& b) {
  Taylor<K> r;
  for (int k = 0; k <= K; ++k) {
    double s = a.coef[k];
    for (int i = 1; i <= k; ++i) s -= b.coef[i] * r.coef[k - i];
    r.coef[k] = s / b.coef[0];
  }
  return r;
}

template <int K>
Taylor<K> exp(const Taylor<K>& a) {
  Taylor<K> r;
  r.coef[0] = std::exp(a.coef[0]);
  for (int k = 1; k <= K; ++k) {
    double s = 0.0;
    for (int i = 1; i <= k; ++i) s += i * a.coef[i] * r.coef[k - i];
    r.coef[k] = s / k;
  }
  return r;
}

template <int K>
Taylor<K> log(const Taylor<K>& a) {
  Taylor<K> r;
  r.coef[0] = std::log(a.coef[0]);
  for (int k = 1; k <= K; ++k) {
    double s = 0.0;
    for (int i = 1; i < k; ++i) s += i * r.coef[i] * a.coef[k - i];
    r.coef[k] = (a.coef[k] - s / k) / a.coef[0];
  }
  return r;
}

// a^p for a(t0) > 0; returns zero when a(t0) <= 0 (used for truncated powers).
template <int K>
Taylor<K> pow_plus(const Taylor<K>& a, double p) {
  if (a.coef[0] <= 0.0) return Taylor<K>(0.0);
  return exp(log(a) * Taylor<K>(p));
}

inline double pow_plus(double a, double p) { return a <= 0.0 ? 0.0 : std::pow(a, p); }

template <int K>
double value_of(const Taylor<K>& a) {
  return a.coef[0];
}
inline double value_of(double a) { return a; }

}  // namespace sphpd::detail
