#include <cmath>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "sphpd/apps.hpp"

using namespace sphpd;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> height(const SpherePointSet& pts) {
  std::vector<double> out;
  for (const auto& p : pts.points()) out.push_back(p[2]);
  return out;
}

}  // namespace

TEST(Interpolate, ExactAtNodes) {
  const auto nodes = sample_points(2, 120, PointScheme::uniform_random, 3);
  std::vector<double> data;
  for (const auto& p : nodes.points()) data.push_back(std::sin(3 * p[0]) + p[1] * p[2]);
  double norm = 0.0;
  for (double v : data) norm += v * v;
  norm = std::sqrt(norm);
  for (Family f : all_families()) {
    const auto spec = default_spec(f);
    const auto v = validate_params(spec, SphereDimension(2));
    if (!v.valid || !v.strict) continue;
    const auto fit = interpolate_fit(spec, nodes, data);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      EXPECT_LT(std::abs(interpolate_eval(fit, nodes.point(i)) - data[i]), 1e-8 * norm) << family_name(f);
    }
  }
}

TEST(Interpolate, ZeroData) {
  const auto nodes = sample_points(2, 30, PointScheme::fibonacci_s2);
  const auto fit = interpolate_fit(default_spec(Family::sine_power), nodes, std::vector<double>(30, 0.0));
  for (double w : fit.weights) EXPECT_EQ(w, 0.0);
  EXPECT_EQ(interpolate_eval(fit, {0, 0, 1}), 0.0);
}

TEST(Interpolate, BeatsConstantPredictor) {
  const auto nodes = sample_points(2, 50, PointScheme::fibonacci_s2);
  const auto data = height(nodes);
  const auto fit = interpolate_fit(parse_kernel("sine_power:alpha=1"), nodes, data);
  double mean = 0.0;
  for (double v : data) mean += v;
  mean /= data.size();
  const auto held = sample_points(2, 500, PointScheme::uniform_random, 17);
  double err_fit = 0.0, err_const = 0.0;
  for (const auto& x : held.points()) {
    err_fit = std::max(err_fit, std::abs(interpolate_eval(fit, x) - x[2]));
    err_const = std::max(err_const, std::abs(mean - x[2]));
  }
  EXPECT_LT(err_fit, err_const);
  EXPECT_LT(err_fit, 0.5);
}

TEST(Interpolate, CompactSupportAntipode) {
  SpherePointSet one(2);
  one.add({0, 0, 1});
  const auto fit = interpolate_fit(parse_kernel("askey:c=1,tau=2"), one, {2.5});
  EXPECT_NEAR(fit.weights[0], 2.5, 1e-15);
  EXPECT_EQ(interpolate_eval(fit, {0, 0, -1}), 0.0);
  EXPECT_NEAR(interpolate_eval(fit, {0, 0, 1}), 2.5, 1e-15);
}

TEST(Interpolate, Rejections) {
  const auto nodes = sample_points(2, 5, PointScheme::fibonacci_s2);
  try {
    interpolate_fit(parse_kernel("powered_exponential:c=1,alpha=2"), nodes, std::vector<double>(5, 1.0));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("S^2"), std::string::npos);
  }
  // cosine is positive definite but not strictly
  EXPECT_THROW(interpolate_fit(parse_kernel("cosine"), nodes, std::vector<double>(5, 1.0)), std::invalid_argument);
  EXPECT_THROW(interpolate_fit(default_spec(Family::spherical), nodes, {1.0}), std::invalid_argument);
}

TEST(Interpolate, RidgeSmooths) {
  const auto nodes = sample_points(2, 40, PointScheme::fibonacci_s2);
  const auto data = height(nodes);
  const auto fit = interpolate_fit(default_spec(Family::wendland_c2), nodes, data, 0.5);
  EXPECT_EQ(fit.ridge, 0.5);
  double resid = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    resid = std::max(resid, std::abs(interpolate_eval(fit, nodes.point(i)) - data[i]));
  EXPECT_GT(resid, 1e-3);
}

TEST(Simulate, MeanAndCorrelation) {
  SpherePointSet pts(2);
  pts.add({1, 0, 0});
  pts.add({std::cos(0.4), std::sin(0.4), 0});
  const auto spec = parse_kernel("powered_exponential:c=1,alpha=1");
  const int n = 10000;
  const auto s = simulate(spec, pts, n, 42);
  ASSERT_EQ(s.values.rows(), n);
  const double m0 = s.values.col(0).mean();
  EXPECT_LT(std::abs(m0), 0.03);
  const double rho = std::exp(-0.4);
  const auto c0 = s.values.col(0).array() - m0;
  const auto c1 = s.values.col(1).array() - s.values.col(1).mean();
  const double r = (c0 * c1).sum() / std::sqrt((c0 * c0).sum() * (c1 * c1).sum());
  EXPECT_LT(std::abs(r - rho), 3 * (1 - rho * rho) / std::sqrt(double(n)));
}

TEST(Simulate, Deterministic) {
  const auto pts = sample_points(2, 8, PointScheme::uniform_random, 1);
  const auto a = simulate(default_spec(Family::matern), pts, 5, 7);
  const auto b = simulate(default_spec(Family::matern), pts, 5, 7);
  const auto c = simulate(default_spec(Family::matern), pts, 5, 8);
  EXPECT_EQ(a.values, b.values);
  EXPECT_NE(a.values, c.values);
  // draw i does not depend on how many draws are requested
  const auto d = simulate(default_spec(Family::matern), pts, 2, 7);
  EXPECT_EQ(d.values.row(1), a.values.row(1));
}

TEST(Simulate, CosineRankTwo) {
  const auto pts = sample_points(2, 3, PointScheme::equator);
  const auto s = simulate(parse_kernel("cosine"), pts, 200, 5);
  // the null vector of the circulant Gram is (1, 1, 1) / sqrt(3)
  for (int i = 0; i < s.values.rows(); ++i) EXPECT_LT(std::abs(s.values.row(i).sum()) / std::sqrt(3.0), 1e-6);
  EXPECT_THROW(simulate(parse_kernel("powered_exponential:c=1,alpha=2"), pts, 1, 0), std::invalid_argument);
}

TEST(Simulate, CovarianceRecovery) {
  const auto pts = sample_points(2, 10, PointScheme::uniform_random, 2);
  const int n = 10000;
  for (Family f : {Family::powered_exponential, Family::matern, Family::wendland_c2}) {
    const auto spec = default_spec(f);
    const auto s = simulate(spec, pts, n, 9);
    const auto k = gram_matrix(spec, pts);
    const Eigen::MatrixXd cov = s.values.transpose() * s.values / n;
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) {
        const double se = std::sqrt((1 + k(i, j) * k(i, j)) / n);
        EXPECT_LT(std::abs(cov(i, j) - k(i, j)), 4 * se) << family_name(f) << ' ' << i << ' ' << j;
      }
  }
}

TEST(Fractal, TabulatedValues) {
  EXPECT_NEAR(estimate_fractal_index(parse_kernel("sine_power:alpha=1")), 1.0, 0.02);
  EXPECT_NEAR(estimate_fractal_index(parse_kernel("matern:c=1,nu=0.3")), 0.6, 0.05);
  EXPECT_NEAR(estimate_fractal_index(parse_kernel("wendland_c2:c=3.141592653589793,tau=4")), 2.0, 0.05);
  for (Family f : all_families()) {
    const auto spec = default_spec(f);
    const auto th = fractal_index_theoretical(spec);
    if (!th) continue;
    EXPECT_NEAR(estimate_fractal_index(spec), *th, 0.05) << family_name(f);
  }
}

TEST(Fractal, Errors) {
  EXPECT_THROW(estimate_fractal_index(default_spec(Family::cosine), 0.0, 0.01), std::invalid_argument);
  EXPECT_THROW(estimate_fractal_index(default_spec(Family::cosine), 1e-4, 0.5), std::invalid_argument);
  // psi rounds to 1 on the grid
  EXPECT_THROW(estimate_fractal_index(parse_kernel("powered_exponential:c=1,alpha=2"), 1e-9, 1e-8),
               std::domain_error);
}

TEST(Localization, SpotValuesAndDominance) {
  const auto rows = localization_compare(kPi / 2, {0.0, kPi / 4, kPi / 2, kPi});
  EXPECT_DOUBLE_EQ(rows[0].psi1, 1.0);
  EXPECT_DOUBLE_EQ(rows[0].psi2, 1.0);
  EXPECT_NEAR(rows[1].psi2, 5.0 / 24, 1e-12);
  EXPECT_NEAR(rows[1].psi1, gaspari_cohn_profile(std::sin(kPi / 8) / std::sin(kPi / 4)), 1e-15);
  EXPECT_NEAR(rows[1].psi1, 0.15481870148146110, 1e-12);
  for (int i = 2; i < 4; ++i) {
    EXPECT_EQ(rows[i].psi1, 0.0);
    EXPECT_EQ(rows[i].psi2, 0.0);
  }
  for (double c : {kPi / 4, kPi / 2, kPi}) {
    std::vector<double> grid;
    for (int i = 1; i < 1000; ++i) grid.push_back(c * i / 1000);
    for (const auto& r : localization_compare(c, grid)) EXPECT_GT(r.psi2, r.psi1) << c << ' ' << r.theta;
  }
  EXPECT_THROW(localization_compare(0.0, {}), std::invalid_argument);
  EXPECT_THROW(localization_compare(4.0, {}), std::invalid_argument);
}

TEST(Localization, Csv) {
  std::ostringstream out;
  write_localization_csv(out, localization_compare(kPi / 2, {0.0, 1.0}));
  EXPECT_NE(out.str().find("theta,psi1,psi2"), std::string::npos);
}
