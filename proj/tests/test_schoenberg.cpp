#include <cmath>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "sphpd/schoenberg.hpp"
#include "sphpd/special_fn.hpp"

using namespace sphpd;

namespace {

constexpr double kPi = std::numbers::pi;

IsotropicFunction fn(std::function<double(double)> f, std::string label = "") {
  return {std::move(f), {}, std::move(label)};
}

const IsotropicFunction kCos = fn([](double t) { return std::cos(t); }, "cos");
const IsotropicFunction kCos2 = fn([](double t) { return std::cos(t) * std::cos(t); }, "cos^2");
const IsotropicFunction kOne = fn([](double) { return 1.0; }, "one");

void expect_unit_vector(const SchoenbergSequence& s, int index, double tol) {
  for (int n = 0; n <= s.truncation(); ++n) EXPECT_NEAR(s.coeffs[n], n == index ? 1.0 : 0.0, tol) << n;
}

std::vector<KernelSpec> valid_catalog() {
  std::vector<KernelSpec> out;
  for (Family f : all_families()) out.push_back(default_spec(f));
  return out;
}

}  // namespace

TEST(Fourier, TrigonometricExamples) {
  expect_unit_vector(fourier_coeffs(kCos, 20), 1, 1e-14);
  const auto s = fourier_coeffs(kCos2, 20);
  for (int n = 0; n <= 20; ++n) EXPECT_NEAR(s.coeffs[n], (n == 0 || n == 2) ? 0.5 : 0.0, 1e-14);
  EXPECT_EQ(s.d, 1);
  EXPECT_EQ(s.truncation(), 20);
  EXPECT_EQ(s.source, SequenceSource::direct_quadrature);
  EXPECT_GT(s.quadrature_order, 0);
}

TEST(Fourier, AskeyClosedForm) {
  // (1 - theta/pi)^2 against cos(n theta): integrating by parts twice gives
  // (2/pi) * 2/(pi^2 n^2) * pi = 4/(pi^2 n^2); the mean is 1/3.
  const auto s = fourier_coeffs(as_function(parse_kernel("askey:c=3.141592653589793,tau=2")), 300);
  EXPECT_NEAR(s.coeffs[0], 1.0 / 3.0, 1e-12);
  for (int n = 1; n <= 300; ++n) EXPECT_NEAR(s.coeffs[n], 4.0 / (kPi * kPi * n * n), 1e-12) << n;
}

TEST(Fourier, CapacityError) {
  EXPECT_THROW(fourier_coeffs(kCos, 5000), QuadratureResolutionError);
  CoefficientOptions small;
  small.max_truncation = 10;
  EXPECT_THROW(gegenbauer_coeffs(kCos, 3, 11, small), QuadratureResolutionError);
  EXPECT_THROW(fourier_coeffs(kCos, -1), std::invalid_argument);
}

TEST(Gegenbauer, CosineIsDegreeOneInEveryDimension) {
  for (int d = 2; d <= 7; ++d) expect_unit_vector(gegenbauer_coeffs(kCos, d, 15), 1, 1e-13);
  EXPECT_THROW(gegenbauer_coeffs(kCos, 1, 15), DimensionMismatch);
}

TEST(Gegenbauer, CosineSquared) {
  // With lambda = (d-1)/2, C_2(x)/C_2(1) = (2(lambda+1)x^2 - 1)/(2 lambda + 1),
  // so cos^2 = 1/(d+1) + d/(d+1) * normalized C_2.
  for (int d = 1; d <= 8; ++d) {
    const auto s = schoenberg_coeffs(kCos2, d, 10);
    for (int n = 0; n <= 10; ++n) {
      const double expected = n == 0 ? 1.0 / (d + 1) : n == 2 ? d / (d + 1.0) : 0.0;
      EXPECT_NEAR(s.coeffs[n], expected, 1e-13) << d << ' ' << n;
    }
  }
}

TEST(Gegenbauer, MultiquadricGeneratingFunction) {
  // (1 + delta^2 - 2 delta x)^(-lambda) = sum delta^n C_n^lambda(x), hence for
  // tau = lambda = (d-1)/2 the coefficients are (1-delta)^(2 tau) delta^n C_n(1).
  for (int d : {2, 3, 4, 6}) {
    const double tau = 0.5 * (d - 1);
    const double delta = 0.4;
    KernelSpec spec(Family::multiquadric, {{"tau", tau}, {"delta", delta}});
    const auto s = gegenbauer_coeffs(as_function(spec), d, 40);
    for (int n = 0; n <= 40; ++n) {
      const double expected = std::pow(1 - delta, 2 * tau) * std::pow(delta, n) * gegenbauer_at_one(n, tau);
      EXPECT_NEAR(s.coeffs[n], expected, 1e-13) << d << ' ' << n;
    }
  }
}

TEST(Gegenbauer, LegendreNormalizationUsesUnitScale) {
  // On S^2 the basis is P_n itself, so psi = sum b_n P_n with no 1/(n+1).
  const auto s = gegenbauer_coeffs(as_function(default_spec(Family::sine_power)), 2, 60);
  for (double th : {0.4, 1.7, 2.9}) {
    double sum = 0.0;
    for (int n = 0; n <= 60; ++n) sum += s.coeffs[n] * legendre(n, std::cos(th));
    EXPECT_NEAR(sum, eval(default_spec(Family::sine_power), th), 2e-3);
  }
}

TEST(Walks, SmallExamples) {
  const auto c1 = fourier_coeffs(kCos, 12);
  expect_unit_vector(walk_1_to_3(c1), 1, 1e-14);
  expect_unit_vector(coeffs_d5_from_d1(c1), 1, 1e-14);
  const auto one1 = fourier_coeffs(kOne, 12);
  expect_unit_vector(walk_1_to_3(one1), 0, 1e-14);
  expect_unit_vector(coeffs_d5_from_d1(one1), 0, 1e-14);
  expect_unit_vector(walk_d_to_d2(gegenbauer_coeffs(kOne, 2, 12)), 0, 1e-14);
  expect_unit_vector(walk_d_to_d2(gegenbauer_coeffs(kCos, 2, 12)), 1, 1e-14);
  const auto w = walk_1_to_3(fourier_coeffs(kCos2, 12));
  EXPECT_NEAR(w.coeffs[0], 0.25, 1e-14);
  EXPECT_NEAR(w.coeffs[2], 0.75, 1e-14);
  EXPECT_EQ(w.d, 3);
  EXPECT_EQ(w.truncation(), 10);
  EXPECT_EQ(w.source, SequenceSource::recursion);
  EXPECT_EQ(coeffs_d5_from_d1(c1).truncation(), 8);
}

TEST(Walks, DimensionChecks) {
  const auto s2 = gegenbauer_coeffs(kCos, 2, 10);
  const auto s1 = fourier_coeffs(kCos, 10);
  EXPECT_THROW(walk_1_to_3(s2), DimensionMismatch);
  EXPECT_THROW(coeffs_d5_from_d1(s2), DimensionMismatch);
  EXPECT_THROW(walk_d_to_d2(s1), DimensionMismatch);
  EXPECT_THROW(legendre_from_fourier(s2, 2, 2), DimensionMismatch);
  EXPECT_THROW(walk_1_to_3(fourier_coeffs(kCos, 1)), std::invalid_argument);
  EXPECT_THROW(legendre_from_fourier(s1, 5, 5), std::invalid_argument);
}

TEST(Walks, MultiquadricTwoToFour) {
  const auto mq = as_function(parse_kernel("multiquadric:tau=1,delta=0.3"));
  const auto walked = walk_d_to_d2(gegenbauer_coeffs(mq, 2, 22));
  const auto direct = gegenbauer_coeffs(mq, 4, 20);
  for (int n = 0; n <= 20; ++n) EXPECT_NEAR(walked.coeffs[n], direct.coeffs[n], 1e-8) << n;
}

TEST(Walks, AgreeWithQuadratureForCatalog) {
  for (const auto& spec : valid_catalog()) {
    const auto f = as_function(spec);
    const auto w13 = walk_1_to_3(fourier_coeffs(f, 52));
    const auto d3 = gegenbauer_coeffs(f, 3, 50);
    const auto w24 = walk_d_to_d2(gegenbauer_coeffs(f, 2, 52));
    const auto d4 = gegenbauer_coeffs(f, 4, 50);
    for (int n = 0; n <= 50; ++n) {
      EXPECT_NEAR(w13.coeffs[n], d3.coeffs[n], 1e-8) << to_string(spec) << ' ' << n;
      EXPECT_NEAR(w24.coeffs[n], d4.coeffs[n], 1e-8) << to_string(spec) << ' ' << n;
    }
    const auto s1 = fourier_coeffs(f, 60);
    const auto one_step = coeffs_d5_from_d1(s1);
    const auto two_step = walk_d_to_d2(walk_1_to_3(s1));
    for (int n = 0; n <= one_step.truncation(); ++n) {
      EXPECT_NEAR(one_step.coeffs[n], two_step.coeffs[n], 1e-10) << to_string(spec) << ' ' << n;
    }
  }
}

TEST(LegendreFromFourier, Trivial) {
  expect_unit_vector(legendre_from_fourier(fourier_coeffs(kCos, 40), 10, 10).sequence, 1, 1e-14);
  expect_unit_vector(legendre_from_fourier(fourier_coeffs(kOne, 40), 10, 10).sequence, 0, 1e-14);
  const auto c2 = legendre_from_fourier(fourier_coeffs(kCos2, 40), 10, 10).sequence;
  EXPECT_NEAR(c2.coeffs[0], 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(c2.coeffs[2], 2.0 / 3.0, 1e-14);
  EXPECT_EQ(c2.d, 2);
}

TEST(LegendreFromFourier, WeightsMatchProductForm) {
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= 6; ++k) {
      double w = std::pow(4.0, n) * std::pow(std::tgamma(n + 1.0), 2) / std::tgamma(2.0 * n + 1);
      for (int i = 1; i <= k; ++i) w *= (2.0 * i - 1) / i * (n + i) / (2.0 * n + 2 * i + 1);
      EXPECT_NEAR(fourier_legendre_weight(n, k) / w, 1.0, 1e-12);
    }
  }
}

TEST(LegendreFromFourier, AskeyConvergesToDirectQuadrature) {
  const auto f = as_function(parse_kernel("askey:c=1.5707963267948966,tau=2"));
  const auto s1 = fourier_coeffs(f, 400);
  const auto direct = gegenbauer_coeffs(f, 2, 10);
  double previous = 1.0;
  for (int k : {40, 100, 190}) {
    const auto lf = legendre_from_fourier(s1, 10, k);
    double err = 0.0;
    for (int n = 0; n <= 10; ++n) err = std::max(err, std::abs(lf.sequence.coeffs[n] - direct.coeffs[n]));
    EXPECT_LT(err, previous) << k;
    previous = err;
    if (k == 40) EXPECT_LT(err, 1e-5);
    if (k == 100) EXPECT_LT(err, 1e-6);
    ASSERT_EQ(lf.tail_residual.size(), 11u);
    for (double r : lf.tail_residual) EXPECT_GE(r, 0.0);
  }
}

TEST(Reconstruct, Basics) {
  const auto s = gegenbauer_coeffs(as_function(default_spec(Family::askey)), 3, 80);
  EXPECT_NEAR(reconstruct(s, 0.0), s.partial_mass(), 1e-13);
  const auto c2 = gegenbauer_coeffs(kCos2, 3, 8);
  for (int i = 0; i <= 50; ++i) {
    const double th = kPi * i / 50;
    EXPECT_NEAR(reconstruct(c2, th), std::cos(th) * std::cos(th), 1e-12);
  }
  EXPECT_THROW(reconstruct(s, -0.1), std::domain_error);
  EXPECT_THROW(reconstruct(s, 3.2), std::domain_error);
}

TEST(Reconstruct, SinePowerErrorIsTheTailMass) {
  // With nonnegative coefficients the sup error of the partial sum equals the
  // tail mass, attained at theta = 0. For alpha = 1 the tail decays like 1/N.
  const auto f = as_function(parse_kernel("sine_power:alpha=1"));
  double previous = 1.0;
  for (int n : {50, 100, 200}) {
    const auto s = gegenbauer_coeffs(f, 2, n);
    const double tail = 1.0 - s.partial_mass();
    double err = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double th = kPi * i / 1000;
      err = std::max(err, std::abs(reconstruct(s, th) - f.psi(th)));
    }
    EXPECT_LE(err, tail + 1e-10);
    EXPECT_NEAR(err, tail, 1e-10);
    EXPECT_LT(err, previous);
    previous = err;
    if (n == 100) EXPECT_NEAR(err, 4.95e-3, 1e-4);
  }
}

TEST(Reconstruct, ConvergesWithTruncation) {
  for (const char* text : {"powered_exponential:c=1,alpha=0.5", "wendland_c2:c=2,tau=4", "gaspari_cohn:c=2"}) {
    const auto f = as_function(parse_kernel(text));
    double previous = 1.0;
    for (int n : {25, 50, 100, 200}) {
      const auto s = gegenbauer_coeffs(f, 2, n);
      double err = 0.0;
      for (int i = 0; i <= 400; ++i) err = std::max(err, std::abs(reconstruct(s, kPi * i / 400) - f.psi(kPi * i / 400)));
      EXPECT_LT(err, previous) << text << ' ' << n;
      previous = err;
    }
  }
}

TEST(Normalization, PartialMassBelowOne) {
  for (const auto& spec : valid_catalog()) {
    for (int d : {1, 2, 3}) {
      const auto s = schoenberg_coeffs(as_function(spec), d, 200);
      EXPECT_GE(s.partial_mass(), 0.0);
      EXPECT_LE(s.partial_mass(), 1.0 + 1e-6) << to_string(spec) << ' ' << d;
      for (double b : s.coeffs) EXPECT_GE(b, -1e-9) << to_string(spec) << ' ' << d;
    }
  }
}

TEST(Membership, Examples) {
  const auto pe = membership(as_function(parse_kernel("powered_exponential:c=1,alpha=0.5")), 2, 100);
  // alpha = 0.5 decays slowly: the tail after N = 100 is still about 0.06, so
  // the verdict cannot be PASS at tail_tol = 1e-3, but it must not be FAIL.
  EXPECT_NE(pe.verdict, Verdict::fail);
  EXPECT_TRUE(pe.witness.empty());
  EXPECT_GE(pe.min_coefficient, -1e-9);
  EXPECT_EQ(pe.verdict, Verdict::inconclusive);
  EXPECT_GT(pe.tail_mass, 1e-3);
  const auto pe_far = membership(as_function(parse_kernel("powered_exponential:c=5,alpha=1")), 2, 200);
  EXPECT_EQ(pe_far.verdict, Verdict::pass);

  const auto bad = membership(as_function(parse_kernel("powered_exponential:c=1,alpha=2")), 1, 200);
  EXPECT_EQ(bad.verdict, Verdict::fail);
  ASSERT_FALSE(bad.witness.empty());
  EXPECT_EQ(bad.witness.front().first, 8);
  EXPECT_LT(bad.witness.front().second, -1e-6);

  const auto c = membership(kCos, 2, 50);
  EXPECT_EQ(c.verdict, Verdict::pass);
  EXPECT_EQ(c.strict_evidence.positive_even, 0);
  EXPECT_EQ(c.strict_evidence.positive_odd, 1);
  EXPECT_FALSE(c.strict_evidence.supports_strictness);
  MembershipOptions strict;
  strict.strict = true;
  EXPECT_EQ(membership(kCos, 2, 50, strict).verdict, Verdict::inconclusive);
  EXPECT_EQ(membership(as_function(default_spec(Family::wendland_c2)), 3, 200, strict).verdict, Verdict::pass);
}

TEST(Membership, MonotonicityDiagnostics) {
  const auto good = membership(as_function(default_spec(Family::askey)), 3, 100);
  ASSERT_TRUE(good.monotonicity);
  EXPECT_EQ(good.monotonicity->base_dimension, 1);
  EXPECT_TRUE(good.monotonicity->holds);
  EXPECT_FALSE(membership(kCos2, 2, 20).monotonicity);
  // Wendland with c > pi fails on the circle, so the step condition breaks.
  const auto bad = membership(as_function(parse_kernel("wendland_c2:c=5,tau=4")), 3, 100);
  ASSERT_TRUE(bad.monotonicity);
  const auto d5 = membership(as_function(default_spec(Family::multiquadric)), 5, 60);
  ASSERT_TRUE(d5.monotonicity);
  EXPECT_EQ(d5.monotonicity->base_dimension, 3);
  EXPECT_TRUE(d5.monotonicity->holds);
  // the step condition on the circle is equivalent to nonnegative d = 3
  // coefficients
  EXPECT_EQ(bad.monotonicity->holds, bad.min_coefficient >= 0.0);
}

TEST(Membership, Nesting) {
  for (const auto& spec : valid_catalog()) {
    for (int d = 1; d <= 3; ++d) {
      const auto hi = membership(as_function(spec), d + 2, 100);
      const auto lo = membership(as_function(spec), d, 100);
      if (hi.verdict == Verdict::pass) EXPECT_EQ(lo.verdict, Verdict::pass) << to_string(spec) << ' ' << d;
    }
  }
}

TEST(Strictness, Evidence) {
  const auto sp = strictness_evidence(gegenbauer_coeffs(as_function(parse_kernel("sine_power:alpha=1")), 2, 100));
  EXPECT_GE(sp.positive_even, 10);
  EXPECT_GE(sp.positive_odd, 10);
  EXPECT_TRUE(sp.supports_strictness);
  const auto mq = gegenbauer_coeffs(as_function(parse_kernel("multiquadric:tau=1,delta=0.5")), 2, 30);
  for (double b : mq.coeffs) EXPECT_GT(b, 0.0);
  EXPECT_TRUE(strictness_evidence(mq).supports_strictness);
  const auto c = strictness_evidence(fourier_coeffs(kCos, 40));
  EXPECT_TRUE(c.progression_checked);
  EXPECT_FALSE(c.supports_strictness);
  ASSERT_TRUE(c.missing_progression);
  // only b_1 is positive, so the even residues mod 2 are empty
  EXPECT_EQ(*c.missing_progression, std::make_pair(0, 2));
  // b_{n,1} > 0 for every n: all progressions are hit
  const auto askey = strictness_evidence(fourier_coeffs(as_function(parse_kernel("askey:c=3.141592653589793,tau=2")), 40));
  EXPECT_FALSE(askey.missing_progression);
  EXPECT_TRUE(askey.supports_strictness);
  EXPECT_STREQ(StrictnessEvidence::kLabel, "EVIDENCE");
}

TEST(SequenceCsv, RoundTrip) {
  const auto s = gegenbauer_coeffs(as_function(default_spec(Family::gaspari_cohn)), 3, 30);
  std::stringstream io;
  write_sequence_csv(io, s);
  const std::string text = io.str();
  EXPECT_EQ(text.rfind("#d=3\n#N=30\n", 0), 0u);
  EXPECT_NE(text.find("\nn,b\n"), std::string::npos);
  const auto back = read_sequence_csv(io);
  EXPECT_EQ(back.d, 3);
  EXPECT_EQ(back.quadrature_order, s.quadrature_order);
  EXPECT_EQ(back.source, s.source);
  EXPECT_EQ(back.coeffs, s.coeffs);
}

TEST(SequenceCsv, RejectsMalformed) {
  std::istringstream no_header("#d=2\n0,1\n");
  EXPECT_THROW(read_sequence_csv(no_header), std::invalid_argument);
  std::istringstream gap("n,b\n0,1\n2,0\n");
  EXPECT_THROW(read_sequence_csv(gap), std::invalid_argument);
  std::istringstream wrong_n("#N=3\nn,b\n0,1\n");
  EXPECT_THROW(read_sequence_csv(wrong_n), std::invalid_argument);
  std::istringstream bad_source("#source=guess\nn,b\n0,1\n");
  EXPECT_THROW(read_sequence_csv(bad_source), std::invalid_argument);
}
