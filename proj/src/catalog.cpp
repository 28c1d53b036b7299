#include "sphpd/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "sphpd/special_fn.hpp"
#include "taylor.hpp"

namespace sphpd {

namespace {

constexpr double kPi = std::numbers::pi;

struct FamilyMeta {
  Family family;
  std::string_view name;
  std::vector<std::string> params;
};

const std::vector<FamilyMeta>& meta() {
  static const std::vector<FamilyMeta> table = {
      {Family::powered_exponential, "powered_exponential", {"c", "alpha"}},
      {Family::matern, "matern", {"c", "nu"}},
      {Family::generalized_cauchy, "generalized_cauchy", {"c", "alpha", "tau"}},
      {Family::dagum, "dagum", {"c", "tau", "alpha"}},
      {Family::multiquadric, "multiquadric", {"tau", "delta"}},
      {Family::sine_power, "sine_power", {"alpha"}},
      {Family::spherical, "spherical", {"c"}},
      {Family::askey, "askey", {"c", "tau"}},
      {Family::wendland_c2, "wendland_c2", {"c", "tau"}},
      {Family::wendland_c4, "wendland_c4", {"c", "tau"}},
      {Family::gaspari_cohn, "gaspari_cohn", {"c"}},
      {Family::cosine, "cosine", {}},
  };
  return table;
}

const FamilyMeta& meta_of(Family f) {
  for (const auto& m : meta()) {
    if (m.family == f) return m;
  }
  throw std::invalid_argument("unknown kernel family");
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Closed forms on the Euclidean argument, shared by the double path and the
// Taylor-mode derivative path. `x` is t / c for the scaled families.
template <class T>
T radial_profile(const KernelSpec& spec, const T& t) {
  using detail::pow_plus;
  using std::exp;
  const Family f = spec.family();
  switch (f) {
    case Family::powered_exponential: {
      const double c = spec.param("c");
      const double a = spec.param("alpha");
      return exp(-pow_plus(t / T(c), a));
    }
    case Family::generalized_cauchy: {
      const double c = spec.param("c");
      const double a = spec.param("alpha");
      const double tau = spec.param("tau");
      return pow_plus(T(1.0) + pow_plus(t / T(c), a), -tau / a);
    }
    case Family::dagum: {
      // 1 - ((x^tau) / (1 + x)^tau)^(alpha / tau) = 1 - (x / (1 + x))^alpha
      const double c = spec.param("c");
      const double a = spec.param("alpha");
      const T x = t / T(c);
      return T(1.0) - pow_plus(x / (T(1.0) + x), a);
    }
    case Family::spherical: {
      const T x = t / T(spec.param("c"));
      return (T(1.0) + T(0.5) * x) * pow_plus(T(1.0) - x, 2.0);
    }
    case Family::askey: {
      const T x = t / T(spec.param("c"));
      return pow_plus(T(1.0) - x, spec.param("tau"));
    }
    case Family::wendland_c2: {
      const double tau = spec.param("tau");
      const T x = t / T(spec.param("c"));
      return (T(1.0) + T(tau) * x) * pow_plus(T(1.0) - x, tau);
    }
    case Family::wendland_c4: {
      const double tau = spec.param("tau");
      const T x = t / T(spec.param("c"));
      return (T(1.0) + T(tau) * x + T((tau * tau - 1.0) / 3.0) * x * x) *
             pow_plus(T(1.0) - x, tau);
    }
    case Family::gaspari_cohn: {
      const T x = t / T(spec.param("c"));
      const double xv = detail::value_of(x);
      if (xv >= 1.0) return T(0.0);
      if (xv <= 0.5) {
        const T x2 = x * x;
        const T x3 = x2 * x;
        return T(1.0) - T(20.0 / 3.0) * x2 + T(5.0) * x3 + T(8.0) * x2 * x2 - T(8.0) * x2 * x3;
      }
      const T one_minus = T(1.0) - x;
      const T q = one_minus * one_minus;
      return (T(8.0) * x * x + T(8.0) * x - T(1.0)) * q * q / (T(3.0) * x);
    }
    case Family::matern: {
      // only reachable for nu == 1/2 on the Taylor path
      return exp(-(t / T(spec.param("c"))));
    }
    default:
      throw std::invalid_argument(std::string(family_name(f)) + " has no radial form");
  }
}

double matern_value(double nu, double x) {
  if (x == 0.0) return 1.0;
  if (x < kBesselKFloor) {
    // small-argument limit
    if (nu < 1.0) {
      return 1.0 - std::tgamma(1.0 - nu) / std::tgamma(1.0 + nu) * std::pow(0.5 * x, 2.0 * nu);
    }
    return 1.0;
  }
  if (x > 700.0) return 0.0;
  const double logpre = (1.0 - nu) * std::log(2.0) - std::lgamma(nu) + nu * std::log(x);
  return std::exp(logpre) * bessel_k(nu, x);
}

void require_positive(const KernelSpec& spec, const std::string& name) {
  if (!(spec.param(name) > 0.0)) {
    throw std::invalid_argument(std::string(family_name(spec.family())) + ": parameter " + name +
                                " must be positive");
  }
}

ValidityVerdict yes(bool strict, std::string rule, std::string reason) {
  return {true, strict, std::move(rule), std::move(reason)};
}

ValidityVerdict no(std::string rule, std::string reason) {
  return {false, false, std::move(rule), std::move(reason)};
}

}  // namespace

// -----------------------------------------------------------------------------

std::string_view family_name(Family family) { return meta_of(family).name; }

std::optional<Family> family_from_name(std::string_view name) {
  const std::string key = lower(trim(name));
  for (const auto& m : meta()) {
    if (m.name == key) return m.family;
  }
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> out;
    for (const auto& m : meta()) out.push_back(m.family);
    return out;
  }();
  return families;
}

const std::vector<std::string>& family_parameters(Family family) { return meta_of(family).params; }

KernelSpec::KernelSpec(Family family, std::map<std::string, double> params)
    : family_(family), params_(std::move(params)) {
  const auto& wanted = family_parameters(family);
  const std::string fname(family_name(family));
  for (const auto& [key, value] : params_) {
    if (std::find(wanted.begin(), wanted.end(), key) == wanted.end()) {
      throw std::invalid_argument(fname + " does not take parameter '" + key + "'");
    }
    if (!std::isfinite(value)) {
      throw std::invalid_argument(fname + ": parameter " + key + " is not finite");
    }
  }
  for (const auto& key : wanted) {
    if (!params_.count(key)) throw std::invalid_argument(fname + ": missing parameter " + key);
  }
  for (const char* key : {"c", "alpha", "nu", "tau"}) {
    if (params_.count(key)) require_positive(*this, key);
  }
  if (params_.count("delta")) {
    const double delta = params_.at("delta");
    if (!(delta >= 0.0 && delta < 1.0)) {
      throw std::invalid_argument(fname + ": parameter delta must lie in [0, 1)");
    }
  }
}

double KernelSpec::param(const std::string& name) const {
  auto it = params_.find(name);
  if (it == params_.end()) {
    throw std::invalid_argument(std::string(family_name(family_)) + ": missing parameter " + name);
  }
  return it->second;
}

KernelSpec parse_kernel(std::string_view text) {
  const std::string s = trim(text);
  const auto colon = s.find(':');
  const std::string name = s.substr(0, colon);
  const auto family = family_from_name(name);
  if (!family) throw std::invalid_argument("unknown kernel family '" + name + "'");

  std::map<std::string, double> params;
  if (colon != std::string::npos) {
    std::string rest = s.substr(colon + 1);
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const std::string kv = trim(item);
      if (kv.empty()) continue;
      const auto eq = kv.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("kernel parameter '" + kv + "' is not of the form key=value");
      }
      const std::string key = lower(trim(kv.substr(0, eq)));
      const std::string val = trim(kv.substr(eq + 1));
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
      if (ec != std::errc() || ptr != val.data() + val.size()) {
        throw std::invalid_argument("kernel parameter '" + key + "' has non-numeric value '" + val + "'");
      }
      if (params.count(key)) throw std::invalid_argument("duplicate kernel parameter '" + key + "'");
      params[key] = v;
    }
  }
  return KernelSpec(*family, std::move(params));
}

std::string to_string(const KernelSpec& spec) {
  std::string out(family_name(spec.family()));
  bool first = true;
  for (const auto& key : family_parameters(spec.family())) {
    out += first ? ":" : ",";
    first = false;
    out += key + "=" + fmt(spec.param(key));
  }
  return out;
}

KernelSpec default_spec(Family family) {
  switch (family) {
    case Family::powered_exponential: return KernelSpec(family, {{"c", 1.0}, {"alpha", 0.5}});
    case Family::matern: return KernelSpec(family, {{"c", 1.0}, {"nu", 0.5}});
    case Family::generalized_cauchy:
      return KernelSpec(family, {{"c", 1.0}, {"alpha", 1.0}, {"tau", 1.0}});
    case Family::dagum: return KernelSpec(family, {{"c", 1.0}, {"tau", 1.0}, {"alpha", 0.5}});
    case Family::multiquadric: return KernelSpec(family, {{"tau", 1.0}, {"delta", 0.5}});
    case Family::sine_power: return KernelSpec(family, {{"alpha", 1.0}});
    case Family::spherical: return KernelSpec(family, {{"c", 2.0}});
    case Family::askey: return KernelSpec(family, {{"c", 2.0}, {"tau", 2.0}});
    case Family::wendland_c2: return KernelSpec(family, {{"c", 2.0}, {"tau", 4.0}});
    case Family::wendland_c4: return KernelSpec(family, {{"c", 2.0}, {"tau", 6.0}});
    case Family::gaspari_cohn: return KernelSpec(family, {{"c", 2.0}});
    case Family::cosine: return KernelSpec(family, {});
  }
  throw std::invalid_argument("unknown kernel family");
}

// -----------------------------------------------------------------------------

SphereDimension::SphereDimension(int d) : d_(d), infinite_(false) {
  if (d < 1) throw std::invalid_argument("sphere dimension must be at least 1");
}

std::string SphereDimension::to_string() const { return infinite_ ? "inf" : std::to_string(d_); }

ValidityVerdict validate_params(const KernelSpec& spec, SphereDimension d) {
  const auto p = [&](const char* k) { return spec.param(k); };
  const bool low_dim = d.at_most(3);
  switch (spec.family()) {
    case Family::powered_exponential:
      if (p("alpha") <= 1.0) {
        return yes(true, "completely monotone (Psi_inf^+)", "alpha in (0,1], any c > 0");
      }
      return no("necessary conditions, powered exponential example",
                "alpha > 1: not positive definite on any sphere");
    case Family::matern:
      if (p("nu") <= 0.5) {
        return yes(true, "completely monotone (Psi_inf^+)", "nu in (0,1/2], any c > 0");
      }
      return no("necessary conditions, Matern example",
                "nu > 1/2: not positive definite on any sphere");
    case Family::generalized_cauchy:
      if (p("alpha") <= 1.0) {
        return yes(true, "completely monotone (Psi_inf^+)", "alpha in (0,1], tau > 0, any c > 0");
      }
      return no("necessary conditions, generalized Cauchy example",
                "alpha > 1: not positive definite on any sphere");
    case Family::dagum:
      if (p("tau") <= 1.0 && p("alpha") < p("tau")) {
        return yes(true, "completely monotone (Psi_inf^+)", "tau in (0,1], alpha in (0,tau), any c > 0");
      }
      return no("Dagum parameter range", "outside tau in (0,1], alpha in (0,tau): membership not established");
    case Family::multiquadric:
      return yes(true, "power series in cos(theta) with positive coefficients (Psi_inf^+)",
                 "tau > 0, delta in (0,1)");
    case Family::sine_power:
      if (p("alpha") < 2.0) {
        return yes(true, "power series in cos(theta) with positive coefficients (Psi_inf^+)",
                   "alpha in (0,2)");
      }
      if (p("alpha") == 2.0) {
        return yes(false, "power series in cos(theta) (Psi_inf^-)",
                   "alpha = 2 gives (1 + cos theta)/2, non-strict");
      }
      return no("sine power parameter range", "alpha > 2: membership not established");
    case Family::spherical:
      if (low_dim) {
        return yes(true, p("c") <= kPi ? "compact support in Phi_3 with c <= pi (Psi_3^+)"
                                       : "spherical family for all c > 0 (Psi_3^+)",
                   "c > 0, d <= 3");
      }
      return no("spherical family", "d > 3: membership not established");
    case Family::askey:
      if (p("tau") < 2.0) return no("Askey parameter range", "tau < 2: membership not established");
      if (low_dim) {
        return yes(true, "Polya criterion on S^3 (Psi_3^+)", "tau >= 2, any c > 0, d <= 3");
      }
      return no("Askey family", "d > 3: membership not established");
    case Family::wendland_c2:
    case Family::wendland_c4: {
      const double tau_min = spec.family() == Family::wendland_c2 ? 4.0 : 6.0;
      const std::string fam(family_name(spec.family()));
      if (p("tau") < tau_min) {
        return no(fam + " parameter range", "tau below " + fmt(tau_min) + ": membership not established");
      }
      if (p("c") > kPi) {
        return no("necessary conditions (odd derivative at pi)", "c > pi: not positive definite on the circle");
      }
      if (low_dim) return yes(true, "compact support in Phi_3 with c <= pi (Psi_3^+)", "c in (0,pi], d <= 3");
      return no(fam, "d > 3: membership not established");
    }
    case Family::gaspari_cohn:
      if (p("c") > kPi) return no("Gaspari-Cohn support", "c > pi: membership not established");
      if (low_dim) return yes(true, "compact support in Phi_3 with c <= pi (Psi_3^+)", "c in (0,pi], d <= 3");
      return no("Gaspari-Cohn", "d > 3: membership not established");
    case Family::cosine:
      return yes(false, "Gegenbauer function of degree 1 (Psi_inf^-)", "non-strict in every dimension");
  }
  throw std::invalid_argument("unknown kernel family");
}

// -----------------------------------------------------------------------------

bool has_radial_form(Family family) {
  switch (family) {
    case Family::multiquadric:
    case Family::sine_power:
    case Family::cosine:
      return false;
    default:
      return true;
  }
}

double eval_radial(const KernelSpec& spec, double t) {
  if (!(t >= 0.0)) throw std::domain_error("radial argument must be nonnegative");
  if (!has_radial_form(spec.family())) {
    throw std::invalid_argument(std::string(family_name(spec.family())) + " has no radial form");
  }
  if (t == 0.0) return 1.0;
  if (spec.family() == Family::matern) return matern_value(spec.param("nu"), t / spec.param("c"));
  return radial_profile<double>(spec, t);
}

std::optional<double> radial_derivative(const KernelSpec& spec, int order, double t) {
  if (order < 0 || order > 4) throw std::invalid_argument("radial_derivative: order must be in [0, 4]");
  if (!(t > 0.0)) throw std::domain_error("radial_derivative: t must be positive");
  if (!has_radial_form(spec.family())) return std::nullopt;
  if (spec.family() == Family::matern && spec.param("nu") != 0.5) return std::nullopt;
  using J = detail::Taylor<4>;
  const J y = radial_profile<J>(spec, J::variable(t));
  double fact = 1.0;
  for (int k = 2; k <= order; ++k) fact *= k;
  return y.coef[order] * fact;
}

double eval(const KernelSpec& spec, double theta) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::domain_error("great circle distance must lie in [0, pi], got " + fmt(theta));
  }
  if (theta == 0.0) return 1.0;
  switch (spec.family()) {
    case Family::multiquadric: {
      const double tau = spec.param("tau");
      const double delta = spec.param("delta");
      return std::pow(1.0 - delta, 2.0 * tau) /
             std::pow(1.0 + delta * delta - 2.0 * delta * std::cos(theta), tau);
    }
    case Family::sine_power:
      return 1.0 - std::pow(std::sin(0.5 * theta), spec.param("alpha"));
    case Family::cosine:
      return std::cos(theta);
    default:
      return eval_radial(spec, theta);
  }
}

double yadrenko(const KernelSpec& spec, double theta) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::domain_error("great circle distance must lie in [0, pi], got " + fmt(theta));
  }
  return eval_radial(spec, 2.0 * std::sin(0.5 * theta));
}

std::optional<double> fractal_index_theoretical(const KernelSpec& spec) {
  switch (spec.family()) {
    case Family::powered_exponential:
    case Family::generalized_cauchy:
    case Family::dagum:
    case Family::sine_power:
      return spec.param("alpha");
    case Family::matern:
      return std::min(2.0 * spec.param("nu"), 2.0);
    case Family::spherical:
    case Family::askey:
      return 1.0;
    case Family::wendland_c2:
    case Family::wendland_c4:
      return 2.0;
    default:
      return std::nullopt;
  }
}

std::vector<double> breakpoints(const KernelSpec& spec) {
  std::vector<double> out;
  switch (spec.family()) {
    case Family::spherical:
    case Family::askey:
    case Family::wendland_c2:
    case Family::wendland_c4:
      if (spec.param("c") < kPi) out.push_back(spec.param("c"));
      break;
    case Family::gaspari_cohn: {
      const double c = spec.param("c");
      if (0.5 * c < kPi) out.push_back(0.5 * c);
      if (c < kPi) out.push_back(c);
      break;
    }
    default:
      break;
  }
  return out;
}

std::optional<double> scale_parameter(const KernelSpec& spec) {
  if (spec.params().count("c")) return spec.param("c");
  return std::nullopt;
}

double gaspari_cohn_profile(double t) {
  return radial_profile<double>(KernelSpec(Family::gaspari_cohn, {{"c", 1.0}}), std::abs(t));
}

const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> table = {
      {Family::powered_exponential, "exp(-(theta/c)^alpha)", "c > 0; alpha in (0,1]", "Psi_inf^+"},
      {Family::matern, "2^(1-nu)/Gamma(nu) (theta/c)^nu K_nu(theta/c)", "c > 0; nu in (0,1/2]",
       "Psi_inf^+"},
      {Family::generalized_cauchy, "(1 + (theta/c)^alpha)^(-tau/alpha)",
       "c > 0; tau > 0; alpha in (0,1]", "Psi_inf^+"},
      {Family::dagum, "1 - ((theta/c)^tau / (1 + theta/c)^tau)^(alpha/tau)",
       "c > 0; tau in (0,1]; alpha in (0,tau)", "Psi_inf^+"},
      {Family::multiquadric, "(1-delta)^(2 tau) / (1 + delta^2 - 2 delta cos theta)^tau",
       "tau > 0; delta in (0,1)", "Psi_inf^+"},
      {Family::sine_power, "1 - sin(theta/2)^alpha", "alpha in (0,2)", "Psi_inf^+"},
      {Family::spherical, "(1 + theta/(2c)) (1 - theta/c)_+^2", "c > 0", "Psi_3^+"},
      {Family::askey, "(1 - theta/c)_+^tau", "c > 0; tau >= 2", "Psi_3^+"},
      {Family::wendland_c2, "(1 + tau theta/c) (1 - theta/c)_+^tau", "c in (0,pi]; tau >= 4",
       "Psi_3^+"},
      {Family::wendland_c4, "(1 + tau theta/c + (tau^2-1)/3 theta^2/c^2) (1 - theta/c)_+^tau",
       "c in (0,pi]; tau >= 6", "Psi_3^+"},
      {Family::gaspari_cohn, "phi_GC(theta/c), piecewise quintic", "c in (0,pi]", "Psi_3^+"},
      {Family::cosine, "cos(theta)", "none", "Psi_inf^-"},
  };
  return table;
}

}  // namespace sphpd
