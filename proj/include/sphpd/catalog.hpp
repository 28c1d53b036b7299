#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sphpd {

enum class Family {
  powered_exponential,
  matern,
  generalized_cauchy,
  dagum,
  multiquadric,
  sine_power,
  spherical,
  askey,
  wendland_c2,
  wendland_c4,
  gaspari_cohn,
  cosine,
};

std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);
const std::vector<Family>& all_families();

/// Names of the parameters a family takes, among c, alpha, nu, tau, delta.
const std::vector<std::string>& family_parameters(Family family);

/// A kernel family with its parameters. Angles and the scale c are radians.
class KernelSpec {
 public:
  /// Throws std::invalid_argument when a required parameter is missing,
  /// non-finite, or not one the family takes.
  KernelSpec(Family family, std::map<std::string, double> params);

  Family family() const { return family_; }
  const std::map<std::string, double>& params() const { return params_; }
  double param(const std::string& name) const;

  friend bool operator==(const KernelSpec&, const KernelSpec&) = default;

 private:
  Family family_;
  std::map<std::string, double> params_;
};

/// Parses `family:key=value,key=value` case-insensitively, e.g.
/// `matern:c=0.3,nu=0.5` or `cosine`.
KernelSpec parse_kernel(std::string_view text);

/// Inverse of parse_kernel; values printed with round-trip precision.
std::string to_string(const KernelSpec& spec);

/// Representative valid parameters for each family.
KernelSpec default_spec(Family family);

/// Sphere dimension d >= 1, or d = infinity.
class SphereDimension {
 public:
  explicit SphereDimension(int d);
  static SphereDimension infinity() { return SphereDimension(); }

  bool is_infinite() const { return infinite_; }
  int value() const { return d_; }
  bool at_most(int bound) const { return !infinite_ && d_ <= bound; }
  std::string to_string() const;

 private:
  SphereDimension() : d_(0), infinite_(true) {}
  int d_;
  bool infinite_;
};

struct ValidityVerdict {
  bool valid = false;
  bool strict = false;  // membership in the strictly positive definite class
  std::string rule;     // which result backs the verdict
  std::string reason;
};

/// Parameter-range verdict for membership of the kernel in Psi_d (strict
/// when `strict`). A negative verdict either cites a result that rules the
/// kernel out, or states that the range is not covered.
ValidityVerdict validate_params(const KernelSpec& spec, SphereDimension d);

/// psi(theta) for theta in [0, pi]. Invalid parameter ranges still evaluate.
/// Throws std::domain_error outside [0, pi].
double eval(const KernelSpec& spec, double theta);

/// True for the Euclidean families (powered exponential, Matern, generalized
/// Cauchy, Dagum, spherical, Askey, Wendland, Gaspari-Cohn).
bool has_radial_form(Family family);

/// phi(t) for t >= 0 with the Euclidean argument. Throws std::invalid_argument
/// for families without a radial form and std::domain_error for t < 0.
double eval_radial(const KernelSpec& spec, double t);

/// n-th derivative of phi at t > 0, exact up to rounding (Taylor-mode
/// differentiation of the closed form). Empty when no closed-form derivative
/// is available (Matern with nu != 1/2, non-radial families); order <= 4.
std::optional<double> radial_derivative(const KernelSpec& spec, int order, double t);

/// phi(2 sin(theta / 2)): the kernel evaluated at chordal distance.
/// Throws std::invalid_argument for families without a radial form.
double yadrenko(const KernelSpec& spec, double theta);

/// Tabulated fractal index, when the family has one.
std::optional<double> fractal_index_theoretical(const KernelSpec& spec);

/// Points in (0, pi) where the kernel is not smooth (support edge, and c/2 for
/// Gaspari-Cohn).
std::vector<double> breakpoints(const KernelSpec& spec);

/// Scale or support parameter c when the family has one.
std::optional<double> scale_parameter(const KernelSpec& spec);

/// Gaspari-Cohn piecewise polynomial; zero for t >= 1.
double gaspari_cohn_profile(double t);

struct FamilyInfo {
  Family family;
  std::string expression;
  std::string parameter_range;
  std::string classes;
};

/// One row per family, mirroring the published parameter-validity table.
const std::vector<FamilyInfo>& family_table();

}  // namespace sphpd
