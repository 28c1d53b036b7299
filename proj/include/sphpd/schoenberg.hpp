#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sphpd/catalog.hpp"
#include "sphpd/quadrature.hpp"

namespace sphpd {

/// A continuous function psi on [0, pi] together with the points where it is
/// not smooth. Coefficient quadrature splits and refines at the breakpoints
/// and at both ends of [0, pi].
struct IsotropicFunction {
  std::function<double(double)> psi;
  std::vector<double> breakpoints;
  std::string label;
};

IsotropicFunction as_function(const KernelSpec& spec);

enum class SequenceSource { direct_quadrature, recursion, analytic };

std::string_view to_string(SequenceSource source);
std::optional<SequenceSource> sequence_source_from_string(std::string_view text);

/// d-Schoenberg coefficients b_{0,d} .. b_{N,d} in the normalized expansion
///   psi(theta) = sum_n b_{n,d} C_n^{(d-1)/2}(cos theta) / C_n^{(d-1)/2}(1),
/// with the basis cos(n theta) when d == 1.
struct SchoenbergSequence {
  int d = 1;
  std::vector<double> coeffs;
  int quadrature_order = 0;  // number of quadrature nodes; 0 when not from quadrature
  SequenceSource source = SequenceSource::direct_quadrature;

  int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
  double partial_mass() const;
};

/// Thrown when the requested truncation exceeds what the quadrature resolves.
class QuadratureResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a recursion receives a sequence of the wrong dimension.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CoefficientOptions {
  int max_truncation = 4000;  // declared capacity of the quadrature
  PanelOptions panels{};      // max_frequency is overwritten from N and d
};

/// Fourier cosine coefficients (d = 1).
SchoenbergSequence fourier_coeffs(const IsotropicFunction& fn, int n_max,
                                  const CoefficientOptions& options = {});

/// Gegenbauer coefficients for d >= 2.
SchoenbergSequence gegenbauer_coeffs(const IsotropicFunction& fn, int d, int n_max,
                                     const CoefficientOptions& options = {});

/// fourier_coeffs for d == 1, gegenbauer_coeffs otherwise.
SchoenbergSequence schoenberg_coeffs(const IsotropicFunction& fn, int d, int n_max,
                                     const CoefficientOptions& options = {});

/// Default truncation: 200 for d <= 3, 100 above.
int default_truncation(int d);

/// d = 1 -> d = 3. Output truncation is N - 2.
SchoenbergSequence walk_1_to_3(const SchoenbergSequence& seq);

/// d -> d + 2 for d >= 2. Output truncation is N - 2.
SchoenbergSequence walk_d_to_d2(const SchoenbergSequence& seq);

/// d = 1 -> d = 5 in one step. Output truncation is N - 4.
SchoenbergSequence coeffs_d5_from_d1(const SchoenbergSequence& seq);

struct LegendreFromFourier {
  SchoenbergSequence sequence;      // d = 2
  std::vector<double> tail_residual;  // |last retained term| per n
};

/// Legendre (d = 2) coefficients from Fourier cosine coefficients through the
/// series in c_k^n, truncated after k = K. Needs N >= n_out + 2K + 2.
LegendreFromFourier legendre_from_fourier(const SchoenbergSequence& seq, int n_out, int k_max);

/// The weight c_k^n of the Fourier-to-Legendre series.
double fourier_legendre_weight(int n, int k);

/// Partial sum of the normalized expansion at theta in [0, pi].
double reconstruct(const SchoenbergSequence& seq, double theta);

// -----------------------------------------------------------------------------

struct StrictnessEvidence {
  static constexpr const char* kLabel = "EVIDENCE";

  int d = 1;
  int truncation = 0;
  double tolerance = 0.0;
  int positive_even = 0;
  int positive_odd = 0;
  int largest_positive_even = -1;
  int largest_positive_odd = -1;
  // d == 1: every residue class j mod n (0 <= j < n <= progression_limit)
  // holds a positive coefficient inside the window.
  bool progression_checked = false;
  int progression_limit = 0;
  std::optional<std::pair<int, int>> missing_progression;  // (j, n)
  bool supports_strictness = false;
};

StrictnessEvidence strictness_evidence(const SchoenbergSequence& seq, double tol = 1e-12,
                                       int progression_limit = 10, int min_count = 5);

enum class Verdict { pass, fail, inconclusive };
std::string_view to_string(Verdict verdict);

struct MembershipOptions {
  double tol_fail = 1e-6;
  double tol_pass = 1e-9;
  double tail_tol = 1e-3;
  double positive_tol = 1e-12;  // "strictly positive" threshold for evidence
  bool strict = false;          // ask for Psi_d^+ rather than Psi_d
  CoefficientOptions coefficients{};
};

/// Monotonicity conditions on the (d-2)-sequence that are equivalent to
/// membership in Psi_d (d = 3 from Fourier coefficients, d >= 4 from the
/// Gegenbauer coefficients of dimension d - 2).
struct MonotonicityDiagnostics {
  int base_dimension = 1;
  bool leading_condition = true;  // d == 3: b_{2,1} <= 2 b_{0,1}
  std::vector<int> violations;    // n where the step condition fails
  bool holds = true;
};

struct MembershipVerdict {
  Verdict verdict = Verdict::inconclusive;
  int d = 1;
  bool strict_requested = false;
  int truncation = 0;
  std::vector<std::pair<int, double>> witness;  // coefficients below -tol_fail
  double min_coefficient = 0.0;
  int min_index = 0;
  double tail_mass = 0.0;  // 1 - sum_{n <= N} b_{n,d}
  StrictnessEvidence strict_evidence;
  std::optional<MonotonicityDiagnostics> monotonicity;
  std::vector<std::string> notes;
  SchoenbergSequence sequence;
};

MembershipVerdict membership(const IsotropicFunction& fn, int d, int n_max,
                             const MembershipOptions& options = {});

// -----------------------------------------------------------------------------
// CSV: `#key=value` metadata lines (d, N, quadrature_order, source), header
// `n,b`, one row per coefficient.

void write_sequence_csv(std::ostream& out, const SchoenbergSequence& seq);
SchoenbergSequence read_sequence_csv(std::istream& in);

}  // namespace sphpd
