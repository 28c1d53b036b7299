#pragma once

#include <span>
#include <vector>

namespace sphpd {

/// Tuning for the composite rule used by the coefficient engine.
struct PanelOptions {
  int points_per_panel = 24;
  int grading_levels = 16;   // geometric panels toward each singular point
  double grading_ratio = 0.15;
  int max_frequency = 200;   // highest oscillation frequency to resolve
};

/// Composite Gauss-Legendre rule on [lo, hi].
///
/// The interval is cut at the given breakpoints. Every piece is covered by
/// uniform panels narrow enough for cos(max_frequency * t), and the panels
/// touching a piece boundary are replaced by a geometric cascade. This keeps
/// the rule exponentially convergent for integrands with algebraic endpoint
/// behaviour such as t^alpha or (c - t)_+^tau.
struct PanelRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

PanelRule make_panel_rule(double lo, double hi, std::span<const double> breakpoints,
                          const PanelOptions& options = {});

}  // namespace sphpd
