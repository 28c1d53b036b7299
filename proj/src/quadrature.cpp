#include "sphpd/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sphpd/special_fn.hpp"

namespace sphpd {

namespace {

void add_panel(const QuadratureRule& gl, double a, double b, PanelRule& out) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (int i = 0; i < gl.order; ++i) {
    out.nodes.push_back(mid + half * gl.nodes[i]);
    out.weights.push_back(half * gl.weights[i]);
  }
}

// Panels on [a, a + w] refined geometrically toward a (toward_lo) or on
// [b - w, b] refined toward b.
void add_graded(const QuadratureRule& gl, double anchor, double w, bool toward_lo,
                const PanelOptions& opt, PanelRule& out) {
  double outer = w;
  for (int level = 0; level < opt.grading_levels; ++level) {
    const double inner = outer * opt.grading_ratio;
    if (toward_lo) {
      add_panel(gl, anchor + inner, anchor + outer, out);
    } else {
      add_panel(gl, anchor - outer, anchor - inner, out);
    }
    outer = inner;
  }
  if (toward_lo) {
    add_panel(gl, anchor, anchor + outer, out);
  } else {
    add_panel(gl, anchor - outer, anchor, out);
  }
}

}  // namespace

PanelRule make_panel_rule(double lo, double hi, std::span<const double> breakpoints,
                          const PanelOptions& options) {
  if (!(hi > lo)) throw std::invalid_argument("make_panel_rule: empty interval");
  if (options.points_per_panel < 2 || options.grading_levels < 0 ||
      !(options.grading_ratio > 0.0 && options.grading_ratio < 1.0)) {
    throw std::invalid_argument("make_panel_rule: bad options");
  }
  std::vector<double> cuts{lo};
  for (double b : breakpoints) {
    if (b > lo && b < hi) cuts.push_back(b);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double x, double y) { return std::abs(x - y) < 1e-14; }),
             cuts.end());

  const QuadratureRule gl = gauss_legendre(options.points_per_panel);
  // A 24-point panel integrates cos(f t) to near machine precision when
  // f * width stays below ~16.
  const double max_width =
      std::min(0.5, 16.0 / std::max(1, options.max_frequency));

  PanelRule rule;
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    const double a = cuts[p];
    const double b = cuts[p + 1];
    const double len = b - a;
    int panels = static_cast<int>(std::ceil(len / max_width));
    panels = std::max(panels, 2);
    const double w = len / panels;
    add_graded(gl, a, w, true, options, rule);
    for (int k = 1; k + 1 < panels; ++k) add_panel(gl, a + k * w, a + (k + 1) * w, rule);
    add_graded(gl, b, w, false, options, rule);
  }
  return rule;
}

}  // namespace sphpd
