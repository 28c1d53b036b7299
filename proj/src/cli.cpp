#include "sphpd/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphpd/apps.hpp"
#include "sphpd/catalog.hpp"
#include "sphpd/criteria.hpp"
#include "sphpd/schoenberg.hpp"
#include "sphpd/verify.hpp"

namespace sphpd::cli {

namespace {

constexpr double kPi = std::numbers::pi;

// Problems with the command line itself that CLI11 cannot see (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Cell = std::variant<double, long long, std::string, bool>;

// One result table; CSV and JSON render the same fields.
struct Table {
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_cell(const Cell& cell) {
  if (auto d = std::get_if<double>(&cell)) return format_double(*d);
  if (auto i = std::get_if<long long>(&cell)) return std::to_string(*i);
  if (auto b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
  const auto& s = std::get<std::string>(cell);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

nlohmann::ordered_json json_cell(const Cell& cell) {
  if (auto d = std::get_if<double>(&cell)) {
    return std::isfinite(*d) ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(nullptr);
  }
  if (auto i = std::get_if<long long>(&cell)) return *i;
  if (auto b = std::get_if<bool>(&cell)) return *b;
  return std::get<std::string>(cell);
}

void emit(std::ostream& out, const Table& t, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : t.meta) j[k] = json_cell(v);
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json r;
      for (std::size_t c = 0; c < t.columns.size(); ++c) r[t.columns[c]] = json_cell(row[c]);
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& [k, v] : t.meta) out << '#' << k << '=' << csv_cell(v) << '\n';
  for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
    out << '\n';
  }
}

Table sequence_table(const SchoenbergSequence& seq) {
  Table t;
  t.meta = {{"d", static_cast<long long>(seq.d)},
            {"N", static_cast<long long>(seq.truncation())},
            {"quadrature_order", static_cast<long long>(seq.quadrature_order)},
            {"source", std::string(to_string(seq.source))}};
  t.columns = {"n", "b"};
  for (int n = 0; n <= seq.truncation(); ++n) t.rows.push_back({static_cast<long long>(n), seq.coeffs[n]});
  return t;
}

std::vector<double> parse_grid(const std::string& text, double unit) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3) throw UsageError("--grid expects start:stop:count");
  double start = 0.0;
  double stop = 0.0;
  long count = 0;
  try {
    std::size_t pos = 0;
    start = std::stod(parts[0], &pos);
    if (pos != parts[0].size()) throw std::invalid_argument("");
    stop = std::stod(parts[1], &pos);
    if (pos != parts[1].size()) throw std::invalid_argument("");
    count = std::stol(parts[2], &pos);
    if (pos != parts[2].size()) throw std::invalid_argument("");
  } catch (const std::logic_error&) {
    throw UsageError("--grid expects start:stop:count with numeric fields");
  }
  if (count < 1) throw UsageError("--grid count must be at least 1");
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    grid[i] = unit * (count == 1 ? start : start + (stop - start) * static_cast<double>(i) / (count - 1));
  }
  return grid;
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return in;
}

// Point file with an optional trailing `value` column (interpolation data).
SpherePointSet read_points(const std::string& path, std::vector<double>* values) {
  auto in = open_file(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (!values) {
    std::istringstream s(text);
    return read_points_csv(s);
  }
  std::istringstream lines(text);
  std::ostringstream stripped;
  std::string line;
  bool header_seen = false;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    const auto comma = line.rfind(',');
    if (comma == std::string::npos) throw std::invalid_argument(path + ": expected a value column");
    std::string last = line.substr(comma + 1);
    last.erase(std::remove_if(last.begin(), last.end(), [](char c) { return c == ' ' || c == '\r'; }),
               last.end());
    if (!header_seen) {
      if (last != "value") throw std::invalid_argument(path + ": last column must be 'value'");
      header_seen = true;
    } else {
      try {
        values->push_back(std::stod(last));
      } catch (const std::logic_error&) {
        throw std::invalid_argument(path + ": unparseable value '" + last + "'");
      }
    }
    stripped << line.substr(0, comma) << '\n';
  }
  std::istringstream s(stripped.str());
  return read_points_csv(s);
}

struct PointSource {
  std::string file;
  std::string scheme = "uniform_random";
  int count = 200;
  int dim = 2;
  std::uint64_t seed = 0;

  SpherePointSet load() const {
    if (!file.empty()) return read_points(file, nullptr);
    auto s = point_scheme_from_string(scheme);
    if (!s) throw UsageError("unknown --scheme '" + scheme + "'");
    return sample_points(dim, count, *s, seed);
  }
};

void add_point_source(CLI::App* sub, PointSource& src) {
  sub->add_option("--points", src.file, "point CSV (lat_deg,lon_deg or x0..xd)");
  sub->add_option("--scheme", src.scheme, "uniform_random, fibonacci_s2 or equator")->capture_default_str();
  sub->add_option("--count", src.count, "number of generated points")->capture_default_str();
  sub->add_option("--dim", src.dim, "sphere dimension of generated points")->capture_default_str();
  sub->add_option("--seed", src.seed, "seed for uniform_random")->capture_default_str();
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string format_violations(const std::vector<double>& v, std::size_t limit = 10) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < std::min(v.size(), limit); ++i) parts.push_back(format_double(v[i]));
  if (v.size() > limit) parts.push_back("...");
  return join(parts, ";");
}

// Walk a sequence from its dimension to `target` by the available recursions.
SchoenbergSequence walk_to(SchoenbergSequence seq, int target, int k_cutoff, double* max_tail) {
  if (target < seq.d) throw std::invalid_argument("walks only go up in dimension");
  if (seq.d == 1 && target % 2 == 0) {
    const int n_out = seq.truncation() - 2 * k_cutoff - 2;
    if (n_out < 0) throw std::invalid_argument("truncation too small for the Legendre cutoff --k");
    auto lf = legendre_from_fourier(seq, n_out, k_cutoff);
    *max_tail = *std::max_element(lf.tail_residual.begin(), lf.tail_residual.end());
    seq = std::move(lf.sequence);
  }
  if (seq.d == 1 && target == 5) return coeffs_d5_from_d1(seq);
  if (seq.d == 1 && target > 1) seq = walk_1_to_3(seq);
  if ((target - seq.d) % 2 != 0) {
    throw std::invalid_argument("from d=" + std::to_string(seq.d) + " the walks reach d+2, d+4, ...");
  }
  while (seq.d < target) seq = walk_d_to_d2(seq);
  return seq;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positive definite functions on spheres: kernels, Schoenberg coefficients, checks"};
  app.name("sphpd");
  app.require_subcommand(1);

  std::string format = "csv";
  bool degrees = false;
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_flag("--degrees", degrees, "angle inputs (theta, --grid, --c) in degrees");

  std::string kernel_text;
  std::string coeffs_file;
  std::vector<double> thetas;
  std::string grid_text;
  int dim = 2;
  int n_trunc = -1;
  double tol = -1.0;
  bool strict = false;
  int target = 3;
  int k_cutoff = 40;
  std::string criterion = "polya_circle";
  int order = 1;
  int grid_size = -1;
  PointSource points;
  std::string targets_file;
  double ridge = 0.0;
  int samples = 1;
  std::uint64_t seed = 0;
  double support = kPi / 2;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a kernel or a coefficient file at angles");
  eval_cmd->add_option("--kernel", kernel_text, "family:key=value,...");
  eval_cmd->add_option("--coeffs", coeffs_file, "sequence CSV to reconstruct from");
  eval_cmd->add_option("--theta", thetas, "great circle distances");
  eval_cmd->add_option("--grid", grid_text, "start:stop:count");

  auto* coeffs_cmd = app.add_subcommand("coeffs", "d-Schoenberg coefficients by quadrature");
  coeffs_cmd->add_option("--kernel", kernel_text)->required();
  coeffs_cmd->add_option("--dim", dim, "sphere dimension d")->capture_default_str();
  coeffs_cmd->add_option("--n", n_trunc, "truncation N (default 200 for d<=3, else 100)");

  auto* walk_cmd = app.add_subcommand("walk", "dimension walk by recursion");
  walk_cmd->add_option("--kernel", kernel_text);
  walk_cmd->add_option("--coeffs", coeffs_file, "input sequence CSV instead of a kernel");
  walk_cmd->add_option("--dim", dim, "dimension of the starting sequence")->capture_default_str();
  walk_cmd->add_option("--to", target, "target dimension")->capture_default_str();
  walk_cmd->add_option("--n", n_trunc, "truncation N of the starting sequence");
  walk_cmd->add_option("--k", k_cutoff, "series cutoff K for d=1 -> d=2")->capture_default_str();

  auto* member_cmd = app.add_subcommand("member", "membership verdict for Psi_d or Psi_d^+");
  member_cmd->add_option("--kernel", kernel_text)->required();
  member_cmd->add_option("--dim", dim)->capture_default_str();
  member_cmd->add_option("--n", n_trunc);
  member_cmd->add_option("--tol", tol, "tol_fail (default 1e-6)");
  member_cmd->add_flag("--strict", strict, "ask for strict positive definiteness");

  auto* criteria_cmd = app.add_subcommand("criteria", "Polya-type sufficient conditions on a grid");
  criteria_cmd->add_option("--kernel", kernel_text)->required();
  criteria_cmd->add_option("--criterion", criterion)
      ->check(CLI::IsMember({"polya_circle", "polya_s3", "polya_2n1"}))
      ->capture_default_str();
  criteria_cmd->add_option("--order", order, "n for polya_2n1")->capture_default_str();
  criteria_cmd->add_option("--grid-size", grid_size);
  criteria_cmd->add_option("--tol", tol, "relative convexity tolerance (default 1e-9)");

  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix eigenvalue report");
  gram_cmd->add_option("--kernel", kernel_text)->required();
  add_point_source(gram_cmd, points);
  gram_cmd->add_option("--tol", tol, "psd tolerance per point (default 1e-10)");

  auto* interp_cmd = app.add_subcommand("interp", "kernel interpolation of scattered data");
  interp_cmd->add_option("--kernel", kernel_text)->required();
  interp_cmd->add_option("--points", points.file, "node CSV with a trailing value column")->required();
  interp_cmd->add_option("--targets", targets_file, "point CSV to predict at (default: the nodes)");
  interp_cmd->add_option("--ridge", ridge)->capture_default_str();

  auto* sim_cmd = app.add_subcommand("simulate", "Gaussian random field draws on a point set");
  sim_cmd->add_option("--kernel", kernel_text)->required();
  add_point_source(sim_cmd, points);
  sim_cmd->add_option("--samples", samples)->capture_default_str();

  auto* fractal_cmd = app.add_subcommand("fractal", "fractal index estimate near theta = 0");
  fractal_cmd->add_option("--kernel", kernel_text)->required();
  fractal_cmd->add_option("--grid", grid_text, "theta_min:theta_max:count (default 1e-4:1e-2:20)");

  auto* localize_cmd = app.add_subcommand("localize", "Gaspari-Cohn at chordal vs great circle distance");
  localize_cmd->add_option("--c", support, "support in (0, pi]")->capture_default_str();
  localize_cmd->add_option("--grid", grid_text, "theta grid (default 0:pi:181)");

  auto* list_cmd = app.add_subcommand("list", "kernel families and parameter ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "sphpd: " << e.what() << '\n';
    return kExitUsage;
  }

  const double unit = degrees ? kPi / 180.0 : 1.0;
  // the simulate seed lives in the point source options
  seed = points.seed;

  try {
    Table t;
    if (app.got_subcommand(list_cmd)) {
      t.columns = {"family", "parameters", "expression", "parameter_range", "classes", "default"};
      for (const auto& info : family_table()) {
        t.rows.push_back({std::string(family_name(info.family)), join(family_parameters(info.family), ";"),
                          info.expression, info.parameter_range, info.classes,
                          to_string(default_spec(info.family))});
      }
    } else if (app.got_subcommand(eval_cmd)) {
      if (kernel_text.empty() && coeffs_file.empty()) throw UsageError("eval needs --kernel or --coeffs");
      std::vector<double> grid;
      for (double th : thetas) grid.push_back(th * unit);
      if (!grid_text.empty()) {
        auto g = parse_grid(grid_text, unit);
        grid.insert(grid.end(), g.begin(), g.end());
      }
      if (grid.empty()) throw UsageError("eval needs --theta or --grid");
      std::optional<KernelSpec> spec;
      if (!kernel_text.empty()) spec = parse_kernel(kernel_text);
      std::optional<SchoenbergSequence> seq;
      if (!coeffs_file.empty()) {
        auto in = open_file(coeffs_file);
        seq = read_sequence_csv(in);
      }
      t.columns = {"theta"};
      if (spec) {
        t.meta.push_back({"kernel", to_string(*spec)});
        t.columns.push_back("psi");
      }
      if (seq) {
        t.meta.push_back({"d", static_cast<long long>(seq->d)});
        t.meta.push_back({"N", static_cast<long long>(seq->truncation())});
        t.columns.push_back("reconstruction");
      }
      if (spec && seq) t.columns.push_back("abs_error");
      for (double th : grid) {
        std::vector<Cell> row{th};
        double a = 0.0, b = 0.0;
        if (spec) row.push_back(a = eval(*spec, th));
        if (seq) row.push_back(b = reconstruct(*seq, th));
        if (spec && seq) row.push_back(std::abs(a - b));
        t.rows.push_back(std::move(row));
      }
    } else if (app.got_subcommand(coeffs_cmd)) {
      const auto spec = parse_kernel(kernel_text);
      if (dim < 1) throw std::invalid_argument("--dim must be at least 1");
      const int n = n_trunc >= 0 ? n_trunc : default_truncation(dim);
      const auto seq = schoenberg_coeffs(as_function(spec), dim, n);
      if (format == "csv") {
        write_sequence_csv(out, seq);
        return kExitOk;
      }
      t = sequence_table(seq);
    } else if (app.got_subcommand(walk_cmd)) {
      if (kernel_text.empty() == coeffs_file.empty()) throw UsageError("walk needs exactly one of --kernel, --coeffs");
      SchoenbergSequence seq;
      if (!coeffs_file.empty()) {
        auto in = open_file(coeffs_file);
        seq = read_sequence_csv(in);
      } else {
        if (dim < 1) throw std::invalid_argument("--dim must be at least 1");
        const int n = n_trunc >= 0 ? n_trunc : default_truncation(dim);
        seq = schoenberg_coeffs(as_function(parse_kernel(kernel_text)), dim, n);
      }
      double max_tail = -1.0;
      const auto walked = walk_to(std::move(seq), target, k_cutoff, &max_tail);
      if (format == "csv" && max_tail < 0.0) {
        write_sequence_csv(out, walked);
        return kExitOk;
      }
      t = sequence_table(walked);
      if (max_tail >= 0.0) t.meta.push_back({"max_tail_residual", max_tail});
    } else if (app.got_subcommand(member_cmd)) {
      const auto spec = parse_kernel(kernel_text);
      if (dim < 1) throw std::invalid_argument("--dim must be at least 1");
      MembershipOptions opts;
      if (tol > 0.0) opts.tol_fail = tol;
      opts.strict = strict;
      const int n = n_trunc >= 0 ? n_trunc : default_truncation(dim);
      const auto v = membership(as_function(spec), dim, n, opts);
      const auto cat = validate_params(spec, SphereDimension(dim));
      std::vector<std::string> witness;
      for (std::size_t i = 0; i < std::min<std::size_t>(v.witness.size(), 20); ++i) {
        witness.push_back(std::to_string(v.witness[i].first) + ":" + format_double(v.witness[i].second));
      }
      if (v.witness.size() > 20) witness.push_back("...");
      const auto& ev = v.strict_evidence;
      std::string mono = "n/a";
      if (v.monotonicity) mono = v.monotonicity->holds ? "holds" : "violated";
      t.columns = {"kernel", "d", "strict", "N", "verdict", "witness_count", "witness", "min_coefficient",
                   "min_index", "tail_mass", "positive_even", "positive_odd", "largest_positive_even",
                   "largest_positive_odd", "strictness", "monotonicity", "catalog_valid", "catalog_strict",
                   "catalog_rule", "notes"};
      t.rows.push_back({to_string(spec), static_cast<long long>(dim), strict, static_cast<long long>(n),
                        std::string(to_string(v.verdict)), static_cast<long long>(v.witness.size()),
                        join(witness, ";"), v.min_coefficient, static_cast<long long>(v.min_index),
                        v.tail_mass, static_cast<long long>(ev.positive_even),
                        static_cast<long long>(ev.positive_odd),
                        static_cast<long long>(ev.largest_positive_even),
                        static_cast<long long>(ev.largest_positive_odd),
                        std::string(StrictnessEvidence::kLabel) + (ev.supports_strictness ? ": supports" : ": none"),
                        mono, cat.valid, cat.strict, cat.rule, join(v.notes, "; ")});
    } else if (app.got_subcommand(criteria_cmd)) {
      const auto spec = parse_kernel(kernel_text);
      CriterionReport r;
      if (criterion == "polya_circle") {
        CircleOptions opts;
        if (grid_size > 0) opts.grid_size = grid_size;
        if (tol > 0.0) opts.convexity_tol = tol;
        r = polya_circle([&](double th) { return eval(spec, th); }, opts);
      } else {
        RadialGridOptions opts;
        if (grid_size > 0) opts.grid_size = grid_size;
        if (tol > 0.0) opts.convexity_tol = tol;
        const auto profile = radial_profile(spec);
        r = criterion == "polya_s3" ? polya_s3(profile, opts) : polya_2n1(profile, order, opts);
      }
      t.columns = {"kernel", "criterion", "satisfied", "implied_class", "strictness", "grid_size",
                   "violation_count", "violations", "tolerance", "notes"};
      t.rows.push_back({to_string(spec), std::string(to_string(r.criterion)), std::string(to_string(r.satisfied)),
                        r.implied_class,
                        r.criterion == Criterion::polya_circle ? std::string(to_string(r.strictness)) : "n/a",
                        static_cast<long long>(r.grid_size), static_cast<long long>(r.violations.size()),
                        format_violations(r.violations), r.tolerance, join(r.notes, "; ")});
    } else if (app.got_subcommand(gram_cmd)) {
      const auto spec = parse_kernel(kernel_text);
      const auto pts = points.load();
      const auto r = gram_report(spec, pts, tol > 0.0 ? tol : 1e-10);
      t.columns = {"kernel", "d", "n_points", "min_eigenvalue", "max_eigenvalue", "psd", "tolerance_used"};
      t.rows.push_back({to_string(spec), static_cast<long long>(pts.d()), static_cast<long long>(r.n_points),
                        r.min_eigenvalue, r.max_eigenvalue, r.psd, r.tolerance_used});
    } else if (app.got_subcommand(interp_cmd)) {
      const auto spec = parse_kernel(kernel_text);
      std::vector<double> data;
      const auto nodes = read_points(points.file, &data);
      const auto fit = interpolate_fit(spec, nodes, data, ridge);
      const auto where = targets_file.empty() ? nodes : read_points(targets_file, nullptr);
      if (where.d() != nodes.d()) throw std::invalid_argument("targets and nodes live on different spheres");
      t.meta = {{"kernel", to_string(spec)}, {"ridge", ridge}, {"jitter", fit.jitter}};
      t.columns = {"i"};
      for (int k = 0; k <= where.d(); ++k) t.columns.push_back("x" + std::to_string(k));
      t.columns.push_back("value");
      for (std::size_t i = 0; i < where.size(); ++i) {
        std::vector<Cell> row{static_cast<long long>(i)};
        for (double x : where.point(i)) row.push_back(x);
        row.push_back(interpolate_eval(fit, where.point(i)));
        t.rows.push_back(std::move(row));
      }
    } else if (app.got_subcommand(sim_cmd)) {
      const auto spec = parse_kernel(kernel_text);
      const auto pts = points.load();
      const auto sample = simulate(spec, pts, samples, seed);
      if (format == "csv") {
        write_field_csv(out, sample);
        return kExitOk;
      }
      t.meta = {{"kernel", to_string(spec)},
                {"seed", static_cast<long long>(seed)},
                {"jitter", sample.jitter},
                {"factorization", std::string(sample.used_ldlt ? "ldlt" : "llt")}};
      t.columns = {"draw"};
      for (Eigen::Index k = 0; k < sample.values.cols(); ++k) t.columns.push_back("p" + std::to_string(k));
      for (Eigen::Index i = 0; i < sample.values.rows(); ++i) {
        std::vector<Cell> row{static_cast<long long>(i)};
        for (Eigen::Index k = 0; k < sample.values.cols(); ++k) row.push_back(sample.values(i, k));
        t.rows.push_back(std::move(row));
      }
    } else if (app.got_subcommand(fractal_cmd)) {
      const auto spec = parse_kernel(kernel_text);
      double lo = 1e-4, hi = 1e-2;
      int count = 20;
      if (!grid_text.empty()) {
        const auto g = parse_grid(grid_text, unit);
        if (g.size() < 2) throw UsageError("fractal --grid needs count >= 2");
        lo = g.front();
        hi = g.back();
        count = static_cast<int>(g.size());
      }
      const double est = estimate_fractal_index(spec, lo, hi, count);
      const auto theory = fractal_index_theoretical(spec);
      t.columns = {"kernel", "theta_min", "theta_max", "n_grid", "estimate", "theoretical"};
      t.rows.push_back({to_string(spec), lo, hi, static_cast<long long>(count), est,
                        theory ? Cell(*theory) : Cell(std::string())});
    } else if (app.got_subcommand(localize_cmd)) {
      const double c = support * unit;
      const auto grid = grid_text.empty() ? parse_grid("0:" + format_double(kPi) + ":181", 1.0)
                                          : parse_grid(grid_text, unit);
      const auto rows = localization_compare(c, grid);
      if (format == "csv") {
        out << "#c=" << format_double(c) << '\n';
        write_localization_csv(out, rows);
        return kExitOk;
      }
      t.meta = {{"c", c}};
      t.columns = {"theta", "psi1", "psi2"};
      for (const auto& r : rows) t.rows.push_back({r.theta, r.psi1, r.psi2});
    }
    emit(out, t, format);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "sphpd: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "sphpd: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace sphpd::cli
