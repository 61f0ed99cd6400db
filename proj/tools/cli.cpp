#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "schwinger/backgrounds.hpp"
#include "schwinger/errors.hpp"
#include "schwinger/parallel.hpp"
#include "schwinger/perturbative.hpp"
#include "schwinger/worldline.hpp"
#include "table.hpp"

#ifndef SCHWINGER_VERSION
#define SCHWINGER_VERSION "unknown"
#endif

namespace schwinger::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string kind = "sg";
  std::string order = "1";
  std::string eps = "1e-3";
  std::string field = "1e-3";
  std::string gamma;
  std::string omega;
  std::string time = "-2..2:201";
  std::string x = "0..20:401";
  std::string kappa;
  std::string photons = "1,2,3";
  std::string j_split = "1";
  std::string sigma = "0.5";
  std::string method = "closed";
  std::string format = "csv";
  std::string out = "-";
  std::string file_a;
  std::string file_b;
  std::string series_a;
  std::string series_b;
  std::string column;
  bool nodes = false;
  bool oracle = false;
  bool msauter_shift = false;
  bool log_y = false;

  std::map<std::string, std::string> as_map() const {
    std::map<std::string, std::string> m{
        {"command", command}, {"kind", kind},     {"N", order},
        {"eps", eps},         {"E", field},       {"format", format},
        {"method", method},   {"J", j_split},     {"sigma", sigma},
        {"photons", photons}, {"t", time},        {"x", x},
        {"msauter-shift", msauter_shift ? "true" : "false"}};
    if (!gamma.empty()) m["gamma"] = gamma;
    if (!omega.empty()) m["omega"] = omega;
    if (!kappa.empty()) m["kappa"] = kappa;
    if (!file_a.empty()) m["a"] = file_a;
    if (!file_b.empty()) m["b"] = file_b;
    if (!series_a.empty()) m["series-a"] = series_a;
    if (!series_b.empty()) m["series-b"] = series_b;
    if (!column.empty()) m["column"] = column;
    return m;
  }
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\"'");
  const auto e = s.find_last_not_of(" \t\"'");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const std::string& what) {
  const std::string s = trim(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ConfigError("invalid number '" + text + "' for " + what);
  }
  return v;
}

int parse_int(const std::string& text, const std::string& what) {
  const double v = parse_number(text, what);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw ConfigError("expected an integer for " + what + ", got '" + text + "'");
  }
  return static_cast<int>(v);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) {
      parts.push_back(item);
    }
  }
  return parts;
}

std::string label_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

struct Series {
  std::string label;
  WeakPulseSpec spec;
  bool shifted = false;
};

std::vector<Series> parse_series(const Options& o) {
  std::vector<Series> out;
  for (const auto& token : split_list(o.kind)) {
    const auto colon = token.find(':');
    const std::string name = token.substr(0, colon);
    const PulseKind kind = parse_pulse_kind(name);
    if (kind == PulseKind::SuperGaussian) {
      const std::string order_text =
          colon == std::string::npos ? o.order : token.substr(colon + 1);
      const int n = parse_int(order_text, "N");
      if (n < 1) {
        throw ConfigError("N must be >= 1");
      }
      out.push_back({"sg" + std::to_string(n),
                     WeakPulseSpec::super_gaussian(n, 1.0), false});
    } else {
      if (colon != std::string::npos) {
        throw ConfigError("only sg takes an order suffix: '" + token + "'");
      }
      const bool shifted = kind == PulseKind::ModifiedSauter && o.msauter_shift;
      out.push_back({std::string(to_string(kind)) + (shifted ? "_shift" : ""),
                     WeakPulseSpec::of_kind(kind, 1.0), shifted});
    }
  }
  if (out.empty()) {
    throw ConfigError("no pulse kind given");
  }
  return out;
}

std::vector<double> require_grid(const std::string& text, const std::string& what) {
  if (text.empty()) {
    throw ConfigError("missing --" + what);
  }
  return parse_grid(text);
}

std::string series_column() { return "series"; }

// ---------------------------------------------------------------------------

Table cmd_profiles(const Options& o) {
  const auto ts = require_grid(o.time, "t");
  const double omega = o.omega.empty() ? 1.0 : parse_number(o.omega, "omega");
  Table t;
  t.columns = {series_column(), "t", "g"};
  t.plot_x = "t";
  t.plot_y = "g";
  for (const auto& s : parse_series(o)) {
    const double w = omega * (s.shifted ? 0.5 * std::numbers::pi : 1.0);
    const WeakPulseSpec spec = s.spec.with_omega(w);
    for (double time : ts) {
      t.rows.push_back({s.label, time, profile_g(spec, time)});
    }
  }
  return t;
}

Table cmd_xi(const Options& o) {
  std::vector<int> orders;
  for (double v : require_grid(o.order, "N")) {
    const int n = static_cast<int>(std::lround(v));
    if (n < 1) {
      throw ConfigError("N must be >= 1");
    }
    if (orders.empty() || orders.back() != n) {
      orders.push_back(n);
    }
  }
  Table t;
  t.columns = {series_column(), "N",           "eps", "xi", "delta",
               "gamma_check",   "xi_untruncated"};
  t.plot_x = "N";
  t.plot_y = "xi";
  for (double eps : require_grid(o.eps, "eps")) {
    if (!(eps > 0.0 && eps <= 0.1)) {
      throw ConfigError("eps must lie in (0, 0.1]");
    }
    const auto rows = parallel_map(orders, [eps](int n) {
      const double x = xi(n, eps);
      const double g = gamma_check_sg(n, eps);
      return std::vector<Cell>{"eps" + label_number(eps),
                               static_cast<long long>(n),
                               eps,
                               x,
                               x * g,
                               g,
                               xi_untruncated(n, eps)};
    });
    t.rows.insert(t.rows.end(), rows.begin(), rows.end());
  }
  return t;
}

std::vector<double> gamma_axis(const Options& o, double e_over_es) {
  if (o.gamma.empty() == o.omega.empty()) {
    throw ConfigError("give exactly one of --gamma and --omega");
  }
  if (!o.gamma.empty()) {
    return parse_grid(o.gamma);
  }
  std::vector<double> g;
  for (double w : parse_grid(o.omega)) {
    g.push_back(w / e_over_es);
  }
  return g;
}

double single_eps(const Options& o) {
  const double eps = parse_number(o.eps, "eps");
  if (!(eps >= 0.0 && eps <= 0.1)) {
    throw ConfigError("eps must lie in [0, 0.1]");
  }
  return eps;
}

double single_field(const Options& o) {
  const double e = parse_number(o.field, "E");
  if (!(e > 0.0 && e < 1.0)) {
    throw ConfigError("E must lie in (0, 1) (units of E_S)");
  }
  return e;
}

Table cmd_w0(const Options& o) {
  const double eps = single_eps(o);
  const double e_over_es = single_field(o);
  const auto gammas = gamma_axis(o, e_over_es);
  if (o.method != "closed" && o.method != "reflection" &&
      o.method != "instanton") {
    throw ConfigError("--method must be closed, reflection or instanton");
  }
  const FieldScales scales(e_over_es, eps);
  Table t;
  t.columns = {series_column(), "gamma", "w0",    "branch",
               "x4_check",      "gamma_check", "delta", "xi"};
  t.plot_x = "gamma";
  t.plot_y = "w0";
  for (const auto& s : parse_series(o)) {
    const double stretch = s.shifted ? 0.5 * std::numbers::pi : 1.0;
    const auto rows = parallel_map(gammas, [&](double g) -> std::vector<Cell> {
      const WeakPulseSpec spec = s.spec.with_omega(scales.omega_for(g * stretch));
      if (o.method == "reflection") {
        const auto r = reflection_solve(spec, scales);
        const double gc = eps > 0.0 ? gamma_check(spec, eps) : kNaN;
        return {s.label,  g,  r.w0, std::string(to_string(r.branch)),
                r.branch == Branch::Dynamical ? std::min(1.0, r.y_star / g) : 1.0,
                gc, kNaN, kNaN};
      }
      if (o.method == "instanton") {
        const auto loop = instanton_shoot(spec, scales);
        return {s.label, g, loop.action, std::string("loop"),
                loop.x4_max, kNaN, kNaN, kNaN};
      }
      const auto r = w0_at_gamma(spec, eps, g * stretch);
      return {s.label, g, r.w0, std::string(to_string(r.branch)),
              r.x4_check, r.gamma_check, r.delta, r.xi};
    });
    t.rows.insert(t.rows.end(), rows.begin(), rows.end());
  }
  return t;
}

Table cmd_transform(const Options& o) {
  const auto xs = require_grid(o.x, "x");
  Table t;
  t.columns = {series_column(), "x", "value"};
  if (o.oracle) {
    t.columns.push_back("oracle");
  }
  t.plot_x = "x";
  t.plot_y = "value";
  t.plot_log_y = o.log_y;
  for (const auto& s : parse_series(o)) {
    SpectralFunction f = fourier_transform(s.spec);
    if (!o.kappa.empty() && (s.spec.kind() == PulseKind::SuperGaussian ||
                             s.spec.kind() == PulseKind::Rectangular)) {
      f = SpectralFunction(PulseKind::SuperGaussian,
                           parse_number(o.kappa, "kappa"));
    }
    std::vector<double> oracle(xs.size(), kNaN);
    if (o.oracle && f.kappa() > 0.0) {
      oracle = convolution_transform_check(f.kappa(), xs).oracle;
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::vector<Cell> row{s.label, xs[i], f(xs[i])};
      if (o.oracle) {
        row.emplace_back(oracle[i]);
      }
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

Table cmd_saddle(const Options& o) {
  const auto gammas =
      parse_grid(o.gamma.empty() ? std::string("1.01..5:200") : o.gamma);
  Table t;
  t.columns = {series_column(), "gamma", "varpi_sp", "residual", "valid"};
  t.plot_x = "gamma";
  t.plot_y = "residual";
  for (double e : require_grid(o.field, "E")) {
    if (!(e > 0.0 && e < 1.0)) {
      throw ConfigError("E must lie in (0, 1) (units of E_S)");
    }
    for (const auto& d : saddle_condition_scan(e, gammas)) {
      t.rows.push_back({"E" + label_number(e), d.gamma, d.varpi_sp,
                        d.derivative_at_sp, static_cast<long long>(d.valid)});
    }
  }
  return t;
}

Table cmd_integral(const Options& o) {
  Table t;
  t.columns = {series_column(), "value", "target", "deficit", "error_estimate",
               "analytic"};
  t.plot_x = "value";
  t.plot_y = "deficit";
  for (const auto& s : parse_series(o)) {
    const auto c = integral_condition(s.spec);
    t.rows.push_back({s.label, c.value, std::sqrt(std::numbers::pi / 2.0),
                      c.deficit, c.error_estimate,
                      static_cast<long long>(c.analytic)});
  }
  return t;
}

Table cmd_orders(const Options& o) {
  const double e_over_es = single_field(o);
  const auto gammas = gamma_axis(o, e_over_es);
  const int j = parse_int(o.j_split, "J");
  const double sigma = parse_number(o.sigma, "sigma");
  Table t;
  t.columns = {series_column(), "gamma",       "photons", "J",
               "exponent",      "first_order", "sigma_sp", "regime_ok"};
  t.plot_x = "gamma";
  t.plot_y = "exponent";
  Options kinds = o;
  if (o.kind == "sg") {
    kinds.kind = "lorentzian,rect";
  }
  for (const auto& s : parse_series(kinds)) {
    for (double p : require_grid(o.photons, "photons")) {
      const int n = static_cast<int>(std::lround(p));
      const OrderConfig cfg = OrderConfig::uniform(n, std::min(j, n), sigma);
      for (double g : gammas) {
        const WeakPulseSpec spec = s.spec.with_omega(g * e_over_es);
        const FieldScales scales(e_over_es, 0.0);
        const auto r = higher_order_exponent(spec, scales, cfg);
        t.rows.push_back({s.label + "_n" + std::to_string(n), g,
                          static_cast<long long>(n),
                          static_cast<long long>(cfg.j_split()), r.exponent,
                          first_order_exponent(spec, scales), r.sigma_sp,
                          static_cast<long long>(r.regime_ok)});
      }
    }
  }
  return t;
}

Table cmd_instanton(const Options& o) {
  const double eps = single_eps(o);
  const double e_over_es = single_field(o);
  const auto gammas = gamma_axis(o, e_over_es);
  const FieldScales scales(e_over_es, eps);
  Table t;
  if (o.nodes) {
    t.columns = {series_column(), "gamma", "index", "x3", "x4"};
    t.plot_x = "x3";
    t.plot_y = "x4";
  } else {
    t.columns = {series_column(), "gamma",          "action",       "a",
                 "x4_max",        "closure_defect", "speed_defect", "iterations",
                 "reflection",    "closed"};
    t.plot_x = "gamma";
    t.plot_y = "action";
  }
  for (const auto& s : parse_series(o)) {
    const auto loops = parallel_map(gammas, [&](double g) {
      return instanton_shoot(s.spec.with_omega(scales.omega_for(g)), scales);
    });
    for (std::size_t i = 0; i < gammas.size(); ++i) {
      const double g = gammas[i];
      const auto& loop = loops[i];
      if (o.nodes) {
        const std::string label = s.label + "_g" + label_number(g);
        for (std::size_t k = 0; k < loop.nodes.size(); ++k) {
          t.rows.push_back({label, g, static_cast<long long>(k),
                            loop.nodes[k][0], loop.nodes[k][1]});
        }
        continue;
      }
      double reflection = kNaN;
      double closed = kNaN;
      if (s.spec.kind() == PulseKind::SuperGaussian && eps > 0.0) {
        reflection = reflection_solve_at_gamma(s.spec.order(), eps, g).w0;
      }
      if (s.spec.kind() != PulseKind::Gaussian) {
        closed = w0_at_gamma(s.spec, eps, g).w0;
      }
      t.rows.push_back({s.label, g, loop.action, loop.a, loop.x4_max,
                        loop.closure_defect, loop.speed_defect,
                        static_cast<long long>(loop.shooting_iterations),
                        reflection, closed});
    }
  }
  return t;
}

Table load_run(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read '" + path + "'");
  }
  return read_csv(in);
}

std::vector<std::pair<double, double>> select_curve(const Table& t,
                                                    const std::string& series,
                                                    const std::string& column) {
  const std::size_t yi = t.column_index(column);
  const bool has_series = !t.columns.empty() && t.columns[0] == "series";
  const std::size_t xi = has_series ? 1 : 0;
  std::vector<std::pair<double, double>> curve;
  for (const auto& row : t.rows) {
    if (has_series && !series.empty() && format_cell(row[0]) != series) {
      continue;
    }
    const auto* x = std::get_if<double>(&row[xi]);
    const auto* y = std::get_if<double>(&row[yi]);
    if (!x || !y) {
      throw ConfigError("non-numeric cell in column '" + column + "'");
    }
    curve.emplace_back(*x, *y);
  }
  if (curve.empty()) {
    throw ConfigError("no rows for series '" + series + "'");
  }
  return curve;
}

Table cmd_compare(const Options& o) {
  if (o.file_a.empty() || o.file_b.empty()) {
    throw ConfigError("compare needs --a and --b");
  }
  const Table a = load_run(o.file_a);
  const Table b = load_run(o.file_b);
  const bool has_series = !a.columns.empty() && a.columns[0] == "series";
  const std::size_t xi = has_series ? 1 : 0;
  if (a.columns.size() <= xi + 1) {
    throw ConfigError("run '" + o.file_a + "' has no value column");
  }
  const std::string column = o.column.empty() ? a.columns[xi + 1] : o.column;
  const std::string x_name = a.columns[xi];
  std::vector<std::pair<double, double>> ca, cb;
  try {
    ca = select_curve(a, o.series_a, column);
    cb = select_curve(b, o.series_b, column);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (ca.size() != cb.size()) {
    throw ConfigError("grid mismatch: runs have different lengths");
  }
  double max_rel = 0.0, sum_rel = 0.0, arg = ca.front().first;
  double max_signed = -std::numeric_limits<double>::infinity();
  double min_signed = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    const double xa = ca[i].first, xb = cb[i].first;
    if (std::abs(xa - xb) > 1e-12 * std::max(1.0, std::abs(xa))) {
      throw ConfigError("grid mismatch at point " + std::to_string(i));
    }
    const double ref = std::abs(cb[i].second);
    const double diff = ca[i].second - cb[i].second;
    const double rel = ref > 0.0 ? diff / ref : (diff == 0.0 ? 0.0 : diff);
    if (std::abs(rel) > max_rel) {
      max_rel = std::abs(rel);
      arg = xa;
    }
    sum_rel += std::abs(rel);
    max_signed = std::max(max_signed, rel);
    min_signed = std::min(min_signed, rel);
  }
  Table t;
  t.columns = {"max_rel_dev", "mean_rel_dev", "argmax_" + x_name,
               "max_signed_rel_dev", "min_signed_rel_dev", "points"};
  t.plot_x = t.columns[2];
  t.plot_y = "max_rel_dev";
  t.rows.push_back({max_rel, sum_rel / ca.size(), arg, max_signed, min_signed,
                    static_cast<long long>(ca.size())});
  return t;
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Table dispatch(const Options& o) {
  if (o.command == "profiles") return cmd_profiles(o);
  if (o.command == "xi") return cmd_xi(o);
  if (o.command == "w0") return cmd_w0(o);
  if (o.command == "transform") return cmd_transform(o);
  if (o.command == "saddle") return cmd_saddle(o);
  if (o.command == "integral-check") return cmd_integral(o);
  if (o.command == "orders") return cmd_orders(o);
  if (o.command == "instanton") return cmd_instanton(o);
  return cmd_compare(o);
}

void emit(const Table& t, const Options& o, std::ostream& out) {
  if (o.format == "csv") {
    write_csv(t, out);
  } else if (o.format == "json") {
    write_json(t, o.as_map(), SCHWINGER_VERSION, utc_timestamp(), out);
  } else {
    if (t.plot_x.empty() || o.command == "integral-check" ||
        o.command == "compare") {
      throw ConfigError("svg output is not available for " + o.command);
    }
    write_svg(t, o.command, out);
  }
}

} // namespace

std::vector<double> parse_grid(const std::string& raw) {
  const std::string text = trim(raw);
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    std::vector<double> values;
    for (const auto& item : split_list(text)) {
      values.push_back(parse_number(item, "grid value"));
    }
    if (values.empty()) {
      throw ConfigError("empty grid");
    }
    return values;
  }
  const auto colon = text.find(':', dots);
  if (colon == std::string::npos) {
    throw ConfigError("grid '" + text + "' needs a point count, e.g. 1..10:200");
  }
  const double lo = parse_number(text.substr(0, dots), "grid start");
  const double hi = parse_number(text.substr(dots + 2, colon - dots - 2), "grid end");
  const auto second = text.find(':', colon + 1);
  const int count = parse_int(text.substr(colon + 1, second - colon - 1), "grid count");
  bool logarithmic = false;
  if (second != std::string::npos) {
    if (trim(text.substr(second + 1)) != "log") {
      throw ConfigError("unknown grid spacing in '" + text + "'");
    }
    logarithmic = true;
  }
  if (count < 2) {
    throw ConfigError("grid count must be >= 2");
  }
  if (logarithmic && !(lo > 0.0 && hi > 0.0)) {
    throw ConfigError("log grid needs positive end points");
  }
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / (count - 1);
    g[i] = logarithmic ? std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo)))
                       : lo + f * (hi - lo);
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Tunnelling exponents for a static field assisted by a weak pulse",
               "schwinger"};
  app.add_option("command", o.command,
                 "profiles | xi | w0 | transform | saddle | integral-check | "
                 "orders | instanton | compare")
      ->required()
      ->check(CLI::IsMember({"profiles", "xi", "w0", "transform", "saddle",
                             "integral-check", "orders", "instanton",
                             "compare"}));
  app.add_option("--kind", o.kind,
                 "pulse kinds, comma separated: sg[:N], gaussian, sauter, "
                 "msauter, lorentzian, rect");
  app.add_option("--N", o.order, "super-Gaussian order (xi: grid of orders)");
  app.add_option("--eps", o.eps, "weak-to-strong field ratio (xi: list)");
  app.add_option("--E", o.field, "strong field in units of E_S (saddle: list)");
  app.add_option("--gamma", o.gamma, "combined Keldysh parameter grid");
  app.add_option("--omega", o.omega, "pulse frequency grid (units of m)");
  app.add_option("--t", o.time, "time grid for profiles (units of 1/omega)");
  app.add_option("--x", o.x, "grid of varpi/omega for transform");
  app.add_option("--kappa", o.kappa, "override the super-Gaussian width ratio");
  app.add_option("--photons", o.photons, "photon numbers for orders");
  app.add_option("--J", o.j_split, "absorbed photons per term for orders");
  app.add_option("--sigma", o.sigma, "Sigma used to validate the photon split");
  app.add_option("--method", o.method, "w0 route: closed, reflection, instanton");
  app.add_flag("--nodes", o.nodes, "instanton: write the loop nodes");
  app.add_flag("--oracle", o.oracle, "transform: add the convolution oracle");
  app.add_flag("--msauter-shift", o.msauter_shift,
               "rescale the modified Sauter frequency by pi/2");
  app.add_flag("--logy", o.log_y, "svg: logarithmic y axis");
  app.add_option("--format", o.format, "csv, json or svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  app.add_option("--out", o.out, "output file, - for stdout");
  app.add_option("--a", o.file_a, "compare: first run (CSV)");
  app.add_option("--b", o.file_b, "compare: reference run (CSV)");
  app.add_option("--series-a", o.series_a, "compare: series in the first run");
  app.add_option("--series-b", o.series_b, "compare: series in the reference");
  app.add_option("--column", o.column, "compare: value column");
  app.set_config("--config", "", "key=value file; command-line flags win");

  std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    const Table table = dispatch(o);
    if (o.out == "-") {
      emit(table, o, out);
    } else {
      std::ofstream file(o.out);
      if (!file) {
        throw ConfigError("cannot write '" + o.out + "'");
      }
      emit(table, o, file);
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "error: " << o.command << ": " << e.what() << '\n';
    return kExitConfig;
  } catch (const UnsupportedKindError& e) {
    err << "error: " << o.command << ": " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << o.command << ": " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << o.command << " failed (kind=" << o.kind << ", N="
        << o.order << ", eps=" << o.eps << ", E=" << o.field << "): " << e.what()
        << '\n';
    return kExitNumerical;
  }
}

} // namespace schwinger::cli
