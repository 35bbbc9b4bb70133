#include "logharmonic/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "logharmonic/area.hpp"
#include "logharmonic/bounds.hpp"
#include "logharmonic/error.hpp"
#include "logharmonic/mappings.hpp"
#include "logharmonic/radii.hpp"
#include "logharmonic/schwarzian.hpp"
#include "logharmonic/verify.hpp"

namespace logharmonic {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

// Raised for argument values that parse but are out of range.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string full_precision(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string scientific(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json envelope(json inputs, json results) {
  return json{{"inputs", std::move(inputs)}, {"results", std::move(results)}, {"meta", {{"version", kVersion}}}};
}

Params make_params(double alpha, int k) {
  try {
    return Params(alpha, k);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

void require_radius(double r, bool allow_zero = false) {
  const bool ok = allow_zero ? (r >= 0.0 && r < 1.0) : (r > 0.0 && r < 1.0);
  if (!ok) throw UsageError(std::string("r must lie in ") + (allow_zero ? "[0, 1)" : "(0, 1)"));
}

LogharmonicMap map_by_name(const std::string& name, const Params& p) {
  if (name == "koebe") return koebe_map(p);
  if (name == "f3") return example_map(ExampleKind::f3, p);
  if (name == "f4") return example_map(ExampleKind::f4, p);
  if (name == "f5") return example_map(ExampleKind::f5, p);
  if (name == "identity") return identity_map();
  if (name == "analytic-koebe") {
    return analytic_map([](Complex z) { return pow(Complex(1.0) + (-Jet::variable(z)), -2.0); }, "z/(1-z)^2");
  }
  throw UsageError("unknown map '" + name + "'");
}

struct Globals {
  double tol = 1e-10;
  std::string format = "text";
  std::string out_path;
};

// ---------------------------------------------------------------------------

struct RadiusArgs {
  std::string which;
  double alpha = 0.0;
  int k = 1;
};

int cmd_radius(const RadiusArgs& a, const Globals& g, std::ostream& out) {
  const Params p = make_params(a.alpha, a.k);
  const RadiusId id = radius_from_string(a.which);
  const auto res = solve_radius({id, p}, g.tol);
  if (g.format == "json") {
    out << envelope({{"which", a.which}, {"alpha", a.alpha}, {"k", a.k}, {"tol", g.tol}},
                    {{"value", res.value},
                     {"residual", res.residual},
                     {"bracket_lo", res.bracket_lo},
                     {"bracket_hi", res.bracket_hi},
                     {"iterations", res.iterations}})
               .dump(2)
        << '\n';
  } else if (g.format == "csv") {
    out << "which,alpha,k,value,residual,bracket_lo,bracket_hi,iterations\n"
        << a.which << ',' << full_precision(a.alpha) << ',' << a.k << ',' << full_precision(res.value) << ','
        << full_precision(res.residual) << ',' << full_precision(res.bracket_lo) << ','
        << full_precision(res.bracket_hi) << ',' << res.iterations << '\n';
  } else {
    out << format_number(res.value) << " residual " << scientific(std::abs(res.residual)) << '\n';
  }
  return 0;
}

struct TableArgs {
  std::string which;
  std::vector<double> alphas;
  std::vector<int> ks;
};

int cmd_table(TableArgs a, const Globals& g, std::ostream& out) {
  const RadiusId id = radius_from_string(a.which);
  if (id == RadiusId::starlike_class || id == RadiusId::starlike_example) {
    throw UsageError("table expects one of r1..r6");
  }
  if (a.alphas.empty()) a.alphas = reference_table(id).alphas;
  if (a.ks.empty()) a.ks = reference_table(id).ks;
  for (double alpha : a.alphas) make_params(alpha, 1);
  for (int k : a.ks) make_params(0.0, k);

  std::vector<std::vector<std::optional<double>>> cells;
  bool failed = false;
  for (double alpha : a.alphas) {
    auto& row = cells.emplace_back();
    for (int k : a.ks) {
      try {
        row.push_back(solve_radius({id, Params(alpha, k)}, g.tol).value);
      } catch (const Error&) {
        row.push_back(std::nullopt);
        failed = true;
      }
    }
  }

  if (g.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < a.alphas.size(); ++i) {
      json values = json::array();
      for (const auto& c : cells[i]) values.push_back(c ? json(*c) : json(nullptr));
      rows.push_back({{"alpha", a.alphas[i]}, {"values", values}});
    }
    out << envelope({{"which", a.which}, {"alphas", a.alphas}, {"ks", a.ks}, {"tol", g.tol}}, {{"rows", rows}}).dump(2)
        << '\n';
  } else {
    out << "alpha";
    for (int k : a.ks) out << ",k=" << k;
    out << '\n';
    for (std::size_t i = 0; i < a.alphas.size(); ++i) {
      out << format_number(a.alphas[i]);
      for (const auto& c : cells[i]) out << ',' << (c ? format_table_cell(*c) : std::string("ERR"));
      out << '\n';
    }
  }
  return failed ? 1 : 0;
}

struct BoundsArgs {
  std::string quantity;
  double alpha = 0.0;
  int k = 1;
  std::optional<double> r;
};

int cmd_bounds(const BoundsArgs& a, const Globals& g, std::ostream& out) {
  const Params p = make_params(a.alpha, a.k);
  Quantity q{};
  try {
    q = quantity_from_string(a.quantity);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  Bounds b;
  switch (q) {
    case Quantity::dist_f:
    case Quantity::dist_h:
    case Quantity::dist_g: b = distance_bounds(p, q); break;
    default: {
      if (!a.r) throw UsageError("--r is required for " + a.quantity);
      require_radius(*a.r);
      if (q == Quantity::abs_h || q == Quantity::abs_g || q == Quantity::abs_f) {
        b = growth_bounds(p, *a.r, q);
      } else if (q == Quantity::phi_ratio || q == Quantity::phi_abs || q == Quantity::omega_ratio) {
        b = phi_bounds(p, *a.r, q);
      } else {
        b = distortion_bounds(p, *a.r, q);
      }
    }
  }
  if (g.format == "json") {
    json inputs{{"quantity", a.quantity}, {"alpha", a.alpha}, {"k", a.k}};
    if (a.r) inputs["r"] = *a.r;
    out << envelope(inputs, {{"lower", number_or_null(b.lower)},
                             {"upper", number_or_null(b.upper)},
                             {"raw_lower", number_or_null(b.raw_lower)},
                             {"log_lower", number_or_null(b.log_lower)},
                             {"log_upper", number_or_null(b.log_upper)}})
               .dump(2)
        << '\n';
  } else if (g.format == "csv") {
    out << "quantity,alpha,k,r,lower,upper,raw_lower,log_lower,log_upper\n"
        << a.quantity << ',' << full_precision(a.alpha) << ',' << a.k << ',' << (a.r ? full_precision(*a.r) : "")
        << ',' << full_precision(b.lower) << ',' << full_precision(b.upper) << ',' << full_precision(b.raw_lower)
        << ',' << full_precision(b.log_lower) << ',' << full_precision(b.log_upper) << '\n';
  } else {
    out << format_number(b.lower) << ' ' << format_number(b.upper) << '\n';
  }
  return 0;
}

struct AreaArgs {
  double alpha = 0.0;
  int k = 1;
  double r = 0.5;
  bool direct = false;
  int n_rho = 64;
  int n_theta = 256;
};

int cmd_area(const AreaArgs& a, const Globals& g, std::ostream& out) {
  const Params p = make_params(a.alpha, a.k);
  require_radius(a.r, true);
  if (a.n_rho < 2 || a.n_theta < 2) throw UsageError("grid sizes must be at least 2");
  AreaResult res = area_bounds(p, a.r, g.tol);
  std::optional<DirectArea> direct;
  if (a.direct) {
    direct = area_direct(koebe_map(p), a.r, a.n_rho, a.n_theta);
    res.direct = direct->value;
  }
  if (g.format == "json") {
    json results{{"lower_2piL1", res.lower_2piL1},
                 {"lower_floored", res.lower_floored},
                 {"upper_2piL2", number_or_null(res.upper_2piL2)},
                 {"quadrature_error", number_or_null(res.quadrature_error)},
                 {"converged", res.converged}};
    if (direct) {
      results["direct"] = direct->value;
      results["direct_error"] = direct->error_estimate;
    }
    out << envelope({{"alpha", a.alpha}, {"k", a.k}, {"r", a.r}, {"tol", g.tol}}, results).dump(2) << '\n';
  } else {
    std::vector<std::pair<std::string, double>> rows{{"lower_2piL1", res.lower_2piL1},
                                                     {"lower_floored", res.lower_floored},
                                                     {"upper_2piL2", res.upper_2piL2},
                                                     {"quadrature_error", res.quadrature_error}};
    if (direct) {
      rows.emplace_back("direct", direct->value);
      rows.emplace_back("direct_error", direct->error_estimate);
    }
    if (g.format == "csv") {
      out << "name,value\n";
      for (const auto& [name, v] : rows) out << name << ',' << full_precision(v) << '\n';
    } else {
      for (const auto& [name, v] : rows) out << name << ' ' << format_number(v) << '\n';
    }
  }
  return res.converged ? 0 : 1;
}

struct GridArgs {
  std::string map = "koebe";
  double alpha = 0.0;
  int k = 1;
  int nr = 20;
  int ntheta = 72;
  double rmax = 0.95;
};

int cmd_grid(const GridArgs& a, const Globals& g, std::ostream& out) {
  const Params p = make_params(a.alpha, a.k);
  if (!(a.rmax > 0.0 && a.rmax < 1.0)) throw UsageError("--rmax must lie in (0, 1)");
  if (a.nr < 1 || a.ntheta < 1) throw UsageError("--nr and --ntheta must be positive");
  const LogharmonicMap f = map_by_name(a.map, p);

  struct Row {
    double rho, theta, x, y, u, v;
  };
  std::vector<Row> rows;
  int dropped = 0;
  for (int i = 0; i < a.nr; ++i) {
    const double rho = a.rmax * (i + 1) / a.nr;
    for (int j = 0; j < a.ntheta; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / a.ntheta;
      const Complex z = std::polar(rho, theta);
      try {
        const Complex w = eval(f, z);
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
          ++dropped;
          continue;
        }
        rows.push_back({rho, theta, z.real(), z.imag(), w.real(), w.imag()});
      } catch (const Error&) {
        ++dropped;
      }
    }
  }
  if (g.format == "json") {
    json arr = json::array();
    for (const Row& r : rows) arr.push_back({r.rho, r.theta, r.x, r.y, r.u, r.v});
    out << envelope({{"map", a.map}, {"alpha", a.alpha}, {"k", a.k}, {"nr", a.nr}, {"ntheta", a.ntheta}, {"rmax", a.rmax}},
                    {{"columns", {"rho", "theta", "x", "y", "u", "v"}}, {"rows", arr}, {"dropped", dropped}})
               .dump(2)
        << '\n';
  } else {
    out << "rho,theta,x,y,u,v\n";
    for (const Row& r : rows) {
      out << full_precision(r.rho) << ',' << full_precision(r.theta) << ',' << full_precision(r.x) << ','
          << full_precision(r.y) << ',' << full_precision(r.u) << ',' << full_precision(r.v) << '\n';
    }
    if (dropped > 0) out << "# dropped " << dropped << " rows\n";
  }
  return 0;
}

struct CoeffsArgs {
  double alpha = 0.0;
  int k = 1;
  int n = 10;
};

int cmd_coeffs(const CoeffsArgs& a, const Globals& g, std::ostream& out) {
  const Params p = make_params(a.alpha, a.k);
  if (a.n < 1) throw UsageError("--n must be positive");
  const LogCoefficients c = koebe_log_coeffs(p, a.n);
  if (g.format == "json") {
    json rows = json::array();
    for (int n = 1; n <= a.n; ++n) {
      const CoeffBound b = coeff_bounds(p, n);
      rows.push_back({{"n", n}, {"a_bound", b.a_bound}, {"b_bound", b.b_bound}, {"a_koebe", c.a[n - 1]},
                      {"b_koebe", c.b[n - 1]}});
    }
    out << envelope({{"alpha", a.alpha}, {"k", a.k}, {"n", a.n}}, {{"rows", rows}}).dump(2) << '\n';
    return 0;
  }
  out << "n,a_bound,b_bound,a_koebe,b_koebe\n";
  for (int n = 1; n <= a.n; ++n) {
    const CoeffBound b = coeff_bounds(p, n);
    out << n << ',' << format_number(b.a_bound) << ',' << format_number(b.b_bound) << ','
        << format_number(c.a[n - 1]) << ',' << format_number(c.b[n - 1]) << '\n';
  }
  return 0;
}

struct SchwarzianArgs {
  std::string map = "koebe";
  double alpha = 0.0;
  int k = 1;
  double re = 0.0;
  double im = 0.0;
};

int cmd_schwarzian(const SchwarzianArgs& a, const Globals& g, std::ostream& out) {
  const Params p = make_params(a.alpha, a.k);
  const Complex z(a.re, a.im);
  if (!(std::abs(z) < 1.0)) throw UsageError("the point must lie in the unit disk");
  const LogharmonicMap f = map_by_name(a.map, p);
  const Complex P = pre_schwarzian(f, z);
  const Complex S = schwarzian(f, z);
  if (g.format == "json") {
    out << envelope({{"map", a.map}, {"alpha", a.alpha}, {"k", a.k}, {"re", a.re}, {"im", a.im}},
                    {{"pre_schwarzian", {P.real(), P.imag()}}, {"schwarzian", {S.real(), S.imag()}}})
               .dump(2)
        << '\n';
  } else if (g.format == "csv") {
    out << "name,re,im\n"
        << "pre_schwarzian," << full_precision(P.real()) << ',' << full_precision(P.imag()) << '\n'
        << "schwarzian," << full_precision(S.real()) << ',' << full_precision(S.imag()) << '\n';
  } else {
    out << "pre_schwarzian " << format_number(P.real()) << ' ' << format_number(P.imag()) << '\n'
        << "schwarzian " << format_number(S.real()) << ' ' << format_number(S.imag()) << '\n';
  }
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  int samples = 100;
  std::uint64_t seed = 42;
};

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out) {
  if (a.samples < 0) throw UsageError("--samples must be nonnegative");
  const auto results = run_verification(a.suite, a.samples, a.seed);
  const bool all_passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
  if (g.format == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"suite", r.suite},
                     {"property", r.name},
                     {"passed", r.passed()},
                     {"checked", r.checked},
                     {"failures", r.failures},
                     {"worst", r.worst}});
    }
    out << envelope({{"suite", a.suite}, {"samples", a.samples}, {"seed", a.seed}},
                    {{"properties", arr}, {"passed", all_passed}})
               .dump(2)
        << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.suite << ": " << r.name << " (checked " << r.checked
          << ", failures " << r.failures << ", worst " << scientific(r.worst) << ")\n";
    }
    out << (all_passed ? "OVERALL PASS" : "OVERALL FAIL") << '\n';
  }
  return all_passed ? 0 : 1;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[512];
  const double ax = std::abs(x);
  if (ax < 1e-4 || ax >= 1e15) {
    std::snprintf(buf, sizeof buf, "%.10e", x);
    return buf;
  }
  std::snprintf(buf, sizeof buf, "%.10f", x);
  std::string s = buf;
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string format_table_cell(double x) {
  // nearbyint follows the default round-to-nearest-even mode.
  const double rounded = std::nearbyint(x * 1e4) / 1e4;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", rounded);
  return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logharmonic mappings: radii, bounds, areas, grids and verification"};
  app.name("logharmonic");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--tol", g.tol, "Solver / quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", g.out_path, "Write output to FILE");

  RadiusArgs radius;
  auto* c_radius = app.add_subcommand("radius", "Solve one radius equation");
  c_radius->add_option("--which", radius.which, "r1..r6, starlike or starlike-example")->required();
  c_radius->add_option("--alpha", radius.alpha)->required();
  c_radius->add_option("--k", radius.k)->required();

  TableArgs table;
  auto* c_table = app.add_subcommand("table", "Tabulate a Bohr radius over alpha and k");
  c_table->add_option("--which", table.which, "r1..r6")->required();
  c_table->add_option("--alphas", table.alphas, "Comma-separated alphas")->delimiter(',');
  c_table->add_option("--ks", table.ks, "Comma-separated fold counts")->delimiter(',');

  BoundsArgs bounds;
  auto* c_bounds = app.add_subcommand("bounds", "Evaluate a bound pair");
  c_bounds->add_option("--q", bounds.quantity, "Quantity, e.g. abs-f, fz, dist-f")->required();
  c_bounds->add_option("--alpha", bounds.alpha)->required();
  c_bounds->add_option("--k", bounds.k)->required();
  c_bounds->add_option("--r", bounds.r, "Modulus |z|");

  AreaArgs area;
  auto* c_area = app.add_subcommand("area", "Area bounds (and direct Koebe area)");
  c_area->add_option("--alpha", area.alpha)->required();
  c_area->add_option("--k", area.k)->required();
  c_area->add_option("--r", area.r)->required();
  c_area->add_flag("--direct", area.direct, "Also integrate the Koebe Jacobian");
  c_area->add_option("--n-rho", area.n_rho);
  c_area->add_option("--n-theta", area.n_theta);

  GridArgs grid;
  auto* c_grid = app.add_subcommand("grid", "Export the image of a polar grid");
  c_grid->add_option("--map", grid.map, "koebe, f3, f4, f5 or identity")
      ->check(CLI::IsMember({"koebe", "f3", "f4", "f5", "identity"}));
  c_grid->add_option("--alpha", grid.alpha);
  c_grid->add_option("--k", grid.k);
  c_grid->add_option("--nr", grid.nr);
  c_grid->add_option("--ntheta", grid.ntheta);
  c_grid->add_option("--rmax", grid.rmax);

  CoeffsArgs coeffs;
  auto* c_coeffs = app.add_subcommand("coeffs", "Coefficient bounds and Koebe coefficients");
  c_coeffs->add_option("--alpha", coeffs.alpha)->required();
  c_coeffs->add_option("--k", coeffs.k)->required();
  c_coeffs->add_option("--n", coeffs.n);

  SchwarzianArgs schw;
  auto* c_schw = app.add_subcommand("schwarzian", "Pre-Schwarzian and Schwarzian at a point");
  c_schw->add_option("--map", schw.map, "koebe, f3, f4, f5, identity or analytic-koebe")
      ->check(CLI::IsMember({"koebe", "f3", "f4", "f5", "identity", "analytic-koebe"}));
  c_schw->add_option("--alpha", schw.alpha);
  c_schw->add_option("--k", schw.k);
  c_schw->add_option("--re", schw.re);
  c_schw->add_option("--im", schw.im);

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Run verification suites");
  c_verify->add_option("--suite", verify.suite)->check(CLI::IsMember(verification_suites()));
  c_verify->add_option("--samples", verify.samples);
  c_verify->add_option("--seed", verify.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream buffer;
  int code = 0;
  try {
    if (*c_radius) code = cmd_radius(radius, g, buffer);
    else if (*c_table) code = cmd_table(table, g, buffer);
    else if (*c_bounds) code = cmd_bounds(bounds, g, buffer);
    else if (*c_area) code = cmd_area(area, g, buffer);
    else if (*c_grid) code = cmd_grid(grid, g, buffer);
    else if (*c_coeffs) code = cmd_coeffs(coeffs, g, buffer);
    else if (*c_schw) code = cmd_schwarzian(schw, g, buffer);
    else if (*c_verify) code = cmd_verify(verify, g, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (g.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << g.out_path << '\n';
      return 1;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace logharmonic
