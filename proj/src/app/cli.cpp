#include "cyclic/app/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "cyclic/app/errata.hpp"
#include "cyclic/app/plot.hpp"
#include "cyclic/app/verify.hpp"
#include "cyclic/polygon_relations.hpp"
#include "cyclic/rational_distance.hpp"
#include "cyclic/solid.hpp"

namespace cyclic::app {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Request {
  std::optional<int> polygon;
  std::optional<std::string> solid;
  std::optional<std::string> R, c, L, x, y, z, C, alpha, alpha_turns, d1, d1_sq, S2, S4, L_max;
  std::optional<int> m;
  std::vector<std::string> d, d_sq;
  bool degrees = false;
  std::string backend = "float";
  std::string output;
  std::uint64_t seed = kDefaultSeed;
  std::string scope = "all";
  std::optional<int> areas;
  std::string plot_kind;
  int samples = kDefaultPlotSamples;
};

constexpr int kMaxPolygon = 64;

// ---------------------------------------------------------------------------
// Parsing helpers

template <class F>
F number(const std::optional<std::string>& text, std::string_view flag) {
  if (!text) throw UsageError(fmt::format("missing --{}", flag));
  if constexpr (std::is_same_v<F, double>) {
    char* end = nullptr;
    const double v = std::strtod(text->c_str(), &end);
    if (!text->empty() && end == text->c_str() + text->size() && std::isfinite(v)) return v;
    if (const auto q = Rational::parse(*text)) return q->to_double();
  } else {
    if (const auto q = Rational::parse(*text)) return F(*q);
  }
  throw UsageError(fmt::format("--{} expects a number, got '{}'", flag, *text));
}

template <class F>
std::vector<F> number_list(const std::vector<std::string>& items, std::string_view flag) {
  std::vector<F> out;
  for (const auto& s : items) out.push_back(number<F>(s, flag));
  return out;
}

int require_m(const Request& r) {
  if (!r.m) throw UsageError("missing --m");
  return *r.m;
}

bool exact_backend(const Request& r) {
  if (r.backend == "exact") return true;
  if (r.backend == "float") return false;
  throw UsageError(fmt::format("--backend expects exact or float, got '{}'", r.backend));
}

void require_output(const Request& r, std::initializer_list<std::string_view> allowed, std::string_view command) {
  for (auto a : allowed) {
    if (r.output == a) return;
  }
  throw UsageError(fmt::format("--output {} is not available for {}", r.output, command));
}

int polygon_n(const Request& r) {
  if (!r.polygon) throw UsageError("expected --polygon N");
  if (*r.polygon < 3 || *r.polygon > kMaxPolygon) {
    throw UsageError(fmt::format("--polygon expects 3..{}, got {}", kMaxPolygon, *r.polygon));
  }
  return *r.polygon;
}

SolidKind solid_kind(const Request& r) {
  const auto kind = parse_solid_kind(*r.solid);
  if (!kind) {
    throw UsageError(fmt::format(
        "--solid expects tetrahedron, cube, octahedron, dodecahedron or icosahedron, got '{}'", *r.solid));
  }
  return *kind;
}

void require_one_figure(const Request& r) {
  if (r.polygon.has_value() == r.solid.has_value()) throw UsageError("give exactly one of --polygon N or --solid KIND");
}

template <class F>
SolidSpec<F> solid_spec(const Request& r) {
  const SolidKind kind = solid_kind(r);
  if (r.R.has_value() == r.c.has_value()) throw UsageError("give exactly one of --R (circumradius) or --c (scale)");
  if (r.c) return SolidSpec<F>::from_scale(kind, number<F>(r.c, "c"));
  return SolidSpec<F>::from_circumradius(kind, number<F>(r.R, "R"));
}

double alpha_radians(const Request& r) {
  if (r.alpha && r.alpha_turns) throw UsageError("give at most one of --alpha and --alpha-turns");
  if (r.alpha_turns) return 2.0 * std::numbers::pi * number<double>(r.alpha_turns, "alpha-turns");
  if (!r.alpha) return 0.0;
  const double a = number<double>(r.alpha, "alpha");
  return r.degrees ? a * std::numbers::pi / 180.0 : a;
}

template <class F>
SpacePlacement<F> space_point(const Request& r) {
  return {number<F>(r.x, "x"), number<F>(r.y, "y"), number<F>(r.z, "z")};
}

/// L^2 of a solid placement from --L or from --x --y --z.
template <class F>
F solid_l_sq(const Request& r) {
  const bool xyz = r.x || r.y || r.z;
  if (xyz == r.L.has_value()) throw UsageError("give either --L or all of --x --y --z");
  if (r.L) {
    const F L = number<F>(r.L, "L");
    return L * L;
  }
  return space_point<F>(r).L_sq();
}

// ---------------------------------------------------------------------------
// Subcommands

template <class F>
std::string eval_value(const Request& r) {
  const int m = require_m(r);
  if (r.polygon) {
    return format_scalar(power_sum_closed(PolygonSpec<F>(polygon_n(r), number<F>(r.R, "R")), m, number<F>(r.L, "L")));
  }
  const auto spec = solid_spec<F>(r);
  return format_scalar(solid_power_sum_closed_sq(spec, m, solid_l_sq<F>(r)));
}

void cmd_eval(const Request& r, std::ostream& out) {
  require_one_figure(r);
  require_output(r, {"text", "csv"}, "eval");
  std::string value;
  if (!exact_backend(r)) {
    value = eval_value<double>(r);
  } else if (r.polygon) {
    value = eval_value<Rational>(r);
  } else {
    value = eval_value<QSqrt5>(r);
  }
  if (r.output == "csv") {
    out << "m,value\n" << *r.m << "," << value << "\n";
  } else {
    out << value << "\n";
  }
}

void cmd_oracle(const Request& r, std::ostream& out) {
  require_one_figure(r);
  require_output(r, {"text"}, "oracle");
  const int m = require_m(r);
  const bool exact = exact_backend(r);
  if (r.polygon) {
    const int n = polygon_n(r);
    if (exact) {
      if (!r.alpha_turns || r.alpha) throw UsageError("the exact oracle needs the angle as --alpha-turns P/Q");
      const PolygonSpec<Rational> spec(n, number<Rational>(r.R, "R"));
      const Rational L = number<Rational>(r.L, "L");
      const Rational brute = power_sums_brute_exact(spec, L, number<Rational>(r.alpha_turns, "alpha-turns"), m).back();
      const Rational closed = power_sum_closed(spec, m, L);
      out << "closed: " << format_scalar(closed) << "\nbrute:  " << format_scalar(brute)
          << "\nequal:  " << (closed == brute ? "yes" : "no") << "\n";
      return;
    }
    const PolygonSpec<double> spec(n, number<double>(r.R, "R"));
    const PlanePlacement<double> p(number<double>(r.L, "L"), alpha_radians(r));
    const double brute = power_sum_brute(spec, m, p);
    const double closed = power_sum_closed(spec, m, p.L);
    out << "closed: " << format_scalar(closed) << "\nbrute:  " << format_scalar(brute)
        << "\nrelative error: " << fmt::format("{:.3e}", relative_error(closed, brute)) << "\n";
    return;
  }
  if (exact) {
    const auto spec = solid_spec<QSqrt5>(r);
    const auto p = space_point<QSqrt5>(r);
    const QSqrt5 brute = solid_power_sum_brute(spec, m, p);
    const QSqrt5 closed = solid_power_sum_closed_sq(spec, m, p.L_sq());
    out << "closed: " << format_scalar(closed) << "\nbrute:  " << format_scalar(brute)
        << "\nequal:  " << (closed == brute ? "yes" : "no") << "\n";
    return;
  }
  const auto spec = solid_spec<double>(r);
  const auto p = space_point<double>(r);
  const double brute = solid_power_sum_brute(spec, m, p);
  const double closed = solid_power_sum_closed_sq(spec, m, p.L_sq());
  out << "closed: " << format_scalar(closed) << "\nbrute:  " << format_scalar(brute)
      << "\nrelative error: " << fmt::format("{:.3e}", relative_error(closed, brute)) << "\n";
}

template <class F>
LocusClass locus_of(const Request& r) {
  const int m = require_m(r);
  const F C = number<F>(r.C, "C");
  if (r.polygon) return locus_classify(PolygonSpec<F>(polygon_n(r), number<F>(r.R, "R")), m, C);
  return solid_locus_classify(solid_spec<F>(r), m, C);
}

void cmd_locus(const Request& r, std::ostream& out) {
  require_one_figure(r);
  require_output(r, {"text"}, "locus");
  LocusClass locus{};
  if (!exact_backend(r)) {
    locus = locus_of<double>(r);
  } else if (r.polygon) {
    locus = locus_of<Rational>(r);
  } else {
    locus = locus_of<QSqrt5>(r);
  }
  out << describe(locus) << "\n";
}

template <class F>
std::string join(const std::vector<F>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + format_scalar(values[i]);
  return s;
}

template <class F>
void solve_as(const Request& r, std::ostream& out) {
  const int n = polygon_n(r);
  if (r.d1.has_value() == r.d1_sq.has_value()) throw UsageError("give exactly one of --d1 or --d1-sq");
  F d1_sq;
  if (r.d1) {
    const F d1 = number<F>(r.d1, "d1");
    d1_sq = d1 * d1;
  } else {
    d1_sq = number<F>(r.d1_sq, "d1-sq");
  }
  const auto b = solve_distances(n, number<F>(r.R, "R"), number<F>(r.L, "L"), d1_sq);
  out << "plus:  d^2 = (" << join(b.plus.sq) << ")\n";
  out << "minus: d^2 = (" << join(b.minus.sq) << ")\n";
}

void cmd_solve(const Request& r, std::ostream& out) {
  require_output(r, {"text"}, "solve");
  if (exact_backend(r)) {
    solve_as<Rational>(r, out);
  } else {
    solve_as<double>(r, out);
  }
}

template <class F>
void recover_as(const Request& r, std::ostream& out) {
  const bool from_distances = !r.d.empty() || !r.d_sq.empty();
  if (from_distances) {
    if (!r.d.empty() && !r.d_sq.empty()) throw UsageError("give one of --d or --d-sq");
    std::vector<F> sq = number_list<F>(r.d_sq, "d-sq");
    for (const F& v : number_list<F>(r.d, "d")) sq.push_back(v * v);
    const auto rec = recover_spec_from_distances(polygon_n(r), DistanceMultiset<F>(std::move(sq)));
    out << "plus:  R^2 = " << format_scalar(rec.R_sq.plus) << ", L^2 = " << format_scalar(rec.L_sq.plus) << "\n";
    out << "minus: R^2 = " << format_scalar(rec.R_sq.minus) << ", L^2 = " << format_scalar(rec.L_sq.minus) << "\n";
    return;
  }
  const F S2 = number<F>(r.S2, "S2");
  const F S4 = number<F>(r.S4, "S4");
  BranchPair<F> pair{F(0), F(0)};
  if (r.solid) {
    solid_kind(r);
    pair = recover_r2_l2_solid(S2, S4);
  } else {
    pair = recover_r2_l2(S2, S4);
  }
  out << "{R^2, L^2} = {" << format_scalar(pair.plus) << ", " << format_scalar(pair.minus) << "}\n";
}

void cmd_recover(const Request& r, std::ostream& out) {
  require_output(r, {"text"}, "recover");
  if (r.polygon && r.solid) throw UsageError("give at most one of --polygon and --solid");
  if (exact_backend(r)) {
    recover_as<Rational>(r, out);
  } else {
    recover_as<double>(r, out);
  }
}

int cmd_verify(const Request& r, std::ostream& out) {
  require_output(r, {"text"}, "verify");
  const auto scope = parse_scope(r.scope);
  if (!scope) throw UsageError(fmt::format("--scope expects all, polygon, solid or rational, got '{}'", r.scope));
  const auto results = run_verify(*scope, r.seed);
  out << verify_table(*scope, r.seed, results);
  for (const auto& c : results) {
    if (!c.passed()) return kExitVerifyFailed;
  }
  return kExitOk;
}

void cmd_rational24(const Request& r, std::ostream& out) {
  require_output(r, {"text"}, "rational24");
  if (!r.areas) {
    if (!r.d.empty() || !r.d_sq.empty()) throw UsageError("--d and --d-sq need --areas 4 or --areas 6");
    out << rational_distance_report().render();
    return;
  }
  if (*r.areas != 4 && *r.areas != 6) throw UsageError("--areas expects 4 or 6");
  AreaConditionReport report;
  if (!r.d.empty()) {
    report = necessary_condition_areas(*r.areas, r.d);
  } else {
    report = necessary_condition_areas(*r.areas, DistanceMultiset<Rational>(number_list<Rational>(r.d_sq, "d-sq")));
  }
  for (const auto& c : report.conditions) {
    out << fmt::format("{}: {} ({})\n", c.window, format_scalar(c.value),
                       c.rational_area ? "rational area" : "irrational area");
  }
  out << "areas equal: " << (report.areas_equal ? "yes" : "no") << "\n";
  out << "all distances rational: " << (report.all_distances_rational ? "yes" : "no") << "\n";
  out << "necessary conditions: " << (report.holds() ? "hold" : "fail") << "\n";
}

void cmd_plot(Request r, std::ostream& out) {
  if (r.backend == "exact") throw UsageError("plots use the float backend");
  if (r.plot_kind == "locus-circle") {
    if (r.output.empty()) r.output = "svg";
    require_output(r, {"svg"}, "plot locus-circle");
    const PolygonSpec<double> spec(polygon_n(r), number<double>(r.R, "R"));
    out << locus_circle_svg(spec, require_m(r), number<double>(r.C, "C"));
    return;
  }
  if (r.output.empty()) r.output = "csv";
  require_output(r, {"csv"}, "plot " + r.plot_kind);
  if (r.plot_kind == "powersum-vs-alpha") {
    const PolygonSpec<double> spec(polygon_n(r), number<double>(r.R, "R"));
    out << powersum_vs_alpha_csv(spec, require_m(r), number<double>(r.L, "L"), r.samples);
    return;
  }
  if (r.plot_kind == "powersum-vs-L") {
    require_one_figure(r);
    const int m = require_m(r);
    if (r.polygon) {
      const PolygonSpec<double> spec(polygon_n(r), number<double>(r.R, "R"));
      const double L_max = r.L_max ? number<double>(r.L_max, "L-max") : 2 * spec.R;
      out << powersum_vs_l_csv(spec, m, L_max, r.samples);
    } else {
      const auto spec = solid_spec<double>(r);
      const double L_max = r.L_max ? number<double>(r.L_max, "L-max") : 2 * std::sqrt(spec.R_sq);
      out << powersum_vs_l_csv(spec, m, L_max, r.samples);
    }
    return;
  }
  throw UsageError(
      fmt::format("plot kind must be locus-circle, powersum-vs-alpha or powersum-vs-L, got '{}'", r.plot_kind));
}

// ---------------------------------------------------------------------------
// Option groups

void add_backend(CLI::App* app, Request& r) {
  app->add_option("--backend", r.backend, "exact or float")->envname("CYCLIC_BACKEND");
}
void add_figure(CLI::App* app, Request& r) {
  app->add_option("--polygon", r.polygon, "regular polygon with N vertices");
  app->add_option("--solid", r.solid, "tetrahedron|cube|octahedron|dodecahedron|icosahedron");
  app->add_option("--R", r.R, "circumradius");
  app->add_option("--c", r.c, "solid coordinate scale");
}
void add_space(CLI::App* app, Request& r) {
  app->add_option("--x", r.x);
  app->add_option("--y", r.y);
  app->add_option("--z", r.z);
}
void add_angle(CLI::App* app, Request& r) {
  app->add_option("--alpha", r.alpha, "angle of M from A1 (radians)");
  app->add_option("--alpha-turns", r.alpha_turns, "angle as a fraction of a full turn, e.g. 1/8");
  app->add_flag("--degrees", r.degrees, "read --alpha in degrees");
}
void add_distances(CLI::App* app, Request& r) {
  app->add_option("--d", r.d, "distances d1 ... dn")->delimiter(',');
  app->add_option("--d-sq", r.d_sq, "squared distances d1^2 ... dn^2")->delimiter(',');
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Request r;
  CLI::App app{"Cyclic averages of regular polygons and Platonic solids", "cyclic"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "closed-form sum of d^(2m)");
  add_figure(eval, r);
  add_space(eval, r);
  eval->add_option("--L", r.L, "distance of M from the centroid");
  eval->add_option("--m", r.m, "power index");
  add_backend(eval, r);

  auto* oracle = app.add_subcommand("oracle", "closed form against the vertex-by-vertex sum");
  add_figure(oracle, r);
  add_space(oracle, r);
  add_angle(oracle, r);
  oracle->add_option("--L", r.L);
  oracle->add_option("--m", r.m);
  add_backend(oracle, r);

  auto* locus = app.add_subcommand("locus", "locus of points where the sum equals C");
  add_figure(locus, r);
  locus->add_option("--m", r.m);
  locus->add_option("--C", r.C, "target sum of d^(2m)");
  add_backend(locus, r);

  auto* solve = app.add_subcommand("solve", "all distances from R, L and d1 (n = 3, 4, 6)");
  solve->add_option("--polygon", r.polygon);
  solve->add_option("--R", r.R);
  solve->add_option("--L", r.L);
  solve->add_option("--d1", r.d1);
  solve->add_option("--d1-sq", r.d1_sq);
  add_backend(solve, r);

  auto* recover = app.add_subcommand("recover", "R^2 and L^2 from distances or from S2, S4");
  recover->add_option("--polygon", r.polygon);
  recover->add_option("--solid", r.solid);
  add_distances(recover, r);
  recover->add_option("--S2", r.S2);
  recover->add_option("--S4", r.S4);
  add_backend(recover, r);

  auto* verify = app.add_subcommand("verify", "seeded sweeps over every identity");
  verify->add_option("--scope", r.scope, "all|polygon|solid|rational");
  verify->add_option("--seed", r.seed);

  auto* rational24 = app.add_subcommand("rational24", "rational distances and the unit 24-gon");
  rational24->add_option("--areas", r.areas, "check the area conditions for n = 4 or 6");
  add_distances(rational24, r);

  auto* plot = app.add_subcommand("plot", "CSV or SVG plot data");
  plot->add_option("kind", r.plot_kind, "locus-circle|powersum-vs-alpha|powersum-vs-L")->required();
  add_figure(plot, r);
  plot->add_option("--L", r.L);
  plot->add_option("--L-max", r.L_max);
  plot->add_option("--m", r.m);
  plot->add_option("--C", r.C);
  plot->add_option("--samples", r.samples);
  add_backend(plot, r);

  auto* errata = app.add_subcommand("errata", "misprinted formulas and their re-checked corrections");

  for (auto* sub : {eval, oracle, locus, solve, recover, verify, rational24, plot, errata}) sub->add_option("--output", r.output, "text|csv|svg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const bool default_text = r.output.empty() && !plot->parsed();
  if (default_text) r.output = "text";

  CLI::App* active = app.get_subcommands().front();
  try {
    if (eval->parsed()) cmd_eval(r, out);
    if (oracle->parsed()) cmd_oracle(r, out);
    if (locus->parsed()) cmd_locus(r, out);
    if (solve->parsed()) cmd_solve(r, out);
    if (recover->parsed()) cmd_recover(r, out);
    if (verify->parsed()) return cmd_verify(r, out);
    if (rational24->parsed()) cmd_rational24(r, out);
    if (plot->parsed()) cmd_plot(r, out);
    if (errata->parsed()) {
      require_output(r, {"text"}, "errata");
      out << errata_table(check_errata());
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << active->help();
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace cyclic::app
