#include "cyclic/app/plot.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

#include "cyclic/polygon.hpp"
#include "cyclic/solid.hpp"

namespace cyclic::app {

namespace {

void check_samples(int samples) {
  if (samples < 2) throw DomainError(ErrorCode::InvalidSpec, "a plot needs at least 2 samples");
}

}  // namespace

std::string powersum_vs_alpha_csv(const PolygonSpec<double>& spec, int m, double L, int samples) {
  check_samples(samples);
  if (m < 1) throw DomainError(ErrorCode::OutOfRange, "power index m must be >= 1");
  std::string out = "alpha,value\n";
  for (int k = 0; k < samples; ++k) {
    const double alpha = 2.0 * std::numbers::pi * k / samples;
    out += fmt::format("{},{}\n", format_roundtrip(alpha),
                       format_roundtrip(power_sum_brute(spec, m, PlanePlacement<double>(L, alpha))));
  }
  return out;
}

std::string powersum_vs_l_csv(const PolygonSpec<double>& spec, int m, double L_max, int samples) {
  check_samples(samples);
  check_polygon_power(spec.n, m);
  std::string out = "L,value\n";
  for (int k = 0; k < samples; ++k) {
    const double L = L_max * k / (samples - 1);
    out += fmt::format("{},{}\n", format_roundtrip(L), format_roundtrip(power_sum_closed(spec, m, L)));
  }
  return out;
}

std::string powersum_vs_l_csv(const SolidSpec<double>& spec, int m, double L_max, int samples) {
  check_samples(samples);
  check_solid_power(spec.kind, m);
  std::string out = "L,value\n";
  for (int k = 0; k < samples; ++k) {
    const double L = L_max * k / (samples - 1);
    out += fmt::format("{},{}\n", format_roundtrip(L), format_roundtrip(solid_power_sum_closed(spec, m, L)));
  }
  return out;
}

std::string locus_circle_svg(const PolygonSpec<double>& spec, int m, double C) {
  const LocusClass locus = locus_classify(spec, m, C);
  const double extent = std::max(spec.R, locus.radius);
  // Figure fills 80% of the viewport.
  const double scale = 400.0 / extent;
  auto sx = [&](double x) { return 500.0 + scale * x; };
  auto sy = [&](double y) { return 500.0 - scale * y; };

  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
  out += fmt::format("  <title>n={} m={} C={}: {}</title>\n", spec.n, m, format_scalar(C), describe(locus));
  out += "  <rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  std::string points;
  for (int i = 1; i <= spec.n; ++i) {
    const Point2 v = polygon_vertex(spec.n, spec.R, i);
    points += fmt::format("{}{:.4f},{:.4f}", i > 1 ? " " : "", sx(v.x), sy(v.y));
  }
  out += fmt::format("  <polygon points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n", points);
  for (int i = 1; i <= spec.n; ++i) {
    const Point2 v = polygon_vertex(spec.n, spec.R, i);
    out += fmt::format("  <circle class=\"vertex\" cx=\"{:.4f}\" cy=\"{:.4f}\" r=\"5\" fill=\"black\"/>\n", sx(v.x),
                       sy(v.y));
  }
  out += "  <circle class=\"centroid\" cx=\"500\" cy=\"500\" r=\"4\" fill=\"red\"/>\n";
  if (locus.kind == LocusKind::Circle) {
    out += fmt::format(
        "  <circle class=\"locus\" data-radius=\"{}\" cx=\"500\" cy=\"500\" r=\"{:.4f}\" fill=\"none\" stroke=\"blue\" "
        "stroke-width=\"2\"/>\n",
        format_scalar(locus.radius), scale * locus.radius);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace cyclic::app
