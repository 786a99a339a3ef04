#pragma once

// Plot data for the CLI: CSV curves and an SVG of the locus circle.

#include <optional>
#include <string>

#include "cyclic/geometry.hpp"

namespace cyclic::app {

inline constexpr int kDefaultPlotSamples = 512;

/// "alpha,value" rows of the vertex sum over one full turn of M at distance L.
std::string powersum_vs_alpha_csv(const PolygonSpec<double>& spec, int m, double L, int samples = kDefaultPlotSamples);

/// "L,value" rows of the closed-form sum for L in [0, L_max].
std::string powersum_vs_l_csv(const PolygonSpec<double>& spec, int m, double L_max, int samples = kDefaultPlotSamples);
std::string powersum_vs_l_csv(const SolidSpec<double>& spec, int m, double L_max, int samples = kDefaultPlotSamples);

/// 1000x1000 SVG with the polygon, its centroid and the circle where the
/// m-th power sum equals C (if that locus is a circle).
std::string locus_circle_svg(const PolygonSpec<double>& spec, int m, double C);

}  // namespace cyclic::app
