#pragma once

#include "troplab/curve.hpp"
#include "troplab/eigenmap.hpp"

#include <string>
#include <vector>

namespace troplab {

/// Standalone SVG drawing of Gamma_C with vertex labels and edge weights.
/// Each overlay (a divisor, or one divisor per orbit step) is drawn as a
/// group of dots.
std::string render_svg(const CurveModel& curve, const std::vector<std::vector<PlanarPoint>>& overlays = {});

}  // namespace troplab
