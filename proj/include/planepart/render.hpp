#pragma once

#include <string>

#include "planepart/components.hpp"
#include "planepart/plane_partition.hpp"

namespace planepart {

// Text grid of the support: entries with component boundaries drawn between
// unequal neighbours, followed by the per-cell levels and the component ids.
std::string render_ascii(const PlanePartition& pp, const ComponentAnalysis& analysis);

// Flat 2-D SVG: one square per support cell filled by component, bold
// strokes on component boundaries, entry and level printed in each cell.
std::string render_svg(const PlanePartition& pp, const ComponentAnalysis& analysis);

}  // namespace planepart
