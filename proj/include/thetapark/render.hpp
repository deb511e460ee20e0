#pragma once

#include <string>

#include "thetapark/paths.hpp"

namespace thetapark {

// TikZ picture in the style of the figures: gray grid, yellow fill between
// the paths, red top path, green bottom path, labels in the cells right of
// the top path's North steps, and x-marks on the East steps pruned by the
// e-composition algorithm.  Byte-deterministic.
std::string render_tikz(const PathPair& p);

// Minimal standalone SVG with the same content.
std::string render_svg(const PathPair& p);

} // namespace thetapark
