#pragma once

#include <array>
#include <string>
#include <vector>

#include "tropmirror/tropical/complex.hpp"

namespace tropmirror::cli {

// 800×800 overlay: Q shaded, Π in black, the rescaled cloud in gray. The
// world-to-viewport map is recorded in <metadata>; the only varying line is
// the timestamp comment.
std::string overlay_svg(const tropical::TropicalComplex& pi, const std::vector<std::vector<double>>& cloud,
                        const std::array<double, 4>& window, const std::string& timestamp);

}  // namespace tropmirror::cli
