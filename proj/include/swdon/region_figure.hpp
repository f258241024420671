#pragma once

#include "swdon/relations.hpp"

#include <string>

namespace swdon {

/// The (lambda^2, delta) plane: both lines, the triangle they cut off above
/// delta = 0, one <circle> per marked point (class "marked filled" or "marked hollow").
std::string render_svg(const RegionDescription& region);

/// Text grid, delta decreasing downwards: '*' marked, 'o' hollow, '.' inside, ' ' outside.
std::string render_ascii(const RegionDescription& region);

/// "XMIN:XMAX,DMIN:DMAX"
Window parse_window(std::string_view spec);

}  // namespace swdon
