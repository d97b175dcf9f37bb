#pragma once

#include <string>

#include "ptl/strata.hpp"

namespace ptl::cli {

// Compact polygon notation: "ord^e + (s/t,(t-s)/t)^n + ss^k" pieces joined
// by '+', exponent 1 omitted, e.g. "(1/4,3/4)+ss^2" or "ord^2+ss^4".
std::string polygon_str(const zeta::NewtonPolygon& np);

// Inverse of polygon_str; also accepts bare "a/b^n" slope blocks.
zeta::NewtonPolygon parse_polygon(const std::string& text);

std::string rat_str(const Rat& r);

}  // namespace ptl::cli
