#pragma once

#include <string>

namespace packcov {

// Round-trip decimal rendering (printf %.17g); used everywhere a double lands
// in a CSV or JSON byte stream so repeated runs stay byte-identical.
std::string format_g17(double v);

}  // namespace packcov
