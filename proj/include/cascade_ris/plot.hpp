// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "cascade_ris/simulator.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cascade_ris {

/// Static SVG line chart: one polyline per series (mean), with +-std_error
/// whiskers.  Invalid rows are skipped.
std::string render_svg(const std::vector<SweepRow>& rows, std::string_view x_label);

}  // namespace cascade_ris
