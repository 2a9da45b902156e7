#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace mixsim {

// Fixed series palette; index wraps.
const std::string& series_color(std::size_t index);

// Radar chart: nine axes (one per measure name), one polygon per row of
// normalized values in [0,1]; absent values break the polygon outline.
// Deterministic bytes for identical input.
std::string radar_svg(const std::vector<std::string>& row_labels,
                      const std::vector<std::array<std::optional<double>, 9>>& rows,
                      const std::string& title);

} // namespace mixsim
