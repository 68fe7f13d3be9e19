#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "report.hpp"

namespace shockcast::cli {

// Impact-vs-quarter line chart for one sector, with a zero baseline.
std::string sector_chart_svg(const SectorReport& sector);

// Bar chart of every sector's impact at the trough quarter (1-based position
// within the window).
std::string trough_chart_svg(const RunReport& report, int trough_position);

// Writes impact_<SECTOR>.svg for every sector plus trough_response.svg.
// Throws IoError when the directory cannot be created or written.
std::vector<std::filesystem::path> write_plots(const RunReport& report, const std::filesystem::path& out_dir);

}  // namespace shockcast::cli
