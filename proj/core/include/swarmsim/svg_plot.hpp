#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace swarmsim {

struct Series {
    std::string label;
    std::vector<double> xs;
    std::vector<double> ys;
};

/// Static SVG line chart, one polyline per series, axes with ticks and a
/// legend. Throws std::invalid_argument when there is no data to plot; in
/// that case no file is written.
void write_line_chart(const std::filesystem::path& path, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      const std::vector<Series>& series);

}  // namespace swarmsim
