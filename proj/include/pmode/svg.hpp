// svg.hpp — Minimal line-plot rendering for regression figures

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace pmode {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// One SVG with axes, tick labels, a legend and one polyline per series.
// Linear scales only; intended as a regression artifact, not publication art.
void write_svg_plot(const std::filesystem::path& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<PlotSeries>& series);

} // namespace pmode
