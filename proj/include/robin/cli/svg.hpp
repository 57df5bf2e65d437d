#pragma once

#include <string>
#include <vector>

namespace robin::cli {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f77b4";
};

struct PlotOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    std::vector<double> horizontal_lines;  ///< dashed reference levels
    int width = 640;
    int height = 420;
};

/// Standalone SVG document with axes, tick labels and one polyline per series.
std::string svg_plot(const std::vector<Series>& series, const PlotOptions& options);

}  // namespace robin::cli
