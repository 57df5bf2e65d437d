#include "robin/cli/format.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace robin::cli {

std::string fmt(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (std::isnan(value)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

double round9(double value) {
    if (!std::isfinite(value)) return value;
    return std::stod(fmt(value));
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
    }
    out += '\n';
    return out;
}

std::string csv_row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(fmt(v));
    return csv_row(cells);
}

}  // namespace robin::cli
