#pragma once

#include <string>
#include <vector>

namespace robin::cli {

/// Nine significant digits ("%.9g").
std::string fmt(double value);

/// Value rounded to nine significant digits, for JSON emission.
double round9(double value);

std::string csv_row(const std::vector<std::string>& cells);
std::string csv_row(const std::vector<double>& values);

inline constexpr const char* kSchema = "robin-spectral/1";

}  // namespace robin::cli
