// csv.hpp — Deterministic CSV emission for time/frequency series

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace pmode {

// Format a double with 12 significant digits, locale-independent.
std::string format_value(double v);

// Write "x_name,series_name" followed by one row per sample, LF endings.
// Parent directories are created as needed.
void write_series_csv(const std::filesystem::path& path, const std::string& x_name,
                      const std::string& series_name, const std::vector<double>& x,
                      const std::vector<double>& y);

// Write an arbitrary rectangular table (used by sweep summaries).
void write_table_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

} // namespace pmode
