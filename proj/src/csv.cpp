#include "pmode/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace pmode {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

} // namespace

void write_series_csv(const std::filesystem::path& path, const std::string& x_name,
                      const std::string& series_name, const std::vector<double>& x,
                      const std::vector<double>& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("write_series_csv: column length mismatch");
    std::ofstream out = open_for_write(path);
    out << x_name << ',' << series_name << '\n';
    for (std::size_t i = 0; i < x.size(); ++i)
        out << format_value(x[i]) << ',' << format_value(y[i]) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_table_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
    std::ofstream out = open_for_write(path);
    for (std::size_t i = 0; i < header.size(); ++i)
        out << header[i] << (i + 1 < header.size() ? ',' : '\n');
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("write_table_csv: row width mismatch");
        for (std::size_t i = 0; i < row.size(); ++i)
            out << format_value(row[i]) << (i + 1 < row.size() ? ',' : '\n');
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

} // namespace pmode
