#include "pmode/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace pmode {

namespace {

constexpr double kWidth = 900.0, kHeight = 560.0;
constexpr double kLeft = 72.0, kRight = 24.0, kTop = 44.0, kBottom = 56.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Round a raw interval to a 1/2/5 x 10^k tick spacing.
double nice_step(double span, int target_ticks) {
    if (span <= 0.0) return 1.0;
    const double raw = span / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    double step = 10.0;
    if (norm <= 1.0) step = 1.0;
    else if (norm <= 2.0) step = 2.0;
    else if (norm <= 5.0) step = 5.0;
    return step * mag;
}

} // namespace

void write_svg_plot(const std::filesystem::path& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<PlotSeries>& series) {
    if (series.empty()) throw std::invalid_argument("write_svg_plot: no series");

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size() || s.x.empty())
            throw std::invalid_argument("write_svg_plot: bad series " + s.label);
        for (double v : s.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
        for (double v : s.y) { ymin = std::min(ymin, v); ymax = std::max(ymax, v); }
    }
    if (xmax == xmin) { xmax += 1.0; xmin -= 1.0; }
    if (ymax == ymin) { ymax += 1.0; ymin -= 1.0; }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return kTop + (1.0 - (y - ymin) / (ymax - ymin)) * ph; };

    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

    // Gridlines and ticks.
    const double xstep = nice_step(xmax - xmin, 8);
    const double ystep = nice_step(ymax - ymin, 6);
    for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-12; x += xstep) {
        out << "<line x1=\"" << fmt(sx(x)) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(sx(x))
            << "\" y2=\"" << fmt(kTop + ph) << "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(sx(x)) << "\" y=\"" << fmt(kTop + ph + 18)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << fmt_tick(x) << "</text>\n";
    }
    for (double y = std::ceil(ymin / ystep) * ystep; y <= ymax + 1e-12; y += ystep) {
        out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(sy(y)) << "\" x2=\""
            << fmt(kLeft + pw) << "\" y2=\"" << fmt(sy(y))
            << "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(kLeft - 6) << "\" y=\"" << fmt(sy(y) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << fmt_tick(y) << "</text>\n";
    }

    // Axes.
    out << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(pw)
        << "\" height=\"" << fmt(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"" << fmt(kHeight - 14)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << x_label
        << "</text>\n";
    out << "<text x=\"18\" y=\"" << fmt(kTop + ph / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 18 " << fmt(kTop + ph / 2) << ")\">" << y_label << "</text>\n";

    // Series polylines.
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\" points=\"";
        for (std::size_t i = 0; i < series[s].x.size(); ++i) {
            if (i) out << ' ';
            out << fmt(sx(series[s].x[i])) << ',' << fmt(sy(series[s].y[i]));
        }
        out << "\"/>\n";
    }

    // Legend, top-right corner of the plot area.
    const double lx = kLeft + pw - 150.0, ly = kTop + 12.0;
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        const double yy = ly + 18.0 * static_cast<double>(s);
        out << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(yy) << "\" x2=\"" << fmt(lx + 26)
            << "\" y2=\"" << fmt(yy) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << fmt(lx + 32) << "\" y=\"" << fmt(yy + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[s].label
            << "</text>\n";
    }

    out << "</svg>\n";
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

} // namespace pmode
