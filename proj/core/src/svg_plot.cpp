#include "swarmsim/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace swarmsim {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 520.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 170.0;  // room for the legend
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 55.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string fmt(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

// A short tick label; trims trailing zeros from fixed notation.
std::string tick_label(double v) {
    if (v != 0.0 && (std::fabs(v) >= 1e6 || std::fabs(v) < 1e-3)) {
        std::ostringstream out;
        out.precision(3);
        out << v;
        return out.str();
    }
    std::ostringstream out;
    out.precision(6);
    out << std::defaultfloat << v;
    return out.str();
}

}  // namespace

void write_line_chart(const std::filesystem::path& path, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      const std::vector<Series>& series) {
    bool has_points = false;
    for (const auto& s : series) {
        if (s.xs.size() != s.ys.size()) {
            throw std::invalid_argument("write_line_chart: series '" + s.label +
                                        "' has mismatched x/y lengths");
        }
        if (!s.xs.empty()) has_points = true;
    }
    if (series.empty() || !has_points) {
        throw std::invalid_argument("write_line_chart: no data to plot");
    }

    double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
    bool first = true;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            if (first) {
                x_min = x_max = s.xs[i];
                y_min = y_max = s.ys[i];
                first = false;
            } else {
                x_min = std::min(x_min, s.xs[i]);
                x_max = std::max(x_max, s.xs[i]);
                y_min = std::min(y_min, s.ys[i]);
                y_max = std::max(y_max, s.ys[i]);
            }
        }
    }
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    const auto to_px = [&](double x, double y) {
        const double px = kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w;
        const double py = kMarginTop + (1.0 - (y - y_min) / (y_max - y_min)) * plot_h;
        return std::pair{px, py};
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

    // axes
    svg << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#333\"/>\n";

    constexpr int kTicks = 5;
    for (int t = 0; t <= kTicks; ++t) {
        const double fx = x_min + (x_max - x_min) * t / kTicks;
        const double fy = y_min + (y_max - y_min) * t / kTicks;
        const auto [px, _unused] = to_px(fx, y_min);
        const auto [_unused2, py] = to_px(x_min, fy);
        svg << "<line x1=\"" << px << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\"" << px
            << "\" y2=\"" << kMarginTop + plot_h + 5 << "\" stroke=\"#333\"/>\n";
        svg << "<text x=\"" << px << "\" y=\"" << kMarginTop + plot_h + 20
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << tick_label(fx) << "</text>\n";
        svg << "<line x1=\"" << kMarginLeft - 5 << "\" y1=\"" << py << "\" x2=\"" << kMarginLeft
            << "\" y2=\"" << py << "\" stroke=\"#333\"/>\n";
        svg << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << py + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << tick_label(fy) << "</text>\n";
    }

    svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << x_label
        << "</text>\n";
    svg << "<text x=\"18\" y=\"" << kMarginTop + plot_h / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 18 " << kMarginTop + plot_h / 2 << ")\">" << y_label
        << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        if (series[s].xs.empty()) continue;
        const char* color = kPalette[s % (sizeof kPalette / sizeof kPalette[0])];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < series[s].xs.size(); ++i) {
            const auto [px, py] = to_px(series[s].xs[i], series[s].ys[i]);
            svg << fmt(px) << "," << fmt(py) << " ";
        }
        svg << "\"/>\n";
        const double ly = kMarginTop + 14.0 + 18.0 * static_cast<double>(s);
        svg << "<line x1=\"" << kWidth - kMarginRight + 12 << "\" y1=\"" << ly << "\" x2=\""
            << kWidth - kMarginRight + 36 << "\" y2=\"" << ly << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << kWidth - kMarginRight + 42 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[s].label
            << "</text>\n";
    }
    svg << "</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << svg.str();
}

}  // namespace swarmsim
