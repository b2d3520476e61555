#include "renewal/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "renewal/csv.hpp"

namespace renewal {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 45.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

struct Frame {
    double x_min, x_max, y_min, y_max;
    double px(double x) const {
        return kLeft + (x - x_min) / (x_max - x_min) * (kWidth - kLeft - kRight);
    }
    double py(double y) const {
        return kHeight - kBottom - (y - y_min) / (y_max - y_min) * (kHeight - kTop - kBottom);
    }
};

std::string num(double v) {
    return format_double(v);
}

void open_svg(std::ofstream& out, const std::string& title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";
}

void draw_axes(std::ofstream& out, const Frame& f, const std::string& x_label) {
    const double x0 = f.px(f.x_min), x1 = f.px(f.x_max);
    const double y0 = f.py(f.y_min), y1 = f.py(f.y_max);
    out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0
        << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
        << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double fx = f.x_min + (f.x_max - f.x_min) * i / 5.0;
        const double fy = f.y_min + (f.y_max - f.y_min) * i / 5.0;
        out << "<line x1=\"" << f.px(fx) << "\" y1=\"" << y0 << "\" x2=\"" << f.px(fx)
            << "\" y2=\"" << y0 + 4 << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << f.px(fx) << "\" y=\"" << y0 + 17
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
            << num(std::round(fx * 1e4) / 1e4) << "</text>\n"
            << "<line x1=\"" << x0 - 4 << "\" y1=\"" << f.py(fy) << "\" x2=\"" << x0
            << "\" y2=\"" << f.py(fy) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << x0 - 7 << "\" y=\"" << f.py(fy) + 3
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
            << num(std::round(fy * 1e4) / 1e4) << "</text>\n";
    }
    if (!x_label.empty()) {
        out << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kHeight - 8
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << x_label
            << "</text>\n";
    }
}

void draw_polyline(std::ofstream& out, const Frame& f, const std::vector<double>& xs,
                   const std::vector<double>& ys, const char* color) {
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out << f.px(xs[i]) << ',' << f.py(std::clamp(ys[i], f.y_min, f.y_max)) << ' ';
    }
    out << "\"/>\n";
}

}  // namespace

void svg_histogram(const std::string& path, const std::string& title,
                   const std::vector<double>& values, int bins, const SvgSeries* reference) {
    if (values.empty() || bins < 1) throw std::invalid_argument("svg_histogram: nothing to plot");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("svg: cannot open " + path);

    const auto [mn_it, mx_it] = std::minmax_element(values.begin(), values.end());
    double lo = *mn_it, hi = *mx_it;
    if (hi <= lo) hi = lo + 1.0;
    const double w = (hi - lo) / bins;
    std::vector<double> counts(bins, 0.0);
    for (double v : values) {
        int b = static_cast<int>((v - lo) / w);
        if (b >= bins) b = bins - 1;
        counts[b] += 1.0;
    }
    const double norm = static_cast<double>(values.size()) * w;
    double y_max = 0.0;
    for (auto& c : counts) {
        c /= norm;
        y_max = std::max(y_max, c);
    }
    if (reference) {
        for (double y : reference->ys) y_max = std::max(y_max, y);
    }

    Frame f{lo, hi, 0.0, y_max * 1.08};
    open_svg(out, title);
    draw_axes(out, f, "");
    for (int b = 0; b < bins; ++b) {
        const double x0 = f.px(lo + b * w);
        const double x1 = f.px(lo + (b + 1) * w);
        const double y = f.py(counts[b]);
        out << "<rect x=\"" << x0 << "\" y=\"" << y << "\" width=\"" << x1 - x0 << "\" height=\""
            << f.py(0.0) - y << "\" fill=\"#1f77b4\" fill-opacity=\"0.65\"/>\n";
    }
    if (reference) draw_polyline(out, f, reference->xs, reference->ys, "#d62728");
    out << "</svg>\n";
}

void svg_line_chart(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::vector<SvgSeries>& series) {
    if (series.empty()) throw std::invalid_argument("svg_line_chart: nothing to plot");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("svg: cannot open " + path);

    double x_lo = series[0].xs.front(), x_hi = x_lo, y_lo = series[0].ys.front(), y_hi = y_lo;
    for (const auto& s : series) {
        for (double x : s.xs) {
            x_lo = std::min(x_lo, x);
            x_hi = std::max(x_hi, x);
        }
        for (double y : s.ys) {
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
    }
    if (x_hi <= x_lo) x_hi = x_lo + 1.0;
    if (y_hi <= y_lo) y_hi = y_lo + 1.0;
    const double pad = 0.06 * (y_hi - y_lo);

    Frame f{x_lo, x_hi, y_lo - pad, y_hi + pad};
    open_svg(out, title);
    draw_axes(out, f, x_label);
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kPalette[i % 5];
        draw_polyline(out, f, series[i].xs, series[i].ys, color);
        out << "<text x=\"" << kWidth - kRight - 5 << "\" y=\"" << kTop + 14 * (i + 1)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << color
            << "\">" << series[i].label << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace renewal
