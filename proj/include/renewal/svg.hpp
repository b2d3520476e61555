#pragma once

#include <string>
#include <vector>

namespace renewal {

struct SvgSeries {
    std::string label;
    std::vector<double> xs;
    std::vector<double> ys;
};

/// Density-normalized histogram, optionally with a reference curve on top.
/// The output is a single self-contained SVG file.
void svg_histogram(const std::string& path, const std::string& title,
                   const std::vector<double>& values, int bins,
                   const SvgSeries* reference = nullptr);

/// Simple multi-series line chart with markers.
void svg_line_chart(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::vector<SvgSeries>& series);

}  // namespace renewal
