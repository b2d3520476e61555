#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace renewal {

// 1.63/sqrt(n) is the asymptotic ~1% critical value of the one-sample
// Kolmogorov-Smirnov statistic.
inline constexpr double kKsCriticalCoefficient = 1.63;

struct KsReport {
    double statistic = 0.0;
    std::uint64_t n = 0;
    double threshold = 0.0;
    bool pass = false;
};

inline KsReport make_ks_report(double statistic, std::uint64_t n, double threshold = 0.0) {
    KsReport r;
    r.statistic = statistic;
    r.n = n;
    r.threshold = threshold > 0.0 ? threshold
                                  : kKsCriticalCoefficient / std::sqrt(static_cast<double>(n));
    r.pass = r.statistic < r.threshold;
    return r;
}

// sup_x |F_n(x) - F(x)| for a fully specified reference CDF. The CDF is
// evaluated in ascending sample order, so stateful incremental evaluators
// (e.g. running integrals) are fine.
template <class Cdf>
double ks_statistic(std::vector<double> samples, Cdf&& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        const double lo = f - static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n - f;
        d = std::max(d, std::max(lo, hi));
    }
    return d;
}

inline double ks_statistic_uniform01(std::vector<double> samples) {
    return ks_statistic(std::move(samples), [](double x) {
        return x <= 0.0 ? 0.0 : (x >= 1.0 ? 1.0 : x);
    });
}

template <class Cdf>
KsReport ks_test(std::vector<double> samples, Cdf&& cdf, double threshold = 0.0) {
    const std::uint64_t n = samples.size();
    return make_ks_report(ks_statistic(std::move(samples), std::forward<Cdf>(cdf)), n, threshold);
}

struct SampleSummary {
    double mean = 0.0;
    double sd = 0.0;
    double stderr_mean = 0.0;
    std::uint64_t n = 0;
};

// Two-pass, summed in index order: deterministic for a fixed buffer.
inline SampleSummary summarize(std::span<const double> xs) {
    SampleSummary s;
    s.n = xs.size();
    if (s.n == 0) return s;
    double sum = 0.0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(s.n);
    if (s.n < 2) return s;
    double ss = 0.0;
    for (double x : xs) {
        const double d = x - s.mean;
        ss += d * d;
    }
    s.sd = std::sqrt(ss / static_cast<double>(s.n - 1));
    s.stderr_mean = s.sd / std::sqrt(static_cast<double>(s.n));
    return s;
}

}  // namespace renewal
