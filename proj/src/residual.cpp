#include "renewal/residual.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "renewal/errors.hpp"
#include "renewal/parallel.hpp"

namespace renewal {

namespace {

double integrate_smooth(const std::function<double(double)>& f, double a, double b) {
    if (b <= a) return 0.0;
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 12, 1e-10, &err);
}

}  // namespace

double residual_pdf(const DistributionSpec& spec, double x) {
    if (x < 0.0) throw std::invalid_argument("residual_pdf: x must be nonnegative");
    return survival(spec, x) / spec.mean();
}

double residual_cdf(const DistributionSpec& spec, double x) {
    if (x <= 0.0) return 0.0;
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Deterministic>) {
                return std::min(x / p.t, 1.0);
            } else if constexpr (std::is_same_v<T, Exponential>) {
                return -std::expm1(-p.rate * x);  // memoryless: same law again
            } else if constexpr (std::is_same_v<T, UniformInterval>) {
                const double w = p.b - p.a;
                if (x >= p.b) return 1.0;
                double area = std::min(x, p.a);
                if (x > p.a) area += 0.5 * w - (p.b - x) * (p.b - x) / (2.0 * w);
                return area / spec.mean();
            } else {
                const double hi = std::min(x, quantile(spec, 1.0 - 1e-14));
                const double v = integrate_smooth([&](double y) { return survival(spec, y); },
                                                  0.0, hi) /
                                 spec.mean();
                return std::min(v, 1.0);
            }
        },
        spec.variant());
}

double length_biased_pdf(const DistributionSpec& spec, double v) {
    if (!(v > 0.0)) {
        // a zero-length interval can never contain an interior point
        throw UnsupportedPoint("length_biased_pdf: v must be positive");
    }
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Deterministic>) {
                if (v == p.t) return 1.0;  // point mass: v * 1 / mean
                throw UnsupportedPoint("length_biased_pdf: not an atom of the law");
            } else if constexpr (std::is_same_v<T, DiscreteAtoms>) {
                for (const auto& a : p.atoms) {
                    if (a.value == v) return v * a.prob / spec.mean();
                }
                throw UnsupportedPoint("length_biased_pdf: not an atom of the law");
            } else {
                return v * density(spec, v) / spec.mean();
            }
        },
        spec.variant());
}

double length_biased_cdf(const DistributionSpec& spec, double v) {
    if (!spec.has_density()) {
        throw std::invalid_argument("length_biased_cdf: continuous variants only");
    }
    if (v <= 0.0) return 0.0;
    const double hi = std::min(v, quantile(spec, 1.0 - 1e-14));
    const double r = integrate_smooth([&](double y) { return y * density(spec, y); }, 0.0, hi) /
                     spec.mean();
    return std::min(r, 1.0);
}

double IntegratedCdf::operator()(double x) {
    if (x < last_x_) throw std::logic_error("IntegratedCdf: queries must be nondecreasing");
    const auto& spec = *spec_;
    if (kind_ == Kind::Residual) {
        // closed forms are cheap, no need for the incremental path
        if (!std::holds_alternative<LogNormal>(spec.variant()) &&
            !std::holds_alternative<GammaLaw>(spec.variant())) {
            last_x_ = x;
            return residual_cdf(spec, x);
        }
        acc_ += integrate_smooth([&](double y) { return survival(spec, y); }, last_x_, x) /
                spec.mean();
    } else {
        acc_ += integrate_smooth([&](double y) { return y * density(spec, y); }, last_x_, x) /
                spec.mean();
    }
    last_x_ = x;
    return std::min(acc_, 1.0);
}

ResidualSampleSet sample_residuals(const DistributionSpec& spec, const WindowStrategy& strat,
                                   std::uint64_t n_trials, std::uint64_t seed,
                                   const EstimateOptions& opts) {
    if (n_trials == 0) throw std::invalid_argument("sample_residuals: need n_trials >= 1");

    ResidualSampleSet out;
    out.residuals.resize(n_trials);
    out.ages.resize(n_trials);
    out.containing_intervals.resize(n_trials);

    std::visit(
        [&](const auto& params) {
            parallel_for_chunks(n_trials, opts.threads, [&](std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t i = b; i < e; ++i) {
                    RandomStream rs(seed, opts.stream_base + i);
                    const double u1 = place_start(strat, rs);
                    auto draw = make_sampler(params, rs);
                    double prev = 0.0;
                    double pos = 0.0;
                    std::uint64_t steps = 0;
                    for (;;) {
                        const double t = draw();
                        pos += t;
                        if (pos > u1) {
                            out.ages[i] = u1 - prev;
                            out.residuals[i] = pos - u1;
                            out.containing_intervals[i] = t;
                            break;
                        }
                        prev = pos;
                        if (++steps >= opts.event_cap) {
                            throw HorizonOverflow("sample_residuals: event cap reached");
                        }
                    }
                }
            });
        },
        spec.variant());
    return out;
}

std::vector<UniformityBucket> conditional_uniformity_check(const ResidualSampleSet& samples,
                                                           double bucket_width,
                                                           std::uint64_t min_bucket) {
    const std::size_t n = samples.residuals.size();
    if (n == 0) throw std::invalid_argument("conditional_uniformity_check: empty sample set");
    if (bucket_width < 0.0) throw std::invalid_argument("conditional_uniformity_check: negative width");

    // key: exact containing value, or the bin index scaled back to its left edge
    std::map<double, std::vector<double>> groups;
    for (std::size_t i = 0; i < n; ++i) {
        const double c = samples.containing_intervals[i];
        const double key = bucket_width == 0.0 ? c : std::floor(c / bucket_width) * bucket_width;
        groups[key].push_back(samples.residuals[i] / c);
    }

    std::vector<UniformityBucket> out;
    out.reserve(groups.size());
    for (auto& [key, ratios] : groups) {
        UniformityBucket b;
        b.lower = key;
        b.upper = bucket_width == 0.0 ? key : key + bucket_width;
        b.count = ratios.size();
        if (b.count >= min_bucket) {
            b.tested = true;
            b.ks = make_ks_report(ks_statistic_uniform01(std::move(ratios)), b.count);
        }
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace renewal
