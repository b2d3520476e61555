#pragma once

#include <cstdint>
#include <vector>

#include "renewal/distributions.hpp"
#include "renewal/estimator.hpp"
#include "renewal/stats.hpp"
#include "renewal/window.hpp"

namespace renewal {

/// Residual-life density h_X(x) = P(T > x) / E(T).
double residual_pdf(const DistributionSpec& spec, double x);

/// CDF of the residual law, i.e. the integral of residual_pdf from 0 to x.
/// Deterministic, Exponential and UniformInterval integrate in closed form;
/// the rest run adaptive quadrature on the survival function.
double residual_cdf(const DistributionSpec& spec, double x);

/// Length-biased density g(v) = v f(v) / E(T) for continuous laws; for
/// atomic laws the biased pmf value v P(T=v) / E(T). Throws UnsupportedPoint
/// when v is neither in the continuous support nor an atom.
double length_biased_pdf(const DistributionSpec& spec, double v);

/// CDF of the length-biased law for continuous variants (quadrature).
double length_biased_cdf(const DistributionSpec& spec, double v);

// Incremental CDF evaluator for KS runs: queries must be nondecreasing, so
// each call only integrates the new segment.
class IntegratedCdf {
public:
    enum class Kind { Residual, LengthBiased };
    IntegratedCdf(const DistributionSpec& spec, Kind kind)
        : spec_(&spec), kind_(kind) {}
    double operator()(double x);

private:
    const DistributionSpec* spec_;
    Kind kind_;
    double last_x_ = 0.0;
    double acc_ = 0.0;
};

struct ResidualSampleSet {
    std::vector<double> residuals;
    std::vector<double> ages;
    std::vector<double> containing_intervals;
};

/// Per trial: place the window start, walk the process to the first event
/// beyond it, record (age, residual, containing interval) at the start.
ResidualSampleSet sample_residuals(const DistributionSpec& spec, const WindowStrategy& strat,
                                   std::uint64_t n_trials, std::uint64_t seed,
                                   const EstimateOptions& opts = {});

struct UniformityBucket {
    double lower = 0.0;
    double upper = 0.0;
    std::uint64_t count = 0;
    bool tested = false;  // false = skipped (below the per-bucket minimum)
    KsReport ks;
};

/// Groups samples by containing interval and KS-tests residual/containing
/// against U(0,1) inside each bucket with at least min_bucket samples.
/// bucket_width == 0 groups by exact value (atomic laws); otherwise buckets
/// are [k*w, (k+1)*w).
std::vector<UniformityBucket> conditional_uniformity_check(const ResidualSampleSet& samples,
                                                           double bucket_width,
                                                           std::uint64_t min_bucket = 500);

}  // namespace renewal
