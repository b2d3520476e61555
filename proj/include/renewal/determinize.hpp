#pragma once

#include <cstdint>
#include <vector>

#include "renewal/distributions.hpp"
#include "renewal/estimator.hpp"
#include "renewal/process.hpp"
#include "renewal/window.hpp"

namespace renewal {

/// Result of mapping one (realization, window) pair onto the deterministic
/// process with events at k*t. The noise partial sums shift both window
/// endpoints: u1 follows the first M moves only, u2 follows all M+N, which
/// reduces in closed form to
///
///     u1_mod = M*t + X        X = u1 - S_M      (age at the window start)
///     u2_mod = (M+N)*t + Y    Y = u2 - S_{M+N}  (age at the window end)
///
/// and the count change obeys delta = floor(Y/t) - floor(X/t) per trial.
///
/// modified_count is the signed lattice-point difference
/// floor(u2_mod/t) - floor(u1_mod/t). When a single inter-arrival exceeds
/// the window span the modified window can invert (u2_mod < u1_mod); the
/// signed convention keeps the per-trial identity exact and the mean
/// unbiased on those trials.
struct TransformOutcome {
    std::uint64_t original_count = 0;
    std::int64_t modified_count = 0;
    std::int64_t delta = 0;
    double u1_mod = 0.0;
    double u2_mod = 0.0;
    double age_start = 0.0;  // X
    double age_end = 0.0;    // Y
    double t = 0.0;
    std::uint64_t m_index = 0;      // M, events at or before u1
    std::uint64_t n_in_window = 0;  // N, events in (u1, u2]
};

/// Applies the transform to a materialized realization. The window must lie
/// within the generated range; t is the inter-arrival mean of the
/// generating law.
TransformOutcome determinize(const Realization& r, const ObservationWindow& w, double t);

struct TransformCheck {
    CountEstimate original;
    CountEstimate modified;
    double mean_delta = 0.0;
    double stderr_delta = 0.0;
    double p_exit = 0.0;   // empirical P(X > t)
    double p_enter = 0.0;  // empirical P(Y > t)
    std::uint64_t identity_violations = 0;
    // fraction of trials with |delta| > 1; nonzero whenever single
    // inter-arrivals can exceed 2t
    double frac_delta_beyond_unit = 0.0;
};

/// Runs determinize on freshly sampled trials and reports both count
/// estimates, the mean count change, and the boundary-crossing
/// probabilities. per_trial, when given, receives every outcome in trial
/// order.
TransformCheck transform_expectation_check(const DistributionSpec& spec,
                                           const WindowStrategy& strat, double u,
                                           std::uint64_t n_trials, std::uint64_t seed,
                                           const EstimateOptions& opts = {},
                                           std::vector<TransformOutcome>* per_trial = nullptr);

}  // namespace renewal
