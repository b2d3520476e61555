#pragma once

#include <cstdint>
#include <vector>

#include "renewal/distributions.hpp"
#include "renewal/errors.hpp"
#include "renewal/process.hpp"
#include "renewal/stats.hpp"
#include "renewal/window.hpp"

namespace renewal {

struct CountEstimate {
    double mean = 0.0;
    double stderr_mean = 0.0;
    std::uint64_t n_trials = 0;
    double ci95_lo = 0.0;
    double ci95_hi = 0.0;
    double target = 0.0;  // u / E(T) reference value
};

struct EstimateOptions {
    unsigned threads = 0;  // 0 = auto (env var, then hardware)
    std::uint64_t event_cap = kDefaultEventCap;
    // Base offset for per-trial substream indices; sweeps give each grid
    // cell a disjoint block so cells are independent.
    std::uint64_t stream_base = 0;
};

CountEstimate make_count_estimate(const SampleSummary& s, double target);

/// Mean count of events in a freshly placed window over i.i.d. trials.
/// Trial i draws its window start and its trajectory from
/// substream(seed, stream_base + i); results are bit-identical for any
/// thread count.
CountEstimate estimate_interval_count(const DistributionSpec& spec, const WindowStrategy& strat,
                                      double u, std::uint64_t n_trials, std::uint64_t seed,
                                      const EstimateOptions& opts = {});

/// Monte Carlo estimate of E[N(s)], counting events in (0, s].
CountEstimate estimate_mu(const DistributionSpec& spec, double s, std::uint64_t n_trials,
                          std::uint64_t seed, const EstimateOptions& opts = {});

/// One estimate per u, each grid cell on its own substream block.
std::vector<CountEstimate> sweep(const DistributionSpec& spec, const WindowStrategy& strat,
                                 const std::vector<double>& u_list, std::uint64_t n_trials,
                                 std::uint64_t seed, const EstimateOptions& opts = {});

namespace detail {

// Walks the renewal partial sums and counts events in (u1, u2], stopping at
// the first event beyond u2. Equivalent to count_in(generate(...), w) with
// the same stream, just without materializing the trajectory.
template <class Sampler>
std::uint64_t window_count_walk(Sampler& draw, double u1, double u2, std::uint64_t event_cap) {
    double pos = 0.0;
    std::uint64_t count = 0;
    std::uint64_t steps = 0;
    for (;;) {
        pos += draw();
        if (pos > u2) break;
        if (pos > u1) ++count;
        if (++steps >= event_cap) {
            throw HorizonOverflow("window count: event cap reached before window end");
        }
    }
    return count;
}

}  // namespace detail

}  // namespace renewal
