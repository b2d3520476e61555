#include "renewal/estimator.hpp"

#include <stdexcept>

#include "renewal/parallel.hpp"

namespace renewal {

CountEstimate make_count_estimate(const SampleSummary& s, double target) {
    CountEstimate e;
    e.mean = s.mean;
    e.stderr_mean = s.stderr_mean;
    e.n_trials = s.n;
    e.ci95_lo = s.mean - 1.96 * s.stderr_mean;
    e.ci95_hi = s.mean + 1.96 * s.stderr_mean;
    e.target = target;
    return e;
}

CountEstimate estimate_interval_count(const DistributionSpec& spec, const WindowStrategy& strat,
                                      double u, std::uint64_t n_trials, std::uint64_t seed,
                                      const EstimateOptions& opts) {
    if (n_trials < 2) throw std::invalid_argument("estimate_interval_count: need n_trials >= 2");
    if (!(u > 0.0)) throw std::invalid_argument("estimate_interval_count: u must be positive");

    std::vector<double> counts(n_trials);
    // One sampler-loop instantiation per variant; the per-trial draw order is
    // window start first, then the inter-arrival walk.
    std::visit(
        [&](const auto& params) {
            parallel_for_chunks(n_trials, opts.threads, [&](std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t i = b; i < e; ++i) {
                    RandomStream rs(seed, opts.stream_base + i);
                    const double u1 = place_start(strat, rs);
                    auto draw = make_sampler(params, rs);
                    counts[i] = static_cast<double>(
                        detail::window_count_walk(draw, u1, u1 + u, opts.event_cap));
                }
            });
        },
        spec.variant());

    return make_count_estimate(summarize(counts), u / spec.mean());
}

CountEstimate estimate_mu(const DistributionSpec& spec, double s, std::uint64_t n_trials,
                          std::uint64_t seed, const EstimateOptions& opts) {
    if (n_trials < 2) throw std::invalid_argument("estimate_mu: need n_trials >= 2");
    if (!(s > 0.0)) throw std::invalid_argument("estimate_mu: s must be positive");

    std::vector<double> counts(n_trials);
    std::visit(
        [&](const auto& params) {
            parallel_for_chunks(n_trials, opts.threads, [&](std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t i = b; i < e; ++i) {
                    RandomStream rs(seed, opts.stream_base + i);
                    auto draw = make_sampler(params, rs);
                    counts[i] = static_cast<double>(
                        detail::window_count_walk(draw, 0.0, s, opts.event_cap));
                }
            });
        },
        spec.variant());

    return make_count_estimate(summarize(counts), s / spec.mean());
}

std::vector<CountEstimate> sweep(const DistributionSpec& spec, const WindowStrategy& strat,
                                 const std::vector<double>& u_list, std::uint64_t n_trials,
                                 std::uint64_t seed, const EstimateOptions& opts) {
    if (u_list.empty()) throw std::invalid_argument("sweep: u_list must be nonempty");
    std::vector<CountEstimate> out;
    out.reserve(u_list.size());
    for (std::size_t cell = 0; cell < u_list.size(); ++cell) {
        EstimateOptions cell_opts = opts;
        cell_opts.stream_base = opts.stream_base + (static_cast<std::uint64_t>(cell) << 40);
        out.push_back(estimate_interval_count(spec, strat, u_list[cell], n_trials, seed, cell_opts));
    }
    return out;
}

}  // namespace renewal
