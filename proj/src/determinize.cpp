#include "renewal/determinize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "renewal/errors.hpp"
#include "renewal/parallel.hpp"

namespace renewal {

namespace {

TransformOutcome assemble(double t, double u1, double u2, std::uint64_t m, std::uint64_t n,
                          double s_m, double s_mn) {
    TransformOutcome out;
    out.t = t;
    out.m_index = m;
    out.n_in_window = n;
    out.original_count = n;
    out.age_start = u1 - s_m;
    out.age_end = u2 - s_mn;
    out.u1_mod = static_cast<double>(m) * t + out.age_start;
    out.u2_mod = static_cast<double>(m + n) * t + out.age_end;
    // signed count of grid points k*t in (u1_mod, u2_mod]
    const auto lo = static_cast<std::int64_t>(std::floor(out.u1_mod / t));
    const auto hi = static_cast<std::int64_t>(std::floor(out.u2_mod / t));
    out.modified_count = hi - lo;
    out.delta = out.modified_count - static_cast<std::int64_t>(out.original_count);
    return out;
}

}  // namespace

TransformOutcome determinize(const Realization& r, const ObservationWindow& w, double t) {
    if (!(t > 0.0)) throw InvalidMean("determinize: t must be positive");
    if (w.u2 < w.u1 || w.u1 < 0.0) throw std::invalid_argument("determinize: bad window");
    if (r.event_times.empty() || w.u2 > r.event_times.back()) {
        throw WindowBeyondHorizon("determinize: window end exceeds the generated range");
    }
    const auto lo = std::upper_bound(r.event_times.begin(), r.event_times.end(), w.u1);
    const auto hi = std::upper_bound(r.event_times.begin(), r.event_times.end(), w.u2);
    const std::uint64_t m = static_cast<std::uint64_t>(lo - r.event_times.begin());
    const std::uint64_t n = static_cast<std::uint64_t>(hi - lo);
    const double s_m = m == 0 ? 0.0 : r.event_times[m - 1];
    const double s_mn = m + n == 0 ? 0.0 : r.event_times[m + n - 1];
    return assemble(t, w.u1, w.u2, m, n, s_m, s_mn);
}

TransformCheck transform_expectation_check(const DistributionSpec& spec,
                                           const WindowStrategy& strat, double u,
                                           std::uint64_t n_trials, std::uint64_t seed,
                                           const EstimateOptions& opts,
                                           std::vector<TransformOutcome>* per_trial) {
    if (n_trials < 2) throw std::invalid_argument("transform_expectation_check: need n_trials >= 2");
    if (!(u > 0.0)) throw std::invalid_argument("transform_expectation_check: u must be positive");

    const double t = spec.mean();
    std::vector<TransformOutcome> outcomes(n_trials);

    // Same draw order as estimate_interval_count: window start, then the
    // walk. The walk tracks the last event at or before each endpoint, so no
    // trajectory is materialized.
    std::visit(
        [&](const auto& params) {
            parallel_for_chunks(n_trials, opts.threads, [&](std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t i = b; i < e; ++i) {
                    RandomStream rs(seed, opts.stream_base + i);
                    const double u1 = place_start(strat, rs);
                    const double u2 = u1 + u;
                    auto draw = make_sampler(params, rs);
                    double pos = 0.0;
                    double s_m = 0.0;
                    double s_last = 0.0;
                    std::uint64_t m = 0;
                    std::uint64_t count = 0;
                    std::uint64_t steps = 0;
                    for (;;) {
                        pos += draw();
                        if (pos > u2) break;
                        if (pos <= u1) {
                            s_m = pos;
                            ++m;
                        } else {
                            ++count;
                        }
                        s_last = pos;
                        if (++steps >= opts.event_cap) {
                            throw HorizonOverflow("transform_expectation_check: event cap reached");
                        }
                    }
                    const double s_mn = count == 0 ? s_m : s_last;
                    outcomes[i] = assemble(t, u1, u2, m, count, s_m, s_mn);
                }
            });
        },
        spec.variant());

    TransformCheck check;
    std::vector<double> orig(n_trials);
    std::vector<double> mod(n_trials);
    std::vector<double> delta(n_trials);
    std::uint64_t exits = 0;
    std::uint64_t enters = 0;
    std::uint64_t beyond_unit = 0;
    for (std::uint64_t i = 0; i < n_trials; ++i) {
        const auto& o = outcomes[i];
        orig[i] = static_cast<double>(o.original_count);
        mod[i] = static_cast<double>(o.modified_count);
        delta[i] = static_cast<double>(o.delta);
        if (o.age_start > t) ++exits;
        if (o.age_end > t) ++enters;
        if (o.delta > 1 || o.delta < -1) ++beyond_unit;
        const std::int64_t floor_delta =
            static_cast<std::int64_t>(std::floor(o.age_end / t)) -
            static_cast<std::int64_t>(std::floor(o.age_start / t));
        if (o.delta != floor_delta) ++check.identity_violations;
    }
    const double target = u / t;
    check.original = make_count_estimate(summarize(orig), target);
    check.modified = make_count_estimate(summarize(mod), target);
    const auto ds = summarize(delta);
    check.mean_delta = ds.mean;
    check.stderr_delta = ds.stderr_mean;
    check.p_exit = static_cast<double>(exits) / static_cast<double>(n_trials);
    check.p_enter = static_cast<double>(enters) / static_cast<double>(n_trials);
    check.frac_delta_beyond_unit = static_cast<double>(beyond_unit) / static_cast<double>(n_trials);

    if (per_trial) *per_trial = std::move(outcomes);
    return check;
}

}  // namespace renewal
