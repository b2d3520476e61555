#include "renewal/process.hpp"

#include <algorithm>
#include <stdexcept>

#include "renewal/errors.hpp"

namespace renewal {

Realization generate(const DistributionSpec& spec, double horizon, RandomStream& rs,
                     std::uint64_t event_cap) {
    if (!(horizon > 0.0)) throw std::invalid_argument("generate: horizon must be positive");

    Realization r;
    r.horizon = horizon;
    // mean is positive, so the expected count is finite; reserve a bit of slack
    const double guess = horizon / spec.mean() * 1.25 + 16.0;
    if (guess < 1e7) {
        r.inter_arrivals.reserve(static_cast<std::size_t>(guess));
        r.event_times.reserve(static_cast<std::size_t>(guess));
    }

    with_sampler(spec, rs, [&](auto& draw) {
        double pos = 0.0;
        for (;;) {
            if (r.event_times.size() >= event_cap) {
                throw HorizonOverflow("generate: event cap reached before the horizon");
            }
            const double t = draw();
            pos += t;
            r.inter_arrivals.push_back(t);
            r.event_times.push_back(pos);
            if (pos > horizon) break;
        }
    });
    return r;
}

std::uint64_t count_in(const Realization& r, const ObservationWindow& w) {
    if (w.u2 < w.u1) throw std::invalid_argument("count_in: u2 < u1");
    if (r.event_times.empty() || (w.u2 > r.event_times.back() && w.u2 > r.horizon)) {
        throw WindowBeyondHorizon("count_in: window end exceeds the generated range");
    }
    const auto lo = std::upper_bound(r.event_times.begin(), r.event_times.end(), w.u1);
    const auto hi = std::upper_bound(r.event_times.begin(), r.event_times.end(), w.u2);
    return static_cast<std::uint64_t>(hi - lo);
}

AgeResidual age_and_residual(const Realization& r, double s) {
    if (s < 0.0) throw std::invalid_argument("age_and_residual: s must be nonnegative");
    if (r.event_times.empty() || s >= r.event_times.back()) {
        throw BeyondLastEvent("age_and_residual: no event after the query point");
    }
    const auto next = std::upper_bound(r.event_times.begin(), r.event_times.end(), s);
    const std::uint64_t m = static_cast<std::uint64_t>(next - r.event_times.begin());
    const double s_m = m == 0 ? 0.0 : r.event_times[m - 1];
    AgeResidual out;
    out.age = s - s_m;
    out.residual = *next - s;
    out.containing_interval = r.inter_arrivals[m];
    out.index_m = m;
    return out;
}

}  // namespace renewal
