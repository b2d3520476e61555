#pragma once

#include <string>
#include <variant>

#include "renewal/process.hpp"
#include "renewal/random.hpp"

namespace renewal {

struct FixedStart {
    double m;
};

// Start at theta * U with U uniform on (0, 1]; the finite-scale surrogate
// for observing the process far into its lifetime.
struct LargeUniform {
    double theta;
};

struct DeferredUniform {
    double theta;
    double c;
};

class WindowStrategy {
public:
    using Variant = std::variant<FixedStart, LargeUniform, DeferredUniform>;

    static WindowStrategy fixed_start(double m);
    static WindowStrategy large_uniform(double theta);
    static WindowStrategy deferred_uniform(double theta, double c);

    const Variant& variant() const { return v_; }
    std::string kind() const;
    std::string describe() const;

private:
    explicit WindowStrategy(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// Draws the window start (consumes one uniform for the random strategies,
/// nothing for FixedStart).
double place_start(const WindowStrategy& strat, RandomStream& rs);

inline ObservationWindow place_window(const WindowStrategy& strat, double u, RandomStream& rs) {
    if (!(u > 0.0)) throw std::invalid_argument("place_window: u must be positive");
    const double start = place_start(strat, rs);
    return ObservationWindow{start, start + u};
}

/// Latest possible window start for the strategy (theta, m, or theta + c).
double max_start(const WindowStrategy& strat);

/// Horizon that covers every possible window plus a safety margin of
/// max(100, 10 * dist_mean) so residual queries beyond the window end stay
/// valid.
double required_horizon(const WindowStrategy& strat, double u, double dist_mean);

}  // namespace renewal
