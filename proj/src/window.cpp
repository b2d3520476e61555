#include "renewal/window.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace renewal {

namespace {
void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}
}  // namespace

WindowStrategy WindowStrategy::fixed_start(double m) {
    require(std::isfinite(m) && m >= 0.0, "fixed_start: m must be nonnegative");
    return WindowStrategy(FixedStart{m});
}

WindowStrategy WindowStrategy::large_uniform(double theta) {
    require(std::isfinite(theta) && theta > 0.0, "large_uniform: theta must be positive");
    return WindowStrategy(LargeUniform{theta});
}

WindowStrategy WindowStrategy::deferred_uniform(double theta, double c) {
    require(std::isfinite(theta) && theta > 0.0, "deferred_uniform: theta must be positive");
    require(std::isfinite(c) && c >= 0.0, "deferred_uniform: c must be nonnegative");
    return WindowStrategy(DeferredUniform{theta, c});
}

std::string WindowStrategy::kind() const {
    return std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, FixedStart>) return "fixed_start";
            else if constexpr (std::is_same_v<T, LargeUniform>) return "large_uniform";
            else return "deferred_uniform";
        },
        v_);
}

std::string WindowStrategy::describe() const {
    std::ostringstream os;
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, FixedStart>) os << "fixed_start(" << p.m << ")";
            else if constexpr (std::is_same_v<T, LargeUniform>) os << "large_uniform(" << p.theta << ")";
            else os << "deferred_uniform(" << p.theta << "," << p.c << ")";
        },
        v_);
    return os.str();
}

double place_start(const WindowStrategy& strat, RandomStream& rs) {
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, FixedStart>) {
                return p.m;
            } else if constexpr (std::is_same_v<T, LargeUniform>) {
                return p.theta * rs.next_open_closed();
            } else {
                return p.theta * rs.next_open_closed() + p.c;
            }
        },
        strat.variant());
}

double max_start(const WindowStrategy& strat) {
    return std::visit(
        [](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, FixedStart>) return p.m;
            else if constexpr (std::is_same_v<T, LargeUniform>) return p.theta;
            else return p.theta + p.c;
        },
        strat.variant());
}

double required_horizon(const WindowStrategy& strat, double u, double dist_mean) {
    const double margin = std::max(100.0, 10.0 * dist_mean);
    return max_start(strat) + u + margin;
}

}  // namespace renewal
