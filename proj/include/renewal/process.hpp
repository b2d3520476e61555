#pragma once

#include <cstdint>
#include <vector>

#include "renewal/distributions.hpp"
#include "renewal/random.hpp"

namespace renewal {

inline constexpr std::uint64_t kDefaultEventCap = 1'000'000'000;

/// Half-open observation interval (u1, u2]: an event exactly at u1 is
/// excluded, one exactly at u2 is included.
struct ObservationWindow {
    double u1 = 0.0;
    double u2 = 0.0;
    double length() const { return u2 - u1; }
};

/// One sampled trajectory. event_times[i] is the running sum of
/// inter_arrivals[0..i], accumulated in order; the last event strictly
/// exceeds the horizon so residual queries at s <= horizon always succeed.
struct Realization {
    std::vector<double> inter_arrivals;
    std::vector<double> event_times;
    double horizon = 0.0;
};

Realization generate(const DistributionSpec& spec, double horizon, RandomStream& rs,
                     std::uint64_t event_cap = kDefaultEventCap);

/// Number of events in (w.u1, w.u2], counted with multiplicity.
std::uint64_t count_in(const Realization& r, const ObservationWindow& w);

struct AgeResidual {
    double age = 0.0;                  // s - S_M, zero when s sits exactly on an event
    double residual = 0.0;             // S_{M+1} - s
    double containing_interval = 0.0;  // T_{M+1}
    std::uint64_t index_m = 0;         // M = N(s)
};

/// Age and residual life at s. An event exactly at s belongs to the past.
AgeResidual age_and_residual(const Realization& r, double s);

}  // namespace renewal
