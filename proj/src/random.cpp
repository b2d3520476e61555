#include "renewal/random.hpp"

#include <cassert>
#include <numbers>

namespace renewal::detail {

namespace {

// Builds the layer table for a decreasing density f on [0, inf) with
// f(0) = 1. Layer j >= 1 is the strip [0, x[j]] x [f(x[j]), f(x[j+1])];
// layer 0 is the base rectangle [0, r] x [0, f(r)] plus the tail, folded
// into a pseudo-width x[0] = v / f(r). Every layer has area v, and the
// base boundary r is the root of the closure condition that the top strip
// ends exactly at height 1.
struct ZigguratSpec {
    double (*density)(double);    // f, decreasing, f(0) = 1
    double (*inverse)(double);    // f^{-1} on (0, 1]
    double (*tail_area)(double);  // integral of f over (x, inf)
};

// Runs the recursion for a trial r. Returns the closure error (positive
// when the strip stack reaches height 1 too early) and fills the table.
double build_for(const ZigguratSpec& spec, double r, ZigguratTable& t) {
    const double fr = spec.density(r);
    const double v = r * fr + spec.tail_area(r);
    t.r = r;
    t.x[0] = v / fr;
    t.x[1] = r;
    t.f[0] = fr;
    t.f[1] = fr;
    for (int j = 1; j < kZigLayers - 1; ++j) {
        const double target = t.f[j] + v / t.x[j];
        if (target >= 1.0) return 1.0 + static_cast<double>(kZigLayers - 1 - j);
        t.x[j + 1] = spec.inverse(target);
        t.f[j + 1] = target;
    }
    t.x[kZigLayers] = 0.0;
    t.f[kZigLayers] = 1.0;
    return t.f[kZigLayers - 1] + v / t.x[kZigLayers - 1] - 1.0;
}

ZigguratTable build(const ZigguratSpec& spec, double r_lo, double r_hi) {
    ZigguratTable t;
    for (int it = 0; it < 200; ++it) {
        const double r = 0.5 * (r_lo + r_hi);
        const double err = build_for(spec, r, t);
        if (err > 0.0) {
            r_lo = r;  // layers too thick, push the base boundary out
        } else {
            r_hi = r;
        }
    }
    build_for(spec, r_hi, t);
    for (int j = 1; j < kZigLayers; ++j) assert(t.x[j] > t.x[j + 1]);
    return t;
}

double exp_density(double x) {
    return std::exp(-x);
}
double exp_inverse(double y) {
    return -std::log(y);
}
double exp_tail(double x) {
    return std::exp(-x);
}

double normal_density(double x) {
    return std::exp(-0.5 * x * x);
}
double normal_inverse(double y) {
    return std::sqrt(-2.0 * std::log(y));
}
double normal_tail(double x) {
    return std::sqrt(std::numbers::pi / 2.0) * std::erfc(x / std::numbers::sqrt2);
}

}  // namespace

const ZigguratTable kZigExponential = build({exp_density, exp_inverse, exp_tail}, 4.0, 12.0);
const ZigguratTable kZigNormal = build({normal_density, normal_inverse, normal_tail}, 2.0, 6.0);

}  // namespace renewal::detail
