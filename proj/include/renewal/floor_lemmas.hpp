#pragma once

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "renewal/random.hpp"

namespace renewal {

struct FloorExact {
    double value = 0.0;
    // c landed on an integer: the identity still holds (U never hits 0),
    // but the usual n < c < n+1 derivation does not apply
    bool integer_boundary = false;
};

/// E(floor(c - U)) = c - 1 for U uniform on (0,1).
FloorExact floor_expectation_exact(double c);

struct FloorExpectationResult {
    double c = 0.0;
    double estimate = 0.0;
    double exact = 0.0;
    std::uint64_t n = 0;
    double stderr_mean = 0.0;
};

/// Monte Carlo mean of floor(c - U). True mathematical floor, which differs
/// from truncation toward zero whenever c - U is negative.
FloorExpectationResult floor_expectation_mc(double c, std::uint64_t n, std::uint64_t seed);

struct GaussianNoise {
    double sigma;
};

struct SignedAtom {
    double value;
    double prob;
};

struct AtomNoise {
    std::vector<SignedAtom> atoms;
};

/// Zero-mean noise law for the perturbed floor lemma. The analytic mean must
/// vanish (within 1e-9); otherwise construction throws NonZeroMeanNoise.
class NoiseSpec {
public:
    using Variant = std::variant<GaussianNoise, AtomNoise>;

    static NoiseSpec gaussian(double sigma);
    static NoiseSpec atoms(std::vector<SignedAtom> atoms);
    static NoiseSpec two_point(double magnitude);  // +/- magnitude, equiprobable

    const Variant& variant() const { return v_; }
    double sample(RandomStream& rs) const;

private:
    explicit NoiseSpec(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// Monte Carlo mean of floor(c + eta - U); the exact value stays c - 1 for
/// any zero-mean eta.
FloorExpectationResult floor_expectation_noisy(double c, const NoiseSpec& noise, std::uint64_t n,
                                               std::uint64_t seed);

struct ConverseProbePoint {
    double c = 0.0;
    double lhs = 0.0;  // analytic E(floor(c - U')) = -(1 - F(c)) for c in (0,1)
    double rhs = 0.0;  // c - 1
};

/// Probes the uniqueness converse: a law on (0,1) satisfying lhs == rhs on a
/// dense grid of c must be uniform, so any genuinely non-uniform CDF shows a
/// violation somewhere.
std::vector<ConverseProbePoint> converse_probe(const std::function<double(double)>& cdf,
                                               const std::vector<double>& c_grid);

}  // namespace renewal
