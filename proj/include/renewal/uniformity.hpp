#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "renewal/distributions.hpp"
#include "renewal/estimator.hpp"
#include "renewal/stats.hpp"

namespace renewal {

// Witness cut: |gamma_m| >= 1 - kArithmeticWitnessTol separates genuine
// modulus-1 coefficients from quadrature error.
inline constexpr double kArithmeticWitnessTol = 1e-6;

/// Samples of (T_1 + ... + T_n) mod 1, one per trial, independent substreams.
std::vector<double> mod1_samples(const DistributionSpec& spec, std::uint64_t n,
                                 std::uint64_t trials, std::uint64_t seed,
                                 const EstimateOptions& opts = {});

struct SpanReport {
    bool is_arithmetic = false;
    std::optional<double> span;         // largest lambda with support in lambda*Z
    std::optional<double> shift_theta;  // theta with m*support in Z+theta (lattice laws)
    std::vector<CharCoefficient> witnesses;  // coefficients with modulus >= 1 - witness tol
    double tol = 1e-9;
};

/// Lattice analysis of the law. Atomic variants are resolved exactly through
/// rational reconstruction of the atom values (continued fractions,
/// denominator cap 1e6, agreement tolerance `tol`); SpanUndetectable is
/// thrown when a value admits no such rational form. Continuous variants
/// scan |gamma_m| for m = 1..m_max (Monte Carlo fallback on
/// QuadratureFailure, fixed internal seed).
SpanReport detect_span(const DistributionSpec& spec, int m_max = 64, double tol = 1e-9);

/// KS of (N(mu, sigma^2) samples mod 1) against U[0,1).
KsReport gaussian_mod1_ks(double sigma, double mu, std::uint64_t n, std::uint64_t seed);

/// Exact CDF of Z_m = ceil(m U) - m U, U uniform on (0,1]. For integer m
/// (within 1e-12) the law is exactly uniform; integer_m reports that case.
struct ZmCdf {
    double m = 0.0;
    bool integer_m = false;
    double operator()(double x) const;
};

ZmCdf make_zm_cdf(double m);

inline double zm_exact_cdf(double m, double x) {
    return make_zm_cdf(m)(x);
}

/// Empirical Z_m vs U[0,1) for each m; statistics shrink as m grows.
std::vector<KsReport> zm_limit_check(const std::vector<double>& m_list, std::uint64_t n,
                                     std::uint64_t seed);

}  // namespace renewal
