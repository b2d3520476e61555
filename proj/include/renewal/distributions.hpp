#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "renewal/random.hpp"

namespace renewal {

struct Deterministic {
    double t;
};

struct Exponential {
    double rate;
};

struct UniformInterval {
    double a;
    double b;
};

struct LogNormal {
    double mu;
    double sigma;
};

struct GammaLaw {
    double shape;
    double scale;
};

struct Atom {
    double value;
    double prob;
};

struct DiscreteAtoms {
    std::vector<Atom> atoms;
    // cumulative[i] = sum of probs up to atom i; last entry forced to 1
    std::vector<double> cumulative;
};

/// Parametric inter-arrival law. Validated at construction; immutable and
/// freely shareable afterwards. Operations assume a valid spec.
class DistributionSpec {
public:
    using Variant =
        std::variant<Deterministic, Exponential, UniformInterval, LogNormal, GammaLaw, DiscreteAtoms>;

    static DistributionSpec deterministic(double t);
    static DistributionSpec exponential(double rate);
    static DistributionSpec uniform_interval(double a, double b);
    static DistributionSpec log_normal(double mu, double sigma);
    static DistributionSpec gamma(double shape, double scale);
    static DistributionSpec discrete_atoms(std::vector<Atom> atoms);

    const Variant& variant() const { return v_; }
    double mean() const { return mean_; }
    bool is_discrete() const;
    bool has_density() const { return !is_discrete(); }
    std::string kind() const;
    // one-line human-readable form used in CSV output
    std::string describe() const;

private:
    DistributionSpec(Variant v, double mean) : v_(std::move(v)), mean_(mean) {}
    Variant v_;
    double mean_;
};

double mean(const DistributionSpec& spec);

/// P(T > x); right-continuous, nonincreasing.
double survival(const DistributionSpec& spec, double x);

/// Density of a continuous variant; throws std::invalid_argument for
/// Deterministic / DiscreteAtoms.
double density(const DistributionSpec& spec, double x);

/// Smallest x with P(T <= x) >= p. Continuous variants analytic.
double quantile(const DistributionSpec& spec, double p);

struct CharCoefficient {
    int m = 0;
    std::complex<double> value;
    double modulus = 0.0;
};

/// gamma_m = E[exp(2*pi*i*m*T)]. Closed form for Deterministic, Exponential,
/// UniformInterval and DiscreteAtoms; adaptive Gauss-Kronrod on [0, q(1-1e-10)]
/// otherwise (absolute error <= 1e-8, else QuadratureFailure).
CharCoefficient char_coefficient(const DistributionSpec& spec, int m);

/// Monte Carlo estimate of gamma_m with standard error of the complex mean;
/// fallback path and test oracle for the quadrature route.
CharCoefficient char_coefficient_mc(const DistributionSpec& spec, int m, std::uint64_t n,
                                    std::uint64_t seed, double* stderr_out = nullptr);

// --- samplers ---------------------------------------------------------
//
// One small functor per variant so the Monte Carlo kernels can inline the
// draw into their walk loops. make_sampler binds the stream; a sampler is
// only valid while its stream and spec outlive it.

struct DeterministicSampler {
    double t;
    double operator()() noexcept { return t; }
};

struct ExponentialSampler {
    RandomStream* rs;
    double scale;
    double operator()() noexcept { return rs->next_exponential() * scale; }
};

struct UniformIntervalSampler {
    RandomStream* rs;
    double a;
    double width;
    double operator()() noexcept { return a + width * rs->next_double(); }
};

struct LogNormalSampler {
    RandomStream* rs;
    double mu;
    double sigma;
    double operator()() noexcept { return std::exp(mu + sigma * rs->next_gaussian()); }
};

// Marsaglia-Tsang squeeze; shapes below 1 use the boost draw from
// shape+1 times U^(1/shape).
struct GammaSampler {
    RandomStream* rs;
    double shape;
    double scale;
    double d;
    double c;

    double operator()() noexcept {
        double g = scale * draw_shape_ge1();
        if (shape < 1.0) g *= std::pow(rs->next_open_closed(), 1.0 / shape);
        return g;
    }

    double draw_shape_ge1() noexcept {
        for (;;) {
            double x, v;
            do {
                x = rs->next_gaussian();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = rs->next_double();
            const double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
            if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
        }
    }
};

struct DiscreteAtomsSampler {
    RandomStream* rs;
    const DiscreteAtoms* law;
    double operator()() noexcept {
        const double u = rs->next_double();
        const auto& cum = law->cumulative;
        std::size_t i = 0;
        while (i + 1 < cum.size() && u >= cum[i]) ++i;
        return law->atoms[i].value;
    }
};

inline DeterministicSampler make_sampler(const Deterministic& p, RandomStream&) {
    return {p.t};
}
inline ExponentialSampler make_sampler(const Exponential& p, RandomStream& rs) {
    return {&rs, 1.0 / p.rate};
}
inline UniformIntervalSampler make_sampler(const UniformInterval& p, RandomStream& rs) {
    return {&rs, p.a, p.b - p.a};
}
inline LogNormalSampler make_sampler(const LogNormal& p, RandomStream& rs) {
    return {&rs, p.mu, p.sigma};
}
inline GammaSampler make_sampler(const GammaLaw& p, RandomStream& rs) {
    const double s = p.shape >= 1.0 ? p.shape : p.shape + 1.0;
    const double d = s - 1.0 / 3.0;
    return {&rs, p.shape, p.scale, d, 1.0 / std::sqrt(9.0 * d)};
}
inline DiscreteAtomsSampler make_sampler(const DiscreteAtoms& p, RandomStream& rs) {
    return {&rs, &p};
}

/// Visits the spec with a concrete sampler bound to `rs`, so callers can
/// instantiate their inner loop once per variant instead of dispatching
/// per draw.
template <class Fn>
decltype(auto) with_sampler(const DistributionSpec& spec, RandomStream& rs, Fn&& fn) {
    return std::visit([&](const auto& params) -> decltype(auto) {
        auto sampler = make_sampler(params, rs);
        return fn(sampler);
    },
                      spec.variant());
}

/// One draw from the law. Deterministic given the stream state.
inline double sample(const DistributionSpec& spec, RandomStream& rs) {
    return with_sampler(spec, rs, [](auto& s) { return s(); });
}

}  // namespace renewal
