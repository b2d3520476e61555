#include "renewal/floor_lemmas.hpp"

#include <cmath>
#include <stdexcept>

#include "renewal/errors.hpp"
#include "renewal/stats.hpp"

namespace renewal {

FloorExact floor_expectation_exact(double c) {
    if (!std::isfinite(c)) throw std::invalid_argument("floor_expectation_exact: c must be finite");
    FloorExact r;
    r.value = c - 1.0;
    r.integer_boundary = c == std::floor(c);
    return r;
}

FloorExpectationResult floor_expectation_mc(double c, std::uint64_t n, std::uint64_t seed) {
    if (n < 100) throw std::invalid_argument("floor_expectation_mc: need n >= 100");
    RandomStream rs(seed, 0);
    std::vector<double> draws(n);
    for (auto& d : draws) d = std::floor(c - rs.next_open_closed());
    const auto s = summarize(draws);
    return FloorExpectationResult{c, s.mean, c - 1.0, n, s.stderr_mean};
}

NoiseSpec NoiseSpec::gaussian(double sigma) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("noise: sigma must be nonnegative");
    }
    return NoiseSpec(GaussianNoise{sigma});
}

NoiseSpec NoiseSpec::atoms(std::vector<SignedAtom> atoms) {
    if (atoms.empty()) throw std::invalid_argument("noise: need at least one atom");
    double psum = 0.0;
    double mean = 0.0;
    for (const auto& a : atoms) {
        if (!(a.prob > 0.0 && a.prob <= 1.0) || !std::isfinite(a.value)) {
            throw std::invalid_argument("noise: bad atom");
        }
        psum += a.prob;
        mean += a.prob * a.value;
    }
    if (std::abs(psum - 1.0) > 1e-12) {
        throw std::invalid_argument("noise: probabilities must sum to 1");
    }
    if (std::abs(mean) > 1e-9) {
        throw NonZeroMeanNoise("noise: analytic mean must be zero");
    }
    return NoiseSpec(AtomNoise{std::move(atoms)});
}

NoiseSpec NoiseSpec::two_point(double magnitude) {
    return atoms({SignedAtom{-magnitude, 0.5}, SignedAtom{magnitude, 0.5}});
}

double NoiseSpec::sample(RandomStream& rs) const {
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, GaussianNoise>) {
                return p.sigma * rs.next_gaussian();
            } else {
                const double u = rs.next_double();
                double c = 0.0;
                for (const auto& a : p.atoms) {
                    c += a.prob;
                    if (u < c) return a.value;
                }
                return p.atoms.back().value;
            }
        },
        v_);
}

FloorExpectationResult floor_expectation_noisy(double c, const NoiseSpec& noise, std::uint64_t n,
                                               std::uint64_t seed) {
    if (n < 100) throw std::invalid_argument("floor_expectation_noisy: need n >= 100");
    RandomStream rs(seed, 0);
    std::vector<double> draws(n);
    for (auto& d : draws) {
        const double eta = noise.sample(rs);
        d = std::floor(c + eta - rs.next_open_closed());
    }
    const auto s = summarize(draws);
    return FloorExpectationResult{c, s.mean, c - 1.0, n, s.stderr_mean};
}

std::vector<ConverseProbePoint> converse_probe(const std::function<double(double)>& cdf,
                                               const std::vector<double>& c_grid) {
    std::vector<ConverseProbePoint> out;
    out.reserve(c_grid.size());
    for (const double c : c_grid) {
        if (!(c > 0.0 && c < 1.0)) {
            throw std::invalid_argument("converse_probe: grid points must lie in (0,1)");
        }
        // for 0 < c < 1: E(floor(c - U')) = -P(U' > c)
        out.push_back(ConverseProbePoint{c, -(1.0 - cdf(c)), c - 1.0});
    }
    return out;
}

}  // namespace renewal
