#include "renewal/distributions.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "renewal/errors.hpp"

namespace renewal {

namespace {

constexpr double kProbSumTol = 1e-12;
constexpr double kCharQuadTol = 1e-8;      // absolute error target for gamma_m
constexpr double kCharTailMass = 1e-10;    // truncation quantile for the integral

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

DistributionSpec DistributionSpec::deterministic(double t) {
    require(std::isfinite(t) && t > 0.0, "deterministic: t must be positive");
    return DistributionSpec(Deterministic{t}, t);
}

DistributionSpec DistributionSpec::exponential(double rate) {
    require(std::isfinite(rate) && rate > 0.0, "exponential: rate must be positive");
    return DistributionSpec(Exponential{rate}, 1.0 / rate);
}

DistributionSpec DistributionSpec::uniform_interval(double a, double b) {
    require(std::isfinite(a) && std::isfinite(b) && a >= 0.0 && a < b,
            "uniform_interval: need 0 <= a < b");
    return DistributionSpec(UniformInterval{a, b}, 0.5 * (a + b));
}

DistributionSpec DistributionSpec::log_normal(double mu, double sigma) {
    require(std::isfinite(mu) && std::isfinite(sigma) && sigma > 0.0,
            "log_normal: sigma must be positive");
    return DistributionSpec(LogNormal{mu, sigma}, std::exp(mu + 0.5 * sigma * sigma));
}

DistributionSpec DistributionSpec::gamma(double shape, double scale) {
    require(std::isfinite(shape) && shape > 0.0 && std::isfinite(scale) && scale > 0.0,
            "gamma: shape and scale must be positive");
    return DistributionSpec(GammaLaw{shape, scale}, shape * scale);
}

DistributionSpec DistributionSpec::discrete_atoms(std::vector<Atom> atoms) {
    require(!atoms.empty(), "discrete_atoms: need at least one atom");
    double psum = 0.0;
    double m = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const auto& a = atoms[i];
        require(std::isfinite(a.value) && a.value >= 0.0, "discrete_atoms: values must be >= 0");
        require(std::isfinite(a.prob) && a.prob > 0.0 && a.prob <= 1.0,
                "discrete_atoms: probabilities must lie in (0,1]");
        if (i > 0) require(a.value > atoms[i - 1].value, "discrete_atoms: values must be strictly increasing");
        psum += a.prob;
        m += a.value * a.prob;
    }
    require(std::abs(psum - 1.0) <= kProbSumTol, "discrete_atoms: probabilities must sum to 1");
    require(m > 0.0, "discrete_atoms: mean must be positive");

    DiscreteAtoms law;
    law.atoms = std::move(atoms);
    law.cumulative.reserve(law.atoms.size());
    double c = 0.0;
    for (const auto& a : law.atoms) {
        c += a.prob;
        law.cumulative.push_back(c);
    }
    law.cumulative.back() = 1.0;
    return DistributionSpec(std::move(law), m);
}

bool DistributionSpec::is_discrete() const {
    return std::holds_alternative<Deterministic>(v_) || std::holds_alternative<DiscreteAtoms>(v_);
}

std::string DistributionSpec::kind() const {
    return std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Deterministic>) return "deterministic";
            else if constexpr (std::is_same_v<T, Exponential>) return "exponential";
            else if constexpr (std::is_same_v<T, UniformInterval>) return "uniform_interval";
            else if constexpr (std::is_same_v<T, LogNormal>) return "log_normal";
            else if constexpr (std::is_same_v<T, GammaLaw>) return "gamma";
            else return "discrete_atoms";
        },
        v_);
}

std::string DistributionSpec::describe() const {
    std::ostringstream os;
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Deterministic>) os << "deterministic(" << p.t << ")";
            else if constexpr (std::is_same_v<T, Exponential>) os << "exponential(" << p.rate << ")";
            else if constexpr (std::is_same_v<T, UniformInterval>) os << "uniform(" << p.a << "," << p.b << ")";
            else if constexpr (std::is_same_v<T, LogNormal>) os << "lognormal(" << p.mu << "," << p.sigma << ")";
            else if constexpr (std::is_same_v<T, GammaLaw>) os << "gamma(" << p.shape << "," << p.scale << ")";
            else {
                os << "atoms(";
                for (std::size_t i = 0; i < p.atoms.size(); ++i) {
                    if (i) os << ";";
                    os << p.atoms[i].value << ":" << p.atoms[i].prob;
                }
                os << ")";
            }
        },
        v_);
    return os.str();
}

double mean(const DistributionSpec& spec) {
    return spec.mean();
}

double survival(const DistributionSpec& spec, double x) {
    if (x < 0.0) return 1.0;
    return std::visit(
        [x](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Deterministic>) {
                return x < p.t ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<T, Exponential>) {
                return std::exp(-p.rate * x);
            } else if constexpr (std::is_same_v<T, UniformInterval>) {
                if (x < p.a) return 1.0;
                if (x >= p.b) return 0.0;
                return (p.b - x) / (p.b - p.a);
            } else if constexpr (std::is_same_v<T, LogNormal>) {
                if (x <= 0.0) return 1.0;
                return 0.5 * std::erfc((std::log(x) - p.mu) / (p.sigma * std::numbers::sqrt2));
            } else if constexpr (std::is_same_v<T, GammaLaw>) {
                if (x <= 0.0) return 1.0;
                return boost::math::gamma_q(p.shape, x / p.scale);
            } else {
                double s = 0.0;
                for (const auto& a : p.atoms)
                    if (a.value > x) s += a.prob;
                return s;
            }
        },
        spec.variant());
}

double density(const DistributionSpec& spec, double x) {
    return std::visit(
        [x](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Exponential>) {
                return x < 0.0 ? 0.0 : p.rate * std::exp(-p.rate * x);
            } else if constexpr (std::is_same_v<T, UniformInterval>) {
                return (x >= p.a && x <= p.b) ? 1.0 / (p.b - p.a) : 0.0;
            } else if constexpr (std::is_same_v<T, LogNormal>) {
                if (x <= 0.0) return 0.0;
                const double z = (std::log(x) - p.mu) / p.sigma;
                return std::exp(-0.5 * z * z) / (x * p.sigma * std::sqrt(2.0 * std::numbers::pi));
            } else if constexpr (std::is_same_v<T, GammaLaw>) {
                if (x < 0.0) return 0.0;
                if (x == 0.0) return p.shape == 1.0 ? 1.0 / p.scale : (p.shape < 1.0 ? HUGE_VAL : 0.0);
                return std::exp((p.shape - 1.0) * std::log(x) - x / p.scale -
                                std::lgamma(p.shape) - p.shape * std::log(p.scale));
            } else {
                throw std::invalid_argument("density: law has no density (atomic variant)");
            }
        },
        spec.variant());
}

double quantile(const DistributionSpec& spec, double p) {
    if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("quantile: p must lie in [0,1)");
    return std::visit(
        [p](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Deterministic>) {
                return d.t;
            } else if constexpr (std::is_same_v<T, Exponential>) {
                return -std::log1p(-p) / d.rate;
            } else if constexpr (std::is_same_v<T, UniformInterval>) {
                return d.a + (d.b - d.a) * p;
            } else if constexpr (std::is_same_v<T, LogNormal>) {
                if (p == 0.0) return 0.0;
                return std::exp(d.mu + d.sigma * std::numbers::sqrt2 * boost::math::erf_inv(2.0 * p - 1.0));
            } else if constexpr (std::is_same_v<T, GammaLaw>) {
                if (p == 0.0) return 0.0;
                return d.scale * boost::math::gamma_p_inv(d.shape, p);
            } else {
                double c = 0.0;
                for (const auto& a : d.atoms) {
                    c += a.prob;
                    if (p < c + kProbSumTol) return a.value;
                }
                return d.atoms.back().value;
            }
        },
        spec.variant());
}

namespace {

CharCoefficient make_coefficient(int m, std::complex<double> v) {
    return CharCoefficient{m, v, std::abs(v)};
}

// E[e^{iwT}] by adaptive Gauss-Kronrod over [0, q], q the 1-1e-10 quantile.
// Gamma shapes below 1 have an integrable singularity at 0; substituting
// x = y^(1/shape) absorbs the x^(shape-1) factor and leaves a smooth
// integrand (d/dy of the measure is constant).
std::complex<double> char_by_quadrature(const DistributionSpec& spec, double w) {
    const double q = quantile(spec, 1.0 - kCharTailMass);
    using gk = boost::math::quadrature::gauss_kronrod<double, 15>;

    double hi = q;
    auto eval = [&](auto&& f) {
        double err_re = 0.0;
        double err_im = 0.0;
        const double re =
            gk::integrate([&](double y) { return f(y, /*imag=*/false); }, 0.0, hi, 20, 1e-10, &err_re);
        const double im =
            gk::integrate([&](double y) { return f(y, /*imag=*/true); }, 0.0, hi, 20, 1e-10, &err_im);
        if (err_re + err_im + kCharTailMass > kCharQuadTol) {
            throw QuadratureFailure("char_coefficient: integrator did not reach 1e-8 absolute error");
        }
        return std::complex<double>{re, im};
    };

    if (const auto* g = std::get_if<GammaLaw>(&spec.variant()); g && g->shape < 1.0) {
        const double s = g->shape;
        const double norm = 1.0 / (s * std::tgamma(s) * std::pow(g->scale, s));
        hi = std::pow(q, s);
        return eval([&](double y, bool imag) {
            if (y <= 0.0) return 0.0;
            const double x = std::pow(y, 1.0 / s);
            const double phase = w * x;
            return norm * std::exp(-x / g->scale) * (imag ? std::sin(phase) : std::cos(phase));
        });
    }
    return eval([&](double x, bool imag) {
        const double phase = w * x;
        return density(spec, x) * (imag ? std::sin(phase) : std::cos(phase));
    });
}

}  // namespace

CharCoefficient char_coefficient(const DistributionSpec& spec, int m) {
    if (m == 0) throw std::invalid_argument("char_coefficient: m must be nonzero");
    const double w = 2.0 * std::numbers::pi * static_cast<double>(m);
    return std::visit(
        [&](const auto& p) -> CharCoefficient {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Deterministic>) {
                return make_coefficient(m, std::polar(1.0, w * p.t));
            } else if constexpr (std::is_same_v<T, Exponential>) {
                // rate / (rate - iw)
                const std::complex<double> v = p.rate / std::complex<double>(p.rate, -w);
                return make_coefficient(m, v);
            } else if constexpr (std::is_same_v<T, UniformInterval>) {
                // (e^{iwb} - e^{iwa}) / (iw (b-a))
                const std::complex<double> num =
                    std::polar(1.0, w * p.b) - std::polar(1.0, w * p.a);
                const std::complex<double> v = num / (std::complex<double>(0.0, w) * (p.b - p.a));
                return make_coefficient(m, v);
            } else if constexpr (std::is_same_v<T, DiscreteAtoms>) {
                std::complex<double> v{0.0, 0.0};
                for (const auto& a : p.atoms) v += a.prob * std::polar(1.0, w * a.value);
                return make_coefficient(m, v);
            } else {
                return make_coefficient(m, char_by_quadrature(spec, w));
            }
        },
        spec.variant());
}

CharCoefficient char_coefficient_mc(const DistributionSpec& spec, int m, std::uint64_t n,
                                    std::uint64_t seed, double* stderr_out) {
    if (m == 0) throw std::invalid_argument("char_coefficient_mc: m must be nonzero");
    if (n == 0) throw std::invalid_argument("char_coefficient_mc: n must be positive");
    const double w = 2.0 * std::numbers::pi * static_cast<double>(m);
    RandomStream rs(seed, 0x6d63u);  // dedicated stream tag for MC estimates
    double sre = 0.0, sim = 0.0, sre2 = 0.0, sim2 = 0.0;
    with_sampler(spec, rs, [&](auto& draw) {
        for (std::uint64_t i = 0; i < n; ++i) {
            const double t = draw();
            const double re = std::cos(w * t);
            const double im = std::sin(w * t);
            sre += re;
            sim += im;
            sre2 += re * re;
            sim2 += im * im;
        }
    });
    const double dn = static_cast<double>(n);
    const std::complex<double> v{sre / dn, sim / dn};
    if (stderr_out) {
        const double var_re = (sre2 - sre * sre / dn) / (dn - 1.0);
        const double var_im = (sim2 - sim * sim / dn) / (dn - 1.0);
        *stderr_out = std::sqrt((var_re + var_im) / dn);
    }
    return make_coefficient(m, v);
}

}  // namespace renewal
