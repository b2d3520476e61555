#include "renewal/uniformity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "renewal/errors.hpp"
#include "renewal/parallel.hpp"

namespace renewal {

namespace {

constexpr std::int64_t kDenominatorCap = 1'000'000;
constexpr std::uint64_t kMcFallbackSamples = 200'000;
constexpr std::uint64_t kMcFallbackSeed = 0x9e3779b97f4a7c15ull;

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    while (b != 0) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

Rational reduce(Rational r) {
    const std::int64_t g = gcd64(r.num, r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

// Best rational approximation by continued-fraction convergents, denominator
// capped, required to agree with x within tol.
std::optional<Rational> to_rational(double x, std::int64_t max_den, double tol) {
    if (!(x >= 0.0) || !std::isfinite(x)) return std::nullopt;
    std::int64_t p0 = 1, q0 = 0;
    std::int64_t p1 = static_cast<std::int64_t>(std::floor(x)), q1 = 1;
    double frac = x - std::floor(x);
    for (int it = 0; it < 64; ++it) {
        if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol) {
            return reduce({p1, q1});
        }
        if (frac < 1e-18) break;
        const double inv = 1.0 / frac;
        const double a = std::floor(inv);
        if (a > 1e15) break;
        const std::int64_t ai = static_cast<std::int64_t>(a);
        const std::int64_t p2 = ai * p1 + p0;
        const std::int64_t q2 = ai * q1 + q0;
        if (q2 > max_den || q2 <= 0 || p2 < 0) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        frac = inv - a;
    }
    if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol) {
        return reduce({p1, q1});
    }
    return std::nullopt;
}

// gcd(a/b, c/d) = gcd(a*d, c*b) / (b*d)
std::optional<Rational> rational_gcd(Rational a, Rational b) {
    const __int128 n1 = static_cast<__int128>(a.num) * b.den;
    const __int128 n2 = static_cast<__int128>(b.num) * a.den;
    const __int128 dd = static_cast<__int128>(a.den) * b.den;
    if (dd > static_cast<__int128>(1) << 62) return std::nullopt;
    std::int64_t g = gcd64(static_cast<std::int64_t>(n1), static_cast<std::int64_t>(n2));
    return reduce({g, static_cast<std::int64_t>(dd)});
}

CharCoefficient exact_atom_coefficient(const std::vector<Atom>& atoms, int m) {
    const double w = 2.0 * std::numbers::pi * static_cast<double>(m);
    std::complex<double> v{0.0, 0.0};
    for (const auto& a : atoms) v += a.prob * std::polar(1.0, w * a.value);
    return CharCoefficient{m, v, std::abs(v)};
}

SpanReport detect_span_atoms(const std::vector<Atom>& atoms, int m_max, double tol) {
    SpanReport report;
    report.tol = tol;

    std::optional<Rational> span;
    for (const auto& a : atoms) {
        if (a.value == 0.0) continue;  // zero divides everything
        const auto r = to_rational(a.value, kDenominatorCap, tol);
        if (!r) {
            throw SpanUndetectable(
                "detect_span: atom value has no rational form within the denominator cap");
        }
        if (!span) {
            span = *r;
        } else {
            span = rational_gcd(*span, *r);
            if (!span) {
                throw SpanUndetectable("detect_span: rational gcd overflow");
            }
        }
    }
    // mean > 0 guarantees at least one nonzero atom
    report.is_arithmetic = true;
    report.span = static_cast<double>(span->num) / static_cast<double>(span->den);

    // shifted lattice: with m* = lcm of the difference denominators,
    // m* * support lies in Z + theta
    const double v0 = atoms.front().value;
    std::int64_t mshift = 1;
    bool diffs_rational = true;
    for (std::size_t i = 1; i < atoms.size(); ++i) {
        const auto d = to_rational(atoms[i].value - v0, kDenominatorCap, tol);
        if (!d) {
            diffs_rational = false;
            break;
        }
        const std::int64_t g = gcd64(mshift, d->den);
        if (mshift > (std::int64_t{1} << 40) / std::max<std::int64_t>(1, d->den / g)) {
            diffs_rational = false;
            break;
        }
        mshift = mshift / g * d->den;
    }
    if (diffs_rational) {
        double theta = std::fmod(static_cast<double>(mshift) * v0, 1.0);
        if (theta < 0.0) theta += 1.0;
        if (theta > 1.0 - tol || theta < tol) theta = 0.0;
        report.shift_theta = theta;
    }

    for (int m = 1; m <= m_max; ++m) {
        auto c = exact_atom_coefficient(atoms, m);
        if (c.modulus >= 1.0 - kArithmeticWitnessTol) report.witnesses.push_back(c);
    }
    // the span denominator is always a witness; include it when the scan
    // range was too small to reach it
    if (report.witnesses.empty() && span->den > m_max) {
        report.witnesses.push_back(exact_atom_coefficient(atoms, static_cast<int>(span->den)));
    }
    return report;
}

}  // namespace

std::vector<double> mod1_samples(const DistributionSpec& spec, std::uint64_t n,
                                 std::uint64_t trials, std::uint64_t seed,
                                 const EstimateOptions& opts) {
    if (n == 0) throw std::invalid_argument("mod1_samples: n must be >= 1");
    if (trials == 0) throw std::invalid_argument("mod1_samples: trials must be >= 1");
    std::vector<double> out(trials);
    std::visit(
        [&](const auto& params) {
            parallel_for_chunks(trials, opts.threads, [&](std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t i = b; i < e; ++i) {
                    RandomStream rs(seed, opts.stream_base + i);
                    auto draw = make_sampler(params, rs);
                    double s = 0.0;
                    for (std::uint64_t k = 0; k < n; ++k) s += draw();
                    out[i] = s - std::floor(s);
                }
            });
        },
        spec.variant());
    return out;
}

SpanReport detect_span(const DistributionSpec& spec, int m_max, double tol) {
    if (m_max < 1) throw std::invalid_argument("detect_span: m_max must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("detect_span: tol must be positive");

    if (const auto* det = std::get_if<Deterministic>(&spec.variant())) {
        return detect_span_atoms({Atom{det->t, 1.0}}, m_max, tol);
    }
    if (const auto* atoms = std::get_if<DiscreteAtoms>(&spec.variant())) {
        return detect_span_atoms(atoms->atoms, m_max, tol);
    }

    SpanReport report;
    report.tol = tol;
    report.is_arithmetic = false;
    for (int m = 1; m <= m_max; ++m) {
        CharCoefficient c;
        try {
            c = char_coefficient(spec, m);
        } catch (const QuadratureFailure&) {
            c = char_coefficient_mc(spec, m, kMcFallbackSamples,
                                    kMcFallbackSeed ^ static_cast<std::uint64_t>(m));
        }
        if (c.modulus >= 1.0 - kArithmeticWitnessTol) report.witnesses.push_back(c);
    }
    return report;
}

KsReport gaussian_mod1_ks(double sigma, double mu, std::uint64_t n, std::uint64_t seed) {
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_mod1_ks: sigma must be positive");
    if (n == 0) throw std::invalid_argument("gaussian_mod1_ks: n must be >= 1");
    RandomStream rs(seed, 0);
    std::vector<double> samples(n);
    for (auto& x : samples) {
        const double y = mu + sigma * rs.next_gaussian();
        x = y - std::floor(y);
    }
    return make_ks_report(ks_statistic_uniform01(std::move(samples)), n);
}

double ZmCdf::operator()(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    if (integer_m) return x;
    const double fm = std::floor(m);
    const double cm = std::ceil(m);
    if (x <= cm - m) return x * fm / m;
    return x * fm / m + (x - (cm - m)) / m;
}

ZmCdf make_zm_cdf(double m) {
    if (!(m > 0.0)) throw std::invalid_argument("make_zm_cdf: m must be positive");
    ZmCdf cdf;
    cdf.m = m;
    cdf.integer_m = std::abs(m - std::round(m)) <= 1e-12;
    return cdf;
}

std::vector<KsReport> zm_limit_check(const std::vector<double>& m_list, std::uint64_t n,
                                     std::uint64_t seed) {
    if (m_list.empty()) throw std::invalid_argument("zm_limit_check: m_list must be nonempty");
    if (n == 0) throw std::invalid_argument("zm_limit_check: n must be >= 1");
    std::vector<KsReport> out;
    out.reserve(m_list.size());
    for (std::size_t j = 0; j < m_list.size(); ++j) {
        const double m = m_list[j];
        if (!(m > 0.0)) throw std::invalid_argument("zm_limit_check: m must be positive");
        RandomStream rs(seed, j);
        std::vector<double> z(n);
        for (auto& v : z) {
            const double y = m * rs.next_open_closed();
            v = std::ceil(y) - y;
        }
        out.push_back(make_ks_report(ks_statistic_uniform01(std::move(z)), n));
    }
    return out;
}

}  // namespace renewal
