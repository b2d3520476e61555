// Acceptance suite: runs every stated criterion at its pinned tolerance and
// prints one [PASS]/[FAIL] line per criterion. The final criterion replays
// criteria 1-12 with a different worker-thread count and byte-compares the
// CSV artifacts. Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "renewal/csv.hpp"
#include "renewal/determinize.hpp"
#include "renewal/estimator.hpp"
#include "renewal/floor_lemmas.hpp"
#include "renewal/residual.hpp"
#include "renewal/stats.hpp"
#include "renewal/uniformity.hpp"

using namespace renewal;

namespace {

struct CriterionOutput {
    std::string csv;
    bool pass = true;
    std::string detail;
};

struct Check {
    bool ok;
    std::string why;
};

void apply(CriterionOutput& out, bool ok, const std::string& why) {
    if (!ok) {
        out.pass = false;
        out.detail += (out.detail.empty() ? "" : "; ") + why;
    }
}

std::string fmt(double v) {
    return format_double(v);
}

void estimate_row(std::ostringstream& csv, const std::string& dist, const std::string& strat,
                  double u, const CountEstimate& e) {
    csv << dist << ',' << strat << ',' << fmt(u) << ',' << e.n_trials << ',' << fmt(e.mean) << ','
        << fmt(e.stderr_mean) << ',' << fmt(e.ci95_lo) << ',' << fmt(e.ci95_hi) << ','
        << fmt(e.target) << '\n';
}

bool within(const CountEstimate& e, double sigmas) {
    return std::abs(e.mean - e.target) <= sigmas * e.stderr_mean + 1e-12;
}

EstimateOptions opts_for(unsigned threads) {
    EstimateOptions o;
    o.threads = threads;
    return o;
}

// ---- criterion 1: Listing-1 reproduction ---------------------------------

CriterionOutput criterion1(unsigned threads) {
    CriterionOutput out;
    const auto spec = DistributionSpec::discrete_atoms({{0.0, 0.5}, {20.0, 0.5}});
    const auto strat = WindowStrategy::large_uniform(1000.0);
    const auto t0 = std::chrono::steady_clock::now();
    const auto e = estimate_interval_count(spec, strat, 1.0, 50000, 101, opts_for(threads));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::ostringstream csv;
    csv << "dist,strategy,u,n_trials,mean,stderr,ci_lo,ci_hi,target\n";
    estimate_row(csv, spec.describe(), strat.describe(), 1.0, e);
    out.csv = csv.str();

    apply(out, e.mean >= 0.09 && e.mean <= 0.11, "mean outside [0.09, 0.11]");
    if (threads == 1) apply(out, secs < 30.0, "single-threaded runtime above 30 s");
    {
        std::ostringstream d;
        d << "mean=" << fmt(e.mean) << " in [0.09,0.11], " << fmt(secs) << "s";
        out.detail = d.str() + (out.detail.empty() ? "" : "; " + out.detail);
    }
    return out;
}

// ---- criterion 2: Listing-2 reproduction ---------------------------------

CriterionOutput criterion2(unsigned) {
    CriterionOutput out;
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = floor_expectation_mc(3.2, 10000, 102);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::ostringstream csv;
    csv << "c,estimate,exact,stderr,n\n"
        << fmt(r.c) << ',' << fmt(r.estimate) << ',' << fmt(r.exact) << ',' << fmt(r.stderr_mean)
        << ',' << r.n << '\n';
    out.csv = csv.str();

    apply(out, r.estimate >= 2.17 && r.estimate <= 2.23, "estimate outside [2.17, 2.23]");
    apply(out, secs < 1.0, "runtime above 1 s");
    out.detail = "estimate=" + fmt(r.estimate) + " in [2.17,2.23], " + fmt(secs) + "s" +
                 (out.pass ? "" : "; " + out.detail);
    return out;
}

// ---- criterion 3: Blackwell, non-arithmetic fixtures ----------------------

const std::vector<std::pair<std::string, DistributionSpec>>& nonarithmetic_fixtures() {
    static const std::vector<std::pair<std::string, DistributionSpec>> f = {
        {"exponential(1)", DistributionSpec::exponential(1.0)},
        {"uniform(0.5,1.5)", DistributionSpec::uniform_interval(0.5, 1.5)},
        {"lognormal(-0.125,0.5)", DistributionSpec::log_normal(-0.125, 0.5)},
        {"gamma(2,0.5)", DistributionSpec::gamma(2.0, 0.5)},
    };
    return f;
}

CriterionOutput criterion3(unsigned threads) {
    CriterionOutput out;
    const std::vector<double> us = {0.5, 1.0, 3.0};
    std::ostringstream csv;
    csv << "dist,strategy,u,n_trials,mean,stderr,ci_lo,ci_hi,target\n";

    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& [name, spec] : nonarithmetic_fixtures()) {
        const auto strat = WindowStrategy::large_uniform(1e4 * spec.mean());
        const auto rows = sweep(spec, strat, us, 100000, 103, opts_for(threads));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            estimate_row(csv, name, strat.describe(), us[i], rows[i]);
            apply(out, within(rows[i], 5.0),
                  name + " u=" + fmt(us[i]) + " off by >5 sigma (mean=" + fmt(rows[i].mean) + ")");
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    apply(out, secs < 120.0, "runtime above 2 min");
    out.csv = csv.str();
    if (out.pass) out.detail = "12 cells within 5 sigma of u/t, " + fmt(secs) + "s";
    return out;
}

// ---- criterion 4: fixed-start limit ---------------------------------------

CriterionOutput criterion4(unsigned threads) {
    CriterionOutput out;
    std::ostringstream csv;
    csv << "dist,strategy,u,n_trials,mean,stderr,ci_lo,ci_hi,target\n";
    const auto strat = WindowStrategy::fixed_start(5000.0);
    for (const auto& [name, spec] :
         {std::pair<std::string, DistributionSpec>{"exponential(1)",
                                                   DistributionSpec::exponential(1.0)},
          std::pair<std::string, DistributionSpec>{"gamma(2,0.5)",
                                                   DistributionSpec::gamma(2.0, 0.5)}}) {
        const auto e = estimate_interval_count(spec, strat, 2.0, 100000, 104, opts_for(threads));
        estimate_row(csv, name, strat.describe(), 2.0, e);
        apply(out, within(e, 5.0), name + " fixed-start mean off (mean=" + fmt(e.mean) + ")");
    }
    out.csv = csv.str();
    if (out.pass) out.detail = "both fixtures within 5 sigma of 2";
    return out;
}

// ---- criterion 5: arithmetic case ------------------------------------------

CriterionOutput criterion5(unsigned threads) {
    CriterionOutput out;
    std::ostringstream csv;
    csv << "dist,strategy,u,n_trials,mean,stderr,ci_lo,ci_hi,target\n";

    const auto det = DistributionSpec::deterministic(10.0);
    const auto lu = WindowStrategy::large_uniform(1e4);
    for (double u : {10.0, 30.0}) {
        const auto e = estimate_interval_count(det, lu, u, 100000, 105, opts_for(threads));
        estimate_row(csv, "deterministic(10)", lu.describe(), u, e);
        apply(out, within(e, 5.0), "deterministic span multiple u=" + fmt(u) + " off");
    }

    const auto on3z = DistributionSpec::discrete_atoms(
        {{3.0, 1.0 / 3}, {6.0, 1.0 / 3}, {9.0, 1.0 / 3}});
    for (double u : {3.0, 6.0}) {
        const auto e = estimate_interval_count(on3z, lu, u, 100000, 106, opts_for(threads));
        estimate_row(csv, "atoms(3Z)", lu.describe(), u, e);
        apply(out, within(e, 5.0), "3Z span multiple u=" + fmt(u) + " off");
    }

    // the restriction: span 10, u = 9 from a fixed renewal-point start
    const auto cheat = estimate_interval_count(det, WindowStrategy::fixed_start(0.0), 9.0, 100000,
                                               107, opts_for(threads));
    estimate_row(csv, "deterministic(10)", "fixed_start(0)", 9.0, cheat);
    apply(out, cheat.mean == 0.0, "non-span-multiple window should count zero");
    apply(out, std::abs(cheat.mean - cheat.target) > 0.5, "u/t must fail for the cheating window");

    out.csv = csv.str();
    if (out.pass) out.detail = "span multiples hit u/t; u=9 on span 10 counts 0 != 0.9";
    return out;
}

// ---- criterion 6: residual law --------------------------------------------

const std::vector<std::pair<std::string, DistributionSpec>>& residual_fixtures() {
    static const std::vector<std::pair<std::string, DistributionSpec>> f = {
        {"exponential(1)", DistributionSpec::exponential(1.0)},
        {"uniform(0.5,1.5)", DistributionSpec::uniform_interval(0.5, 1.5)},
        {"lognormal(-0.125,0.5)", DistributionSpec::log_normal(-0.125, 0.5)},
        {"gamma(2,0.5)", DistributionSpec::gamma(2.0, 0.5)},
        {"deterministic(10)", DistributionSpec::deterministic(10.0)},
    };
    return f;
}

CriterionOutput criterion6(unsigned threads) {
    CriterionOutput out;
    std::ostringstream csv;
    csv << "fixture,trial,age,residual,containing_interval\n";
    const std::uint64_t n = 10000;
    for (const auto& [name, spec] : residual_fixtures()) {
        const auto strat = WindowStrategy::large_uniform(1e4 * spec.mean());
        const auto s = sample_residuals(spec, strat, n, 108, opts_for(threads));
        for (std::uint64_t i = 0; i < n; ++i) {
            csv << name << ',' << i << ',' << fmt(s.ages[i]) << ',' << fmt(s.residuals[i]) << ','
                << fmt(s.containing_intervals[i]) << '\n';
        }
        IntegratedCdf cdf(spec, IntegratedCdf::Kind::Residual);
        const auto ks = ks_test(s.residuals, std::ref(cdf));
        apply(out, ks.pass, name + " residual KS=" + fmt(ks.statistic));
        if (name == "exponential(1)") {
            // Poisson special case: residual law is Exp(1) itself
            const auto direct =
                ks_test(s.residuals, [](double x) { return -std::expm1(-x); });
            apply(out, direct.pass, "poisson residual vs Exp(1) KS=" + fmt(direct.statistic));
        }
    }
    out.csv = csv.str();
    if (out.pass) out.detail = "5 fixtures pass KS vs integral of survival/mean at n=1e4";
    return out;
}

// ---- criterion 7: length-biased law ----------------------------------------

CriterionOutput criterion7(unsigned threads) {
    CriterionOutput out;
    std::ostringstream csv;
    csv << "fixture,trial,containing_interval\n";
    const std::uint64_t n = 10000;

    for (const auto& [name, spec] : nonarithmetic_fixtures()) {
        const auto strat = WindowStrategy::large_uniform(1e4 * spec.mean());
        const auto s = sample_residuals(spec, strat, n, 109, opts_for(threads));
        for (std::uint64_t i = 0; i < n; ++i) {
            csv << name << ',' << i << ',' << fmt(s.containing_intervals[i]) << '\n';
        }
        IntegratedCdf cdf(spec, IntegratedCdf::Kind::LengthBiased);
        const auto ks = ks_test(s.containing_intervals, std::ref(cdf));
        apply(out, ks.pass, name + " length-bias KS=" + fmt(ks.statistic));
    }

    // atomic fixture: frequencies against v p(v) / mean within 4 sigma
    const auto on3z = DistributionSpec::discrete_atoms(
        {{3.0, 1.0 / 3}, {6.0, 1.0 / 3}, {9.0, 1.0 / 3}});
    const auto s = sample_residuals(on3z, WindowStrategy::large_uniform(1e4 * on3z.mean()), n, 110,
                                    opts_for(threads));
    for (std::uint64_t i = 0; i < n; ++i) {
        csv << "atoms(3Z)," << i << ',' << fmt(s.containing_intervals[i]) << '\n';
    }
    for (double v : {3.0, 6.0, 9.0}) {
        const double expected = v * (1.0 / 3) / on3z.mean();
        std::size_t hits = 0;
        for (double c : s.containing_intervals) {
            if (c == v) ++hits;
        }
        const double got = static_cast<double>(hits) / static_cast<double>(n);
        const double se = std::sqrt(expected * (1.0 - expected) / static_cast<double>(n));
        apply(out, std::abs(got - expected) <= 4.0 * se,
              "atom " + fmt(v) + " frequency " + fmt(got) + " vs " + fmt(expected));
    }

    out.csv = csv.str();
    if (out.pass) out.detail = "4 continuous fixtures pass KS; 3Z atom frequencies within 4 sigma";
    return out;
}

// ---- criterion 8: conditional uniformity -----------------------------------

CriterionOutput criterion8(unsigned threads) {
    CriterionOutput out;
    std::ostringstream csv;
    csv << "fixture,bucket_lo,bucket_hi,count,tested,statistic,threshold,pass\n";

    const auto emit = [&](const std::string& name, const std::vector<UniformityBucket>& buckets) {
        std::size_t tested = 0;
        for (const auto& b : buckets) {
            csv << name << ',' << fmt(b.lower) << ',' << fmt(b.upper) << ',' << b.count << ','
                << (b.tested ? 1 : 0) << ',' << fmt(b.tested ? b.ks.statistic : 0.0) << ','
                << fmt(b.tested ? b.ks.threshold : 0.0) << ',' << (b.tested && b.ks.pass ? 1 : 0)
                << '\n';
            if (b.tested) {
                ++tested;
                apply(out, b.ks.pass,
                      name + " bucket at " + fmt(b.lower) + " KS=" + fmt(b.ks.statistic));
            }
        }
        apply(out, tested >= 1, name + " produced no testable bucket");
    };

    const auto bimodal = DistributionSpec::discrete_atoms({{0.0, 0.5}, {20.0, 0.5}});
    const auto sb = sample_residuals(bimodal, WindowStrategy::large_uniform(1e4 * bimodal.mean()),
                                     20000, 111, opts_for(threads));
    emit("bimodal", conditional_uniformity_check(sb, 0.0));

    const auto ui = DistributionSpec::uniform_interval(5.0, 15.0);
    const auto su = sample_residuals(ui, WindowStrategy::large_uniform(1e4 * ui.mean()), 50000, 112,
                                     opts_for(threads));
    emit("uniform(5,15)", conditional_uniformity_check(su, ui.mean() / 50.0));

    out.csv = csv.str();
    if (out.pass) out.detail = "all buckets with >=500 samples pass KS vs U(0,1)";
    return out;
}

// ---- criterion 9: theorem-2 equivalence suite -------------------------------

CriterionOutput criterion9(unsigned threads) {
    CriterionOutput out;
    std::ostringstream csv;
    csv << "fixture,max_gamma_modulus,gamma_predicts_uniform,ks_statistic,ks_threshold,ks_uniform,"
           "agree\n";

    const std::vector<std::pair<std::string, DistributionSpec>> fixtures = {
        {"exponential(1)", DistributionSpec::exponential(1.0)},
        {"uniform(0,1)", DistributionSpec::uniform_interval(0.0, 1.0)},
        {"lognormal(0,1)", DistributionSpec::log_normal(0.0, 1.0)},
        {"deterministic(10)", DistributionSpec::deterministic(10.0)},
        {"atoms(3Z)",
         DistributionSpec::discrete_atoms({{3.0, 1.0 / 3}, {6.0, 1.0 / 3}, {9.0, 1.0 / 3}})},
        {"atoms(Z+0.5)",
         DistributionSpec::discrete_atoms({{0.5, 1.0 / 3}, {1.5, 1.0 / 3}, {2.5, 1.0 / 3}})},
    };

    for (const auto& [name, spec] : fixtures) {
        double max_mod = 0.0;
        for (int m = 1; m <= 64; ++m) {
            CharCoefficient c;
            try {
                c = char_coefficient(spec, m);
            } catch (const QuadratureFailure&) {
                c = char_coefficient_mc(spec, m, 200000, 113 + static_cast<std::uint64_t>(m));
            }
            max_mod = std::max(max_mod, c.modulus);
        }
        const bool gamma_uniform = max_mod < 1.0 - 1e-6;

        const auto xs = mod1_samples(spec, 200, 5000, 114, opts_for(threads));
        const auto ks = make_ks_report(ks_statistic_uniform01(xs), xs.size());

        const bool agree = gamma_uniform == ks.pass;
        csv << name << ',' << fmt(max_mod) << ',' << (gamma_uniform ? 1 : 0) << ','
            << fmt(ks.statistic) << ',' << fmt(ks.threshold) << ',' << (ks.pass ? 1 : 0) << ','
            << (agree ? 1 : 0) << '\n';
        apply(out, agree,
              name + " verdicts disagree (max|gamma|=" + fmt(max_mod) +
                  ", KS=" + fmt(ks.statistic) + ")");
    }
    out.csv = csv.str();
    if (out.pass) out.detail = "gamma-scan and mod-1 KS verdicts agree on all 6 fixtures";
    return out;
}

// ---- criterion 10: exact Z_m CDF -------------------------------------------

CriterionOutput criterion10(unsigned) {
    CriterionOutput out;
    std::ostringstream csv;
    csv << "m,sup_distance,monotone,right_continuous,endpoints\n";
    for (double m : {1.5, 2.5, 7.25}) {
        const auto cdf = make_zm_cdf(m);
        RandomStream rs(115, static_cast<std::uint64_t>(m * 4));
        const std::size_t n = 1000000;
        std::vector<double> z(n);
        for (auto& v : z) {
            const double y = m * rs.next_open_closed();
            v = std::ceil(y) - y;
        }
        const double sup = ks_statistic(std::move(z), cdf);

        bool monotone = true;
        bool right_cont = true;
        double prev = 0.0;
        for (int i = -50; i <= 1050; ++i) {
            const double x = i / 1000.0;
            const double v = cdf(x);
            if (v < prev - 1e-15) monotone = false;
            if (std::abs(cdf(x + 1e-13) - v) > 1e-9) right_cont = false;
            prev = v;
        }
        const bool endpoints = cdf(0.0) == 0.0 && cdf(-1e-9) == 0.0 && cdf(1.0) == 1.0;

        csv << fmt(m) << ',' << fmt(sup) << ',' << (monotone ? 1 : 0) << ',' << (right_cont ? 1 : 0)
            << ',' << (endpoints ? 1 : 0) << '\n';
        apply(out, sup <= 0.005, "m=" + fmt(m) + " sup distance " + fmt(sup) + " > 0.005");
        apply(out, monotone && right_cont && endpoints, "m=" + fmt(m) + " shape properties");
    }
    out.csv = csv.str();
    if (out.pass) out.detail = "exact CDF within 0.005 of 1e6-draw empirical CDF, shape clean";
    return out;
}

// ---- criterion 11: determinization identity ---------------------------------

CriterionOutput criterion11(unsigned threads) {
    CriterionOutput out;
    std::ostringstream csv;
    csv << "fixture,n_trials,orig_mean,mod_mean,target,mean_delta,stderr_delta,p_exit,p_enter,"
           "identity_violations,frac_delta_beyond_unit\n";

    std::vector<std::pair<std::string, DistributionSpec>> fixtures = nonarithmetic_fixtures();
    fixtures.emplace_back("bimodal",
                          DistributionSpec::discrete_atoms({{0.0, 0.5}, {20.0, 0.5}}));
    fixtures.emplace_back("deterministic(10)", DistributionSpec::deterministic(10.0));

    for (const auto& [name, spec] : fixtures) {
        const double t = spec.mean();
        const auto strat = WindowStrategy::large_uniform(100.0 * t);
        const auto check =
            transform_expectation_check(spec, strat, 3.0 * t, 100000, 116, opts_for(threads));
        csv << name << ',' << 100000 << ',' << fmt(check.original.mean) << ','
            << fmt(check.modified.mean) << ',' << fmt(check.original.target) << ','
            << fmt(check.mean_delta) << ',' << fmt(check.stderr_delta) << ',' << fmt(check.p_exit)
            << ',' << fmt(check.p_enter) << ',' << check.identity_violations << ','
            << fmt(check.frac_delta_beyond_unit) << '\n';

        apply(out, check.identity_violations == 0,
              name + ": " + std::to_string(check.identity_violations) + " identity violations");
        apply(out, std::abs(check.mean_delta) <= 5.0 * check.stderr_delta + 1e-12,
              name + ": mean delta " + fmt(check.mean_delta) + " beyond 5 sigma");
        apply(out, within(check.original, 5.0), name + ": original mean off u/t");
        apply(out, within(check.modified, 5.0), name + ": modified mean off u/t");
    }
    out.csv = csv.str();
    if (out.pass) {
        out.detail = "identity exact on 6x1e5 trials; means and mean delta within 5 sigma";
    }
    return out;
}

// ---- criterion 12: floor-lemma suite ---------------------------------------

CriterionOutput criterion12(unsigned) {
    CriterionOutput out;
    std::ostringstream csv;
    csv << "kind,c,estimate,exact,stderr,n\n";

    for (double c : {-2.7, 0.5, 1.0, 3.2, 7.99}) {
        const auto r = floor_expectation_mc(c, 100000, 117);
        csv << "plain," << fmt(c) << ',' << fmt(r.estimate) << ',' << fmt(r.exact) << ','
            << fmt(r.stderr_mean) << ',' << r.n << '\n';
        apply(out, std::abs(r.estimate - r.exact) <= 5.0 * r.stderr_mean + 1e-12,
              "c=" + fmt(c) + " off by >5 sigma");
    }

    const auto two_point = floor_expectation_noisy(3.2, NoiseSpec::two_point(0.5), 100000, 118);
    const auto gauss = floor_expectation_noisy(3.2, NoiseSpec::gaussian(2.0), 100000, 119);
    for (const auto* r : {&two_point, &gauss}) {
        csv << "noisy," << fmt(r->c) << ',' << fmt(r->estimate) << ',' << fmt(r->exact) << ','
            << fmt(r->stderr_mean) << ',' << r->n << '\n';
        apply(out, std::abs(r->estimate - r->exact) <= 5.0 * r->stderr_mean,
              "noisy estimate off by >5 sigma");
    }
    apply(out,
          std::abs(two_point.estimate - gauss.estimate) <=
              5.0 * (two_point.stderr_mean + gauss.stderr_mean),
          "noise laws disagree with each other");

    const auto beta22 = [](double x) { return 3.0 * x * x - 2.0 * x * x * x; };
    std::vector<double> grid;
    for (double c = 0.01; c < 0.995; c += 0.01) grid.push_back(c);
    double worst = 0.0;
    double at_quarter = 0.0;
    for (const auto& p : converse_probe(beta22, grid)) {
        const double gap = std::abs(p.lhs - p.rhs);
        worst = std::max(worst, gap);
        if (std::abs(p.c - 0.25) < 1e-9) at_quarter = gap;
        csv << "probe," << fmt(p.c) << ',' << fmt(p.lhs) << ',' << fmt(p.rhs) << ",0,0\n";
    }
    apply(out, at_quarter >= 0.09, "probe gap at c=0.25 is " + fmt(at_quarter) + " < 0.09");
    for (const auto& p : converse_probe([](double x) { return x; }, grid)) {
        apply(out, std::abs(p.lhs - p.rhs) < 1e-12, "uniform law flagged by the probe");
    }

    out.csv = csv.str();
    if (out.pass) {
        out.detail = "5 c-fixtures and 2 noise laws within 5 sigma; probe gap at c=0.25 is " +
                     fmt(at_quarter);
    }
    return out;
}

}  // namespace

int main() {
    using Runner = std::function<CriterionOutput(unsigned)>;
    struct Entry {
        int id;
        const char* name;
        Runner run;
        unsigned main_threads;
    };
    const std::vector<Entry> criteria = {
        {1, "Listing-1 reproduction (bimodal, theta=1000, u=1, 50k trials)", criterion1, 1},
        {2, "Listing-2 reproduction (c=3.2, 10k draws)", criterion2, 1},
        {3, "Blackwell non-arithmetic fixtures (12 cells, 1e5 trials)", criterion3, 8},
        {4, "Blackwell fixed-start limit (m=5000, u=2)", criterion4, 8},
        {5, "Arithmetic case (span multiples pass, u=9 on span 10 counts 0)", criterion5, 8},
        {6, "Residual law vs integral of survival/mean (5 fixtures)", criterion6, 8},
        {7, "Length-biased law (KS and atom frequencies)", criterion7, 8},
        {8, "Conditional uniformity in interval buckets", criterion8, 8},
        {9, "Theorem-2 equivalence: gamma scan vs mod-1 KS (6 fixtures)", criterion9, 8},
        {10, "Z_m exact CDF vs 1e6-draw simulation", criterion10, 1},
        {11, "Determinization identity and count preservation", criterion11, 8},
        {12, "Floor lemmas, noise invariance, uniqueness probe", criterion12, 1},
    };

    std::filesystem::create_directories("acceptance_out");
    std::vector<CriterionOutput> results;
    int failures = 0;

    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        CriterionOutput out = c.run(c.main_threads);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(out);
        {
            std::ofstream f("acceptance_out/criterion" + std::to_string(c.id) + ".csv",
                            std::ios::binary);
            f << out.csv;
        }
        std::printf("[%s] criterion %2d: %s — %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", c.id,
                    c.name, out.detail.c_str(), secs);
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }

    // criterion 13: byte-identical CSVs across 1 vs 8 worker threads
    {
        const auto t0 = std::chrono::steady_clock::now();
        bool pass = true;
        std::string detail;
        for (std::size_t i = 0; i < criteria.size(); ++i) {
            const unsigned other = criteria[i].main_threads == 1 ? 8 : 1;
            const CriterionOutput replay = criteria[i].run(other);
            if (replay.csv != results[i].csv) {
                pass = false;
                detail += std::string(detail.empty() ? "" : "; ") + "criterion " +
                          std::to_string(criteria[i].id) + " differs across thread counts";
            }
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (pass) detail = "criteria 1-12 CSVs byte-identical across 1 vs 8 threads";
        std::printf("[%s] criterion 13: Determinism across thread counts — %s (%.1fs)\n",
                    pass ? "PASS" : "FAIL", detail.c_str(), secs);
        if (!pass) ++failures;
    }

    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
