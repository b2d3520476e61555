// renewal-lab: experiment driver for the renewal-process simulation toolkit.
// Every subcommand writes a CSV (always) and an SVG (with --plot), prints a
// one-line summary, and exits 0 on success, 2 on validation errors, 3 on
// runtime failures. Seeds are mandatory; there is no wall-clock fallback.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "renewal/csv.hpp"
#include "renewal/determinize.hpp"
#include "renewal/errors.hpp"
#include "renewal/estimator.hpp"
#include "renewal/floor_lemmas.hpp"
#include "renewal/json_io.hpp"
#include "renewal/residual.hpp"
#include "renewal/stats.hpp"
#include "renewal/svg.hpp"
#include "renewal/uniformity.hpp"

namespace {

using namespace renewal;
using nlohmann::json;

struct CommonOpts {
    std::int64_t seed = 0;
    std::string out_dir = ".";
    bool plot = false;
    unsigned threads = 0;
    std::string config_path;

    CLI::Option* seed_opt = nullptr;

    json config;

    void attach(CLI::App* cmd) {
        seed_opt = cmd->add_option("--seed", seed, "RNG seed (required; no wall-clock default)");
        cmd->add_option("--out-dir", out_dir, "output directory for CSV/SVG/JSON files");
        cmd->add_flag("--plot", plot, "also write SVG plots");
        cmd->add_option("--threads", threads,
                        "worker threads (0 = RENEWAL_LAB_THREADS env, then hardware)");
        cmd->add_option("--config", config_path, "JSON config file; explicit flags win");
    }

    // flags win over config; config fills whatever was not given
    void load_config(CLI::App* cmd) {
        if (config_path.empty()) return;
        std::ifstream in(config_path);
        if (!in) throw std::invalid_argument("--config: cannot open " + config_path);
        config = json::parse(in, nullptr, false);
        if (config.is_discarded()) throw std::invalid_argument("--config: parse error");
        if (seed_opt->count() == 0 && config.contains("seed")) {
            seed = config["seed"].get<std::int64_t>();
            seed_opt->add_result(std::to_string(seed));  // mark as provided
        }
        auto fill = [&](const char* flag, const char* key, auto& value) {
            auto* opt = cmd->get_option(flag);
            if (opt->count() == 0 && config.contains(key)) value = config[key];
        };
        fill("--out-dir", "out_dir", out_dir);
        fill("--threads", "threads", threads);
        if (cmd->get_option("--plot")->count() == 0 && config.contains("plot")) {
            plot = config["plot"].get<bool>();
        }
    }

    void require_seed() const {
        if (seed_opt->count() == 0) {
            throw std::invalid_argument("--seed is required (reproducibility contract)");
        }
    }

    std::uint64_t useed() const { return static_cast<std::uint64_t>(seed); }

    EstimateOptions estimate_opts() const {
        EstimateOptions o;
        o.threads = threads;
        return o;
    }

    std::string path(const std::string& name) const {
        std::filesystem::create_directories(out_dir);
        return (std::filesystem::path(out_dir) / name).string();
    }
};

// config fallback for subcommand-specific string options (dist/strategy/noise
// accept either a JSON object in the config or a string flag)
std::string config_text(const json& cfg, const char* key) {
    if (!cfg.contains(key)) return {};
    const auto& v = cfg[key];
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void fill_text(CLI::App* cmd, const json& cfg, const char* flag, const char* key,
               std::string& value) {
    if (cmd->get_option(flag)->count() == 0) {
        const auto t = config_text(cfg, key);
        if (!t.empty()) value = t;
    }
}

template <class T>
void fill_value(CLI::App* cmd, const json& cfg, const char* flag, const char* key, T& value) {
    if (cmd->get_option(flag)->count() == 0 && cfg.contains(key)) {
        value = cfg[key].get<T>();
    }
}

void write_estimate_rows(CsvWriter& csv, const std::string& dist, const std::string& strat,
                         const std::vector<double>& us, const std::vector<CountEstimate>& rows,
                         std::uint64_t n_trials) {
    csv.header({"dist", "strategy", "u", "n_trials", "mean", "stderr", "ci_lo", "ci_hi", "target"});
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& e = rows[i];
        csv.row(dist, strat, us[i], n_trials, e.mean, e.stderr_mean, e.ci95_lo, e.ci95_hi,
                e.target);
    }
}

bool within_gate(const CountEstimate& e, double gate) {
    return std::abs(e.mean - e.target) <= gate * e.stderr_mean + 1e-12;
}

void print_estimate_line(const char* tag, const CountEstimate& e, bool pass) {
    std::printf("%s: mean=%.6g stderr=%.3g target=%.6g n=%llu [%s]\n", tag, e.mean, e.stderr_mean,
                e.target, static_cast<unsigned long long>(e.n_trials), pass ? "PASS" : "FAIL");
}

int run_blackwell(CommonOpts& common, const std::string& dist_json,
                  const std::string& strat_json, std::vector<double> us, std::uint64_t n_trials,
                  double gate) {
    const auto spec = distribution_from_string(dist_json);
    const auto strat = strategy_from_string(strat_json);
    if (us.empty()) throw std::invalid_argument("--u or --u-list is required");
    const auto rows = sweep(spec, strat, us, n_trials, common.useed(), common.estimate_opts());

    CsvWriter csv(common.path("blackwell.csv"));
    write_estimate_rows(csv, spec.describe(), strat.describe(), us, rows, n_trials);

    bool all_pass = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const bool pass = within_gate(rows[i], gate);
        all_pass = all_pass && pass;
        print_estimate_line("blackwell", rows[i], pass);
    }
    if (common.plot) {
        SvgSeries mean_series{"mean", us, {}};
        SvgSeries target_series{"u/t", us, {}};
        for (const auto& e : rows) {
            mean_series.ys.push_back(e.mean);
            target_series.ys.push_back(e.target);
        }
        svg_line_chart(common.path("blackwell.svg"), "window count vs u", "u",
                       {mean_series, target_series});
    }
    return 0;
}

int run_mu(CommonOpts& common, const std::string& dist_json, double s, std::uint64_t n_trials,
           double gate) {
    const auto spec = distribution_from_string(dist_json);
    const auto e = estimate_mu(spec, s, n_trials, common.useed(), common.estimate_opts());
    CsvWriter csv(common.path("mu.csv"));
    write_estimate_rows(csv, spec.describe(), "prefix(0,s]", {s}, {e}, n_trials);
    print_estimate_line("mu", e, within_gate(e, gate));
    return 0;
}

int run_residual(CommonOpts& common, const std::string& dist_json, const std::string& strat_json,
                 std::uint64_t n_trials) {
    const auto spec = distribution_from_string(dist_json);
    const auto strat = strategy_from_string(strat_json);
    const auto s = sample_residuals(spec, strat, n_trials, common.useed(), common.estimate_opts());

    CsvWriter csv(common.path("residual.csv"));
    csv.header({"trial", "age", "residual", "containing_interval"});
    for (std::size_t i = 0; i < s.residuals.size(); ++i) {
        csv.row(i, s.ages[i], s.residuals[i], s.containing_intervals[i]);
    }

    IntegratedCdf cdf(spec, IntegratedCdf::Kind::Residual);
    const auto ks = ks_test(s.residuals, std::ref(cdf));
    IntegratedCdf age_cdf(spec, IntegratedCdf::Kind::Residual);
    const auto ks_age = ks_test(s.ages, std::ref(age_cdf));
    std::ofstream(common.path("residual_ks.json"))
        << json{{"residual_ks", to_json(ks)}, {"age_ks", to_json(ks_age)}}.dump(2) << '\n';

    std::printf("residual: ks=%.4f threshold=%.4f n=%llu age_ks=%.4f [%s]\n", ks.statistic,
                ks.threshold, static_cast<unsigned long long>(ks.n), ks_age.statistic,
                ks.pass && ks_age.pass ? "PASS" : "FAIL");

    if (common.plot) {
        SvgSeries ref{"survival/mean", {}, {}};
        const double hi = quantile(spec, 0.999);
        for (int i = 0; i <= 200; ++i) {
            const double x = hi * i / 200.0;
            ref.xs.push_back(x);
            ref.ys.push_back(residual_pdf(spec, x));
        }
        svg_histogram(common.path("residual.svg"), "residual life", s.residuals, 60, &ref);
    }
    return 0;
}

int run_lengthbias(CommonOpts& common, const std::string& dist_json,
                   const std::string& strat_json, std::uint64_t n_trials) {
    const auto spec = distribution_from_string(dist_json);
    const auto strat = strategy_from_string(strat_json);
    const auto s = sample_residuals(spec, strat, n_trials, common.useed(), common.estimate_opts());

    CsvWriter csv(common.path("lengthbias.csv"));
    csv.header({"trial", "containing_interval"});
    for (std::size_t i = 0; i < s.containing_intervals.size(); ++i) {
        csv.row(i, s.containing_intervals[i]);
    }

    json report;
    bool pass = true;
    if (spec.has_density()) {
        IntegratedCdf cdf(spec, IntegratedCdf::Kind::LengthBiased);
        const auto ks = ks_test(s.containing_intervals, std::ref(cdf));
        pass = ks.pass;
        report = json{{"kind", "ks"}, {"ks", to_json(ks)}};
        std::printf("lengthbias: ks=%.4f threshold=%.4f n=%llu [%s]\n", ks.statistic, ks.threshold,
                    static_cast<unsigned long long>(ks.n), pass ? "PASS" : "FAIL");
    } else {
        // atomic laws: compare per-atom frequencies against v p(v) / mean
        json freqs = json::array();
        const double n = static_cast<double>(s.containing_intervals.size());
        double worst_sigmas = 0.0;
        std::visit(
            [&](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                std::vector<Atom> atoms;
                if constexpr (std::is_same_v<T, Deterministic>) {
                    atoms = {Atom{p.t, 1.0}};
                } else if constexpr (std::is_same_v<T, DiscreteAtoms>) {
                    atoms = p.atoms;
                }
                for (const auto& a : atoms) {
                    if (a.value <= 0.0) continue;  // zero-length intervals are never observed
                    const double expected = a.value * a.prob / spec.mean();
                    std::size_t hits = 0;
                    for (double c : s.containing_intervals) {
                        if (c == a.value) ++hits;
                    }
                    const double got = static_cast<double>(hits) / n;
                    const double se = std::sqrt(expected * (1.0 - expected) / n);
                    const double sig = se > 0.0 ? std::abs(got - expected) / se : 0.0;
                    worst_sigmas = std::max(worst_sigmas, sig);
                    freqs.push_back(json{{"value", a.value},
                                         {"expected", expected},
                                         {"observed", got},
                                         {"sigmas", sig}});
                }
            },
            spec.variant());
        pass = worst_sigmas <= 4.0;
        report = json{{"kind", "atom_frequencies"}, {"atoms", freqs}, {"worst_sigmas", worst_sigmas}};
        std::printf("lengthbias: atom frequencies worst=%.2f sigmas [%s]\n", worst_sigmas,
                    pass ? "PASS" : "FAIL");
    }
    std::ofstream(common.path("lengthbias_ks.json")) << report.dump(2) << '\n';

    if (common.plot && spec.has_density()) {
        SvgSeries ref{"v f(v)/mean", {}, {}};
        const double hi = quantile(spec, 0.999);
        for (int i = 1; i <= 200; ++i) {
            const double x = hi * i / 200.0;
            ref.xs.push_back(x);
            ref.ys.push_back(length_biased_pdf(spec, x));
        }
        svg_histogram(common.path("lengthbias.svg"), "length-biased interval",
                      s.containing_intervals, 60, &ref);
    }
    return 0;
}

int run_mod1(CommonOpts& common, const std::string& dist_json, std::uint64_t n,
             std::uint64_t trials) {
    const auto spec = distribution_from_string(dist_json);
    const auto xs = mod1_samples(spec, n, trials, common.useed(), common.estimate_opts());

    CsvWriter csv(common.path("mod1.csv"));
    csv.header({"trial", "value"});
    for (std::size_t i = 0; i < xs.size(); ++i) csv.row(i, xs[i]);

    const auto ks = make_ks_report(ks_statistic_uniform01(xs), xs.size());
    std::ofstream(common.path("mod1_ks.json")) << to_json(ks).dump(2) << '\n';
    std::printf("mod1: n=%llu ks=%.4f threshold=%.4f [%s]\n",
                static_cast<unsigned long long>(n), ks.statistic, ks.threshold,
                ks.pass ? "PASS" : "FAIL");
    if (common.plot) svg_histogram(common.path("mod1.svg"), "partial sums mod 1", xs, 50);
    return 0;
}

int run_span(CommonOpts& common, const std::string& dist_json, int m_max, double tol) {
    const auto spec = distribution_from_string(dist_json);
    const auto report = detect_span(spec, m_max, tol);

    std::ofstream(common.path("span.json")) << to_json(report).dump(2) << '\n';

    CsvWriter csv(common.path("gamma_scan.csv"));
    csv.header({"m", "re", "im", "modulus"});
    double max_mod = 0.0;
    for (int m = 1; m <= m_max; ++m) {
        CharCoefficient c;
        try {
            c = char_coefficient(spec, m);
        } catch (const QuadratureFailure&) {
            c = char_coefficient_mc(spec, m, 200000, common.useed() ^ static_cast<unsigned>(m));
        }
        max_mod = std::max(max_mod, c.modulus);
        csv.row(c.m, c.value.real(), c.value.imag(), c.modulus);
    }

    if (report.is_arithmetic) {
        std::printf("span: arithmetic span=%.9g theta=%.9g witnesses=%zu max|gamma|=%.6f\n",
                    report.span.value_or(0.0), report.shift_theta.value_or(0.0),
                    report.witnesses.size(), max_mod);
    } else {
        std::printf("span: non-arithmetic max|gamma m<=%d|=%.6f\n", m_max, max_mod);
    }
    return 0;
}

int run_zm(CommonOpts& common, std::vector<double> m_list, std::uint64_t n) {
    const auto reports = zm_limit_check(m_list, n, common.useed());
    CsvWriter csv(common.path("zm.csv"));
    csv.header({"m", "statistic", "threshold", "pass"});
    for (std::size_t i = 0; i < reports.size(); ++i) {
        csv.row(m_list[i], reports[i].statistic, reports[i].threshold,
                reports[i].pass ? 1 : 0);
    }
    std::printf("zm: m=%.6g ks=%.4f ... m=%.6g ks=%.4f [%s]\n", m_list.front(),
                reports.front().statistic, m_list.back(), reports.back().statistic,
                reports.back().pass ? "PASS" : "FAIL");
    if (common.plot) {
        SvgSeries s{"ks statistic", m_list, {}};
        for (const auto& r : reports) s.ys.push_back(r.statistic);
        svg_line_chart(common.path("zm.svg"), "Z_m vs U(0,1)", "m", {s});
    }
    return 0;
}

int run_gauss_mod1(CommonOpts& common, double sigma, double mu, std::uint64_t n) {
    const auto ks = gaussian_mod1_ks(sigma, mu, n, common.useed());
    CsvWriter csv(common.path("gauss_mod1.csv"));
    csv.header({"sigma", "mu", "n", "statistic", "threshold", "pass"});
    csv.row(sigma, mu, n, ks.statistic, ks.threshold, ks.pass ? 1 : 0);
    std::printf("gauss-mod1: sigma=%g ks=%.4f threshold=%.4f [%s]\n", sigma, ks.statistic,
                ks.threshold, ks.pass ? "PASS" : "FAIL");
    return 0;
}

int run_transform(CommonOpts& common, const std::string& dist_json,
                  const std::string& strat_json, double u, std::uint64_t n_trials, double gate) {
    const auto spec = distribution_from_string(dist_json);
    const auto strat = strategy_from_string(strat_json);
    std::vector<TransformOutcome> trials;
    const auto check = transform_expectation_check(spec, strat, u, n_trials, common.useed(),
                                                   common.estimate_opts(), &trials);

    CsvWriter csv(common.path("transform.csv"));
    csv.header({"trial", "orig_count", "mod_count", "delta", "X", "Y", "M", "N"});
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const auto& o = trials[i];
        csv.row(i, o.original_count, o.modified_count, o.delta, o.age_start, o.age_end, o.m_index,
                o.n_in_window);
    }

    const bool pass = check.identity_violations == 0 &&
                      std::abs(check.mean_delta) <= gate * check.stderr_delta + 1e-12 &&
                      within_gate(check.original, gate) && within_gate(check.modified, gate);
    std::printf("transform: orig=%.4f mod=%.4f target=%.4f mean_delta=%.5f p_exit=%.4f "
                "p_enter=%.4f |delta|>1 frac=%.4g identity_violations=%llu [%s]\n",
                check.original.mean, check.modified.mean, check.original.target, check.mean_delta,
                check.p_exit, check.p_enter, check.frac_delta_beyond_unit,
                static_cast<unsigned long long>(check.identity_violations),
                pass ? "PASS" : "FAIL");
    if (common.plot) {
        std::vector<double> deltas(trials.size());
        for (std::size_t i = 0; i < trials.size(); ++i) {
            deltas[i] = static_cast<double>(trials[i].delta);
        }
        svg_histogram(common.path("transform.svg"), "count change per trial", deltas, 21);
    }
    return 0;
}

int run_floor(CommonOpts& common, double c, std::uint64_t n, const std::string& noise_json,
              double gate) {
    FloorExpectationResult r;
    if (noise_json.empty()) {
        r = floor_expectation_mc(c, n, common.useed());
    } else {
        r = floor_expectation_noisy(c, noise_from_string(noise_json), n, common.useed());
    }
    CsvWriter csv(common.path("floor.csv"));
    csv.header({"c", "estimate", "exact", "stderr", "n"});
    csv.row(r.c, r.estimate, r.exact, r.stderr_mean, r.n);
    const bool pass = std::abs(r.estimate - r.exact) <= gate * r.stderr_mean + 1e-12;
    std::printf("floor: c=%g estimate=%.6f exact=%.6f stderr=%.4g [%s]\n", c, r.estimate, r.exact,
                r.stderr_mean, pass ? "PASS" : "FAIL");
    return 0;
}

int run_listing1(CommonOpts& common) {
    // Appendix-A simulator parameters: bimodal {0, 20}, start uniform on
    // (0, 1000], unit window, 50000 trials
    const auto spec = DistributionSpec::discrete_atoms({{0.0, 0.5}, {20.0, 0.5}});
    const auto strat = WindowStrategy::large_uniform(1000.0);
    const auto e =
        estimate_interval_count(spec, strat, 1.0, 50000, common.useed(), common.estimate_opts());
    CsvWriter csv(common.path("listing1.csv"));
    write_estimate_rows(csv, spec.describe(), strat.describe(), {1.0}, {e}, 50000);
    print_estimate_line("listing1", e, within_gate(e, 5.0));
    return 0;
}

int run_listing2(CommonOpts& common, double c, std::uint64_t n) {
    const auto r = floor_expectation_mc(c, n, common.useed());
    CsvWriter csv(common.path("listing2.csv"));
    csv.header({"c", "estimate", "exact", "stderr", "n"});
    csv.row(r.c, r.estimate, r.exact, r.stderr_mean, r.n);
    const bool pass = std::abs(r.estimate - r.exact) <= 5.0 * r.stderr_mean + 1e-12;
    std::printf("listing2: c=%g estimate=%.6f exact=%.6f [%s]\n", c, r.estimate, r.exact,
                pass ? "PASS" : "FAIL");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"renewal-lab: simulation lab for renewal and point processes"};
    app.require_subcommand(1);
    int rc = 0;

    // blackwell ----------------------------------------------------------
    auto* blackwell = app.add_subcommand("blackwell", "window-count estimate vs u/t");
    struct {
        CommonOpts common;
        std::string dist, strategy;
        double u = 0.0;
        std::vector<double> u_list;
        std::uint64_t n_trials = 0;
        double gate = 5.0;
    } bw;
    bw.common.attach(blackwell);
    blackwell->add_option("--dist", bw.dist, "distribution JSON");
    blackwell->add_option("--strategy", bw.strategy, "window strategy JSON");
    blackwell->add_option("--u", bw.u, "window length");
    blackwell->add_option("--u-list", bw.u_list, "comma-separated window lengths")
        ->delimiter(',');
    blackwell->add_option("--n-trials", bw.n_trials, "Monte Carlo trials per estimate");
    blackwell->add_option("--sigma-gate", bw.gate, "pass badge width in standard errors");
    blackwell->callback([&] {
        bw.common.load_config(blackwell);
        fill_text(blackwell, bw.common.config, "--dist", "dist", bw.dist);
        fill_text(blackwell, bw.common.config, "--strategy", "strategy", bw.strategy);
        fill_value(blackwell, bw.common.config, "--u", "u", bw.u);
        fill_value(blackwell, bw.common.config, "--u-list", "u_list", bw.u_list);
        fill_value(blackwell, bw.common.config, "--n-trials", "n_trials", bw.n_trials);
        bw.common.require_seed();
        if (bw.dist.empty()) throw std::invalid_argument("--dist is required");
        if (bw.strategy.empty()) throw std::invalid_argument("--strategy is required");
        if (bw.n_trials == 0) throw std::invalid_argument("--n-trials is required");
        std::vector<double> us = bw.u_list;
        if (us.empty() && bw.u > 0.0) us.push_back(bw.u);
        rc = run_blackwell(bw.common, bw.dist, bw.strategy, us, bw.n_trials, bw.gate);
    });

    // mu -------------------------------------------------------------------
    auto* mu_cmd = app.add_subcommand("mu", "estimate E[N(s)] on (0, s]");
    struct {
        CommonOpts common;
        std::string dist;
        double s = 0.0;
        std::uint64_t n_trials = 0;
        double gate = 5.0;
    } mu;
    mu.common.attach(mu_cmd);
    mu_cmd->add_option("--dist", mu.dist, "distribution JSON");
    mu_cmd->add_option("--s", mu.s, "prefix end");
    mu_cmd->add_option("--n-trials", mu.n_trials, "Monte Carlo trials");
    mu_cmd->add_option("--sigma-gate", mu.gate, "pass badge width in standard errors");
    mu_cmd->callback([&] {
        mu.common.load_config(mu_cmd);
        fill_text(mu_cmd, mu.common.config, "--dist", "dist", mu.dist);
        fill_value(mu_cmd, mu.common.config, "--s", "s", mu.s);
        fill_value(mu_cmd, mu.common.config, "--n-trials", "n_trials", mu.n_trials);
        mu.common.require_seed();
        if (mu.dist.empty()) throw std::invalid_argument("--dist is required");
        if (!(mu.s > 0.0)) throw std::invalid_argument("--s must be positive");
        if (mu.n_trials == 0) throw std::invalid_argument("--n-trials is required");
        rc = run_mu(mu.common, mu.dist, mu.s, mu.n_trials, mu.gate);
    });

    // residual ---------------------------------------------------------------
    auto* residual_cmd = app.add_subcommand("residual", "residual-life samples and KS check");
    struct {
        CommonOpts common;
        std::string dist, strategy;
        std::uint64_t n_trials = 0;
    } res;
    res.common.attach(residual_cmd);
    residual_cmd->add_option("--dist", res.dist, "distribution JSON");
    residual_cmd->add_option("--strategy", res.strategy, "window strategy JSON");
    residual_cmd->add_option("--n-trials", res.n_trials, "trials (one sample per trial)");
    residual_cmd->callback([&] {
        res.common.load_config(residual_cmd);
        fill_text(residual_cmd, res.common.config, "--dist", "dist", res.dist);
        fill_text(residual_cmd, res.common.config, "--strategy", "strategy", res.strategy);
        fill_value(residual_cmd, res.common.config, "--n-trials", "n_trials", res.n_trials);
        res.common.require_seed();
        if (res.dist.empty()) throw std::invalid_argument("--dist is required");
        if (res.strategy.empty()) throw std::invalid_argument("--strategy is required");
        if (res.n_trials == 0) throw std::invalid_argument("--n-trials is required");
        rc = run_residual(res.common, res.dist, res.strategy, res.n_trials);
    });

    // lengthbias ---------------------------------------------------------------
    auto* lb_cmd = app.add_subcommand("lengthbias", "law of the interval containing the start");
    struct {
        CommonOpts common;
        std::string dist, strategy;
        std::uint64_t n_trials = 0;
    } lb;
    lb.common.attach(lb_cmd);
    lb_cmd->add_option("--dist", lb.dist, "distribution JSON");
    lb_cmd->add_option("--strategy", lb.strategy, "window strategy JSON");
    lb_cmd->add_option("--n-trials", lb.n_trials, "trials");
    lb_cmd->callback([&] {
        lb.common.load_config(lb_cmd);
        fill_text(lb_cmd, lb.common.config, "--dist", "dist", lb.dist);
        fill_text(lb_cmd, lb.common.config, "--strategy", "strategy", lb.strategy);
        fill_value(lb_cmd, lb.common.config, "--n-trials", "n_trials", lb.n_trials);
        lb.common.require_seed();
        if (lb.dist.empty()) throw std::invalid_argument("--dist is required");
        if (lb.strategy.empty()) throw std::invalid_argument("--strategy is required");
        if (lb.n_trials == 0) throw std::invalid_argument("--n-trials is required");
        rc = run_lengthbias(lb.common, lb.dist, lb.strategy, lb.n_trials);
    });

    // mod1 ---------------------------------------------------------------
    auto* mod1_cmd = app.add_subcommand("mod1", "partial sums modulo one vs U[0,1)");
    struct {
        CommonOpts common;
        std::string dist;
        std::uint64_t n = 0, trials = 0;
    } m1;
    m1.common.attach(mod1_cmd);
    mod1_cmd->add_option("--dist", m1.dist, "distribution JSON");
    mod1_cmd->add_option("--n", m1.n, "summands per sample");
    mod1_cmd->add_option("--trials", m1.trials, "number of samples");
    mod1_cmd->callback([&] {
        m1.common.load_config(mod1_cmd);
        fill_text(mod1_cmd, m1.common.config, "--dist", "dist", m1.dist);
        fill_value(mod1_cmd, m1.common.config, "--n", "n", m1.n);
        fill_value(mod1_cmd, m1.common.config, "--trials", "trials", m1.trials);
        m1.common.require_seed();
        if (m1.dist.empty()) throw std::invalid_argument("--dist is required");
        if (m1.n == 0) throw std::invalid_argument("--n is required");
        if (m1.trials == 0) throw std::invalid_argument("--trials is required");
        rc = run_mod1(m1.common, m1.dist, m1.n, m1.trials);
    });

    // span ---------------------------------------------------------------
    auto* span_cmd = app.add_subcommand("span", "lattice structure and gamma scan");
    struct {
        CommonOpts common;
        std::string dist;
        int m_max = 64;
        double tol = 1e-9;
    } sp;
    sp.common.attach(span_cmd);
    span_cmd->add_option("--dist", sp.dist, "distribution JSON");
    span_cmd->add_option("--m-max", sp.m_max, "scan bound for gamma_m");
    span_cmd->add_option("--tol", sp.tol, "rational reconstruction tolerance");
    span_cmd->callback([&] {
        sp.common.load_config(span_cmd);
        fill_text(span_cmd, sp.common.config, "--dist", "dist", sp.dist);
        fill_value(span_cmd, sp.common.config, "--m-max", "m_max", sp.m_max);
        fill_value(span_cmd, sp.common.config, "--tol", "tol", sp.tol);
        sp.common.require_seed();
        if (sp.dist.empty()) throw std::invalid_argument("--dist is required");
        rc = run_span(sp.common, sp.dist, sp.m_max, sp.tol);
    });

    // zm -------------------------------------------------------------------
    auto* zm_cmd = app.add_subcommand("zm", "ceil(mU)-mU against U[0,1)");
    struct {
        CommonOpts common;
        std::vector<double> m_list;
        std::uint64_t n = 0;
    } zm;
    zm.common.attach(zm_cmd);
    zm_cmd->add_option("--m-list", zm.m_list, "comma-separated m values")->delimiter(',');
    zm_cmd->add_option("--n", zm.n, "samples per m");
    zm_cmd->callback([&] {
        zm.common.load_config(zm_cmd);
        fill_value(zm_cmd, zm.common.config, "--m-list", "m_list", zm.m_list);
        fill_value(zm_cmd, zm.common.config, "--n", "n", zm.n);
        zm.common.require_seed();
        if (zm.m_list.empty()) throw std::invalid_argument("--m-list is required");
        if (zm.n == 0) throw std::invalid_argument("--n is required");
        rc = run_zm(zm.common, zm.m_list, zm.n);
    });

    // gauss-mod1 -----------------------------------------------------------
    auto* gm_cmd = app.add_subcommand("gauss-mod1", "gaussian samples modulo one");
    struct {
        CommonOpts common;
        double sigma = 0.0, mu = 0.0;
        std::uint64_t n = 0;
    } gm;
    gm.common.attach(gm_cmd);
    gm_cmd->add_option("--sigma", gm.sigma, "standard deviation");
    gm_cmd->add_option("--mu", gm.mu, "mean");
    gm_cmd->add_option("--n", gm.n, "samples");
    gm_cmd->callback([&] {
        gm.common.load_config(gm_cmd);
        fill_value(gm_cmd, gm.common.config, "--sigma", "sigma", gm.sigma);
        fill_value(gm_cmd, gm.common.config, "--mu", "mu", gm.mu);
        fill_value(gm_cmd, gm.common.config, "--n", "n", gm.n);
        gm.common.require_seed();
        if (!(gm.sigma > 0.0)) throw std::invalid_argument("--sigma must be positive");
        if (gm.n == 0) throw std::invalid_argument("--n is required");
        rc = run_gauss_mod1(gm.common, gm.sigma, gm.mu, gm.n);
    });

    // transform ------------------------------------------------------------
    auto* tr_cmd = app.add_subcommand("transform", "determinization check per trial");
    struct {
        CommonOpts common;
        std::string dist, strategy;
        double u = 0.0;
        std::uint64_t n_trials = 0;
        double gate = 5.0;
    } tr;
    tr.common.attach(tr_cmd);
    tr_cmd->add_option("--dist", tr.dist, "distribution JSON");
    tr_cmd->add_option("--strategy", tr.strategy, "window strategy JSON");
    tr_cmd->add_option("--u", tr.u, "window length");
    tr_cmd->add_option("--n-trials", tr.n_trials, "trials");
    tr_cmd->add_option("--sigma-gate", tr.gate, "pass badge width in standard errors");
    tr_cmd->callback([&] {
        tr.common.load_config(tr_cmd);
        fill_text(tr_cmd, tr.common.config, "--dist", "dist", tr.dist);
        fill_text(tr_cmd, tr.common.config, "--strategy", "strategy", tr.strategy);
        fill_value(tr_cmd, tr.common.config, "--u", "u", tr.u);
        fill_value(tr_cmd, tr.common.config, "--n-trials", "n_trials", tr.n_trials);
        tr.common.require_seed();
        if (tr.dist.empty()) throw std::invalid_argument("--dist is required");
        if (tr.strategy.empty()) throw std::invalid_argument("--strategy is required");
        if (!(tr.u > 0.0)) throw std::invalid_argument("--u must be positive");
        if (tr.n_trials == 0) throw std::invalid_argument("--n-trials is required");
        rc = run_transform(tr.common, tr.dist, tr.strategy, tr.u, tr.n_trials, tr.gate);
    });

    // floor ------------------------------------------------------------------
    auto* floor_cmd = app.add_subcommand("floor", "E floor(c + eta - U) estimate vs c-1");
    struct {
        CommonOpts common;
        double c = 0.0;
        std::uint64_t n = 0;
        std::string noise;
        double gate = 5.0;
    } fl;
    fl.common.attach(floor_cmd);
    floor_cmd->add_option("--c", fl.c, "offset c");
    floor_cmd->add_option("--n", fl.n, "draws");
    floor_cmd->add_option("--noise", fl.noise, "optional zero-mean noise JSON");
    floor_cmd->add_option("--sigma-gate", fl.gate, "pass badge width in standard errors");
    floor_cmd->callback([&] {
        fl.common.load_config(floor_cmd);
        fill_value(floor_cmd, fl.common.config, "--c", "c", fl.c);
        fill_value(floor_cmd, fl.common.config, "--n", "n", fl.n);
        fill_text(floor_cmd, fl.common.config, "--noise", "noise", fl.noise);
        fl.common.require_seed();
        if (floor_cmd->get_option("--c")->count() == 0 && !fl.common.config.contains("c")) {
            throw std::invalid_argument("--c is required");
        }
        if (fl.n == 0) throw std::invalid_argument("--n is required");
        rc = run_floor(fl.common, fl.c, fl.n, fl.noise, fl.gate);
    });

    // listings ---------------------------------------------------------------
    auto* l1_cmd = app.add_subcommand("listing1", "bimodal renewal-theorem demo, fixed parameters");
    struct {
        CommonOpts common;
    } l1;
    l1.common.attach(l1_cmd);
    l1_cmd->callback([&] {
        l1.common.load_config(l1_cmd);
        l1.common.require_seed();
        rc = run_listing1(l1.common);
    });

    auto* l2_cmd = app.add_subcommand("listing2", "floor-expectation demo");
    struct {
        CommonOpts common;
        double c = 3.2;
        std::uint64_t n = 10000;
    } l2;
    l2.common.attach(l2_cmd);
    l2_cmd->add_option("--c", l2.c, "offset c (default 3.2)");
    l2_cmd->add_option("--n", l2.n, "draws (default 10000)");
    l2_cmd->callback([&] {
        l2.common.load_config(l2_cmd);
        fill_value(l2_cmd, l2.common.config, "--c", "c", l2.c);
        fill_value(l2_cmd, l2.common.config, "--n", "n", l2.n);
        l2.common.require_seed();
        rc = run_listing2(l2.common, l2.c, l2.n);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const NonZeroMeanNoise& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "runtime error: %s\n", e.what());
        return 3;
    }
    return rc;
}
