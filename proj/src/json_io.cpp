#include "renewal/json_io.hpp"

#include <stdexcept>

namespace renewal {

namespace {

using nlohmann::json;

double get_num(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw std::invalid_argument(std::string("json: missing numeric field '") + key + "'");
    }
    return j[key].get<double>();
}

std::string get_kind(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw std::invalid_argument("json: expected an object with a 'kind' string");
    }
    return j["kind"].get<std::string>();
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("json: parse error in '" + text + "'");
    return j;
}

}  // namespace

json to_json(const DistributionSpec& spec) {
    json j;
    j["kind"] = spec.kind();
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Deterministic>) {
                j["t"] = p.t;
            } else if constexpr (std::is_same_v<T, Exponential>) {
                j["rate"] = p.rate;
            } else if constexpr (std::is_same_v<T, UniformInterval>) {
                j["a"] = p.a;
                j["b"] = p.b;
            } else if constexpr (std::is_same_v<T, LogNormal>) {
                j["mu"] = p.mu;
                j["sigma"] = p.sigma;
            } else if constexpr (std::is_same_v<T, GammaLaw>) {
                j["shape"] = p.shape;
                j["scale"] = p.scale;
            } else {
                json atoms = json::array();
                for (const auto& a : p.atoms) atoms.push_back({a.value, a.prob});
                j["atoms"] = atoms;
            }
        },
        spec.variant());
    return j;
}

DistributionSpec distribution_from_json(const json& j) {
    const std::string kind = get_kind(j);
    if (kind == "deterministic") return DistributionSpec::deterministic(get_num(j, "t"));
    if (kind == "exponential") return DistributionSpec::exponential(get_num(j, "rate"));
    if (kind == "uniform_interval") {
        return DistributionSpec::uniform_interval(get_num(j, "a"), get_num(j, "b"));
    }
    if (kind == "log_normal") {
        return DistributionSpec::log_normal(get_num(j, "mu"), get_num(j, "sigma"));
    }
    if (kind == "gamma") return DistributionSpec::gamma(get_num(j, "shape"), get_num(j, "scale"));
    if (kind == "discrete_atoms") {
        if (!j.contains("atoms") || !j["atoms"].is_array()) {
            throw std::invalid_argument("json: discrete_atoms needs an 'atoms' array");
        }
        std::vector<Atom> atoms;
        for (const auto& a : j["atoms"]) {
            if (!a.is_array() || a.size() != 2) {
                throw std::invalid_argument("json: each atom must be a [value, prob] pair");
            }
            atoms.push_back(Atom{a[0].get<double>(), a[1].get<double>()});
        }
        return DistributionSpec::discrete_atoms(std::move(atoms));
    }
    throw std::invalid_argument("json: unknown distribution kind '" + kind + "'");
}

DistributionSpec distribution_from_string(const std::string& text) {
    return distribution_from_json(parse(text));
}

json to_json(const WindowStrategy& strat) {
    json j;
    j["kind"] = strat.kind();
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, FixedStart>) {
                j["m"] = p.m;
            } else if constexpr (std::is_same_v<T, LargeUniform>) {
                j["theta"] = p.theta;
            } else {
                j["theta"] = p.theta;
                j["c"] = p.c;
            }
        },
        strat.variant());
    return j;
}

WindowStrategy strategy_from_json(const json& j) {
    const std::string kind = get_kind(j);
    if (kind == "fixed_start") return WindowStrategy::fixed_start(get_num(j, "m"));
    if (kind == "large_uniform") return WindowStrategy::large_uniform(get_num(j, "theta"));
    if (kind == "deferred_uniform") {
        return WindowStrategy::deferred_uniform(get_num(j, "theta"), get_num(j, "c"));
    }
    throw std::invalid_argument("json: unknown strategy kind '" + kind + "'");
}

WindowStrategy strategy_from_string(const std::string& text) {
    return strategy_from_json(parse(text));
}

NoiseSpec noise_from_json(const json& j) {
    const std::string kind = get_kind(j);
    if (kind == "gaussian") return NoiseSpec::gaussian(get_num(j, "sigma"));
    if (kind == "two_point") return NoiseSpec::two_point(get_num(j, "magnitude"));
    if (kind == "atoms") {
        if (!j.contains("atoms") || !j["atoms"].is_array()) {
            throw std::invalid_argument("json: atoms noise needs an 'atoms' array");
        }
        std::vector<SignedAtom> atoms;
        for (const auto& a : j["atoms"]) {
            if (!a.is_array() || a.size() != 2) {
                throw std::invalid_argument("json: each atom must be a [value, prob] pair");
            }
            atoms.push_back(SignedAtom{a[0].get<double>(), a[1].get<double>()});
        }
        return NoiseSpec::atoms(std::move(atoms));
    }
    throw std::invalid_argument("json: unknown noise kind '" + kind + "'");
}

NoiseSpec noise_from_string(const std::string& text) {
    return noise_from_json(parse(text));
}

json to_json(const KsReport& r) {
    return json{{"statistic", r.statistic}, {"n", r.n}, {"threshold", r.threshold}, {"pass", r.pass}};
}

json to_json(const CharCoefficient& c) {
    return json{{"m", c.m}, {"re", c.value.real()}, {"im", c.value.imag()}, {"modulus", c.modulus}};
}

json to_json(const SpanReport& r) {
    json j;
    j["is_arithmetic"] = r.is_arithmetic;
    j["span"] = r.span ? json(*r.span) : json(nullptr);
    j["shift_theta"] = r.shift_theta ? json(*r.shift_theta) : json(nullptr);
    j["tol"] = r.tol;
    json w = json::array();
    for (const auto& c : r.witnesses) w.push_back(to_json(c));
    j["witnesses"] = w;
    return j;
}

json to_json(const CountEstimate& e) {
    return json{{"mean", e.mean},       {"stderr", e.stderr_mean}, {"n_trials", e.n_trials},
                {"ci95_lo", e.ci95_lo}, {"ci95_hi", e.ci95_hi},    {"target", e.target}};
}

}  // namespace renewal
