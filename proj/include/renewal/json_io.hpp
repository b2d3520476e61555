#pragma once

#include <json.hpp>

#include "renewal/determinize.hpp"
#include "renewal/distributions.hpp"
#include "renewal/estimator.hpp"
#include "renewal/floor_lemmas.hpp"
#include "renewal/stats.hpp"
#include "renewal/uniformity.hpp"
#include "renewal/window.hpp"

namespace renewal {

// Wire formats used by the CLI and report files. Field names mirror the
// variant and field names, lower snake case, e.g.
//   {"kind":"discrete_atoms","atoms":[[0,0.5],[20,0.5]]}
//   {"kind":"large_uniform","theta":1000}

nlohmann::json to_json(const DistributionSpec& spec);
DistributionSpec distribution_from_json(const nlohmann::json& j);
DistributionSpec distribution_from_string(const std::string& text);

nlohmann::json to_json(const WindowStrategy& strat);
WindowStrategy strategy_from_json(const nlohmann::json& j);
WindowStrategy strategy_from_string(const std::string& text);

NoiseSpec noise_from_json(const nlohmann::json& j);
NoiseSpec noise_from_string(const std::string& text);

nlohmann::json to_json(const KsReport& r);
nlohmann::json to_json(const CharCoefficient& c);
nlohmann::json to_json(const SpanReport& r);
nlohmann::json to_json(const CountEstimate& e);

}  // namespace renewal
