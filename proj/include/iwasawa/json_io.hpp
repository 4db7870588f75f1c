#pragma once

#include <json.hpp>

#include "iwasawa/gamma.hpp"
#include "iwasawa/log_stalk.hpp"
#include "iwasawa/measure.hpp"
#include "iwasawa/moments.hpp"
#include "iwasawa/tower.hpp"

namespace iwasawa {

// Wire formats. All numbers are decimal integers; coordinates and
// coefficients are reduced on ingestion. Malformed input throws
// std::invalid_argument with a message naming the offending field.
//
//   measure: {"p": int, "r": int, "d": int,
//             "entries": [{"x": [int, ...], "c": int}, ...]}
//   series:  {"p": int, "r": int, "coeffs": [int, ...]}
//   gamma series: {"p": int, "r": int, "d": int, "cutoff": int,
//                  "components": [{"k": int, "terms": [{"i": [...], "c": int}]}]}
//   tower:   {"levels": [{"p": int, "r": int, "n": int}, ...],
//             "transitions": [[[int]]]}

FiniteMeasure measure_from_json(const nlohmann::json& j);
nlohmann::json measure_to_json(const FiniteMeasure& mu);

nlohmann::json series_to_json(const PowerSeriesTrunc& s);
nlohmann::json laplace_to_json(std::uint64_t p, std::uint32_t r,
                               const std::vector<Residue>& coeffs);

nlohmann::json gamma_element_to_json(const GammaElement& g);
nlohmann::json gamma_series_to_json(const GammaSeries& s);
nlohmann::json log_element_to_json(const LogStalkElement& a);

FiniteTower tower_from_json(const nlohmann::json& j);
nlohmann::json verdict_to_json(const MlVerdict& v);

}  // namespace iwasawa
