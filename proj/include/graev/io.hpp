#pragma once

#include <string>

#include <json.hpp>

#include "graev/harness.hpp"
#include "graev/space.hpp"
#include "graev/subgroup.hpp"

namespace graev {

// Space file format (JSON), two accepted shapes:
//   {"points": ["a","b","c"], "matrix": [["0","1/4","1/2"], ...]}
//   {"dendrogram": {"height":"1/2","children":[{"height":"1/4",
//                    "children":["a","b"]}, "c"]}}
// Rationals are "p/q" or integer strings. Leaves may be bare name strings.

UltraMetricSpace space_from_json(const nlohmann::json& j);
UltraMetricSpace load_space(const std::string& path);

nlohmann::ordered_json space_to_json(const UltraMetricSpace& space);
/// Canonical bytes: ordered keys, two-space indent, trailing newline.
/// Identical spaces serialize to identical bytes.
std::string format_space(const UltraMetricSpace& space);

nlohmann::ordered_json report_to_json(const CampaignReport& report);
nlohmann::ordered_json ball_report_to_json(const BallCheckReport& report,
                                           const UltraMetricSpace& space);

}  // namespace graev
