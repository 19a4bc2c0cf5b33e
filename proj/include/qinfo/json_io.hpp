#pragma once

#include <string>

#include <json.hpp>

#include "qinfo/bound_chain.hpp"
#include "qinfo/campaign.hpp"
#include "qinfo/checks.hpp"
#include "qinfo/simplex.hpp"

namespace qinfo {

using nlohmann::json;

/// {"weights":[...]}
json to_json(const ProbabilityDistribution& p);
/// Accepts {"weights":[...]}. Throws ParseError on shape, validation errors
/// from ProbabilityDistribution::validate.
ProbabilityDistribution distribution_from_json(const json& j);
/// Throws ParseError when the file cannot be read or parsed.
ProbabilityDistribution read_distribution(const std::string& path);

json to_json(const BoundChain& chain);
json to_json(const CheckInstance& inst);
CheckInstance instance_from_json(const json& j);
json to_json(const CampaignConfig& cfg);
/// Runtimes are included only when timing is set, so the default body is a
/// pure function of the configuration.
json to_json(const CampaignReport& report, bool timing = false);

/// Parses "lo..hi". Throws ParseError.
Interval parse_interval(const std::string& text);

}  // namespace qinfo
