#pragma once

#include "msol/engine.hpp"

#include <string>

namespace msol {

// Loads a campaign config file (TOML subset, schema in docs/config.md) and
// reads the referenced sources. Relative paths resolve against the config
// file's directory. Throws std::runtime_error / std::invalid_argument with
// the offending path and reason.
CampaignConfig load_campaign_config(const std::string& path);

// Producer-set flags from a comma-separated list; "" clears everything
// (baseline mode). Unknown names throw.
std::array<bool, kNumProducers> parse_producers(const std::string& list);
std::vector<std::string> producer_names(const std::array<bool, kNumProducers>& enabled);

}  // namespace msol
