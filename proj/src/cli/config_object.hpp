#pragma once

#include "json_render.hpp"
#include "weylmech/cli/config.hpp"

namespace weylmech::cli {

/// The config with every default filled in, as echoed in manifests.
Json config_object(const ScenarioConfig& cfg);

}  // namespace weylmech::cli
