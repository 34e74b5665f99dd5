#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "table.hpp"

namespace adslen::cli {

// Command-line overrides of config keys.
struct Overrides {
    std::optional<int> radius;
    std::optional<int> density;
    std::optional<std::uint64_t> seed;
};

struct Outcome {
    Table table;
    std::vector<std::string> failures;  // one line per failing configuration row
    std::vector<std::string> warnings;
    std::string x_column;  // abscissa for plots
    std::string series;    // column separating plot lines
};

const std::vector<std::string>& scenario_names();

// Throws ConfigError for unusable settings.
Outcome run_scenario(const std::string& name, const Config::Section& sec, const Overrides& ov);

}  // namespace adslen::cli
