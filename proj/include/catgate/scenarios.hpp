#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace catgate {

inline constexpr int kSchemaVersion = 1;

/// One canned experiment. `params` holds overrides only; anything missing
/// falls back to the scenario's built-in defaults.
struct ScenarioConfig {
    std::string id;
    nlohmann::json params = nlohmann::json::object();
    std::filesystem::path output_dir = "scenario_out";
};

const std::vector<std::string>& scenario_ids();

/// Default parameter set of a scenario. Keys ending in _mhz are 2pi x MHz
/// frequencies and may be given as the matching _rad key (rad/us) instead;
/// keys ending in _per_us are plain rates.
nlohmann::json scenario_defaults(const std::string& id);

/// Every key any scenario accepts, with the default of its first use.
nlohmann::json all_scenario_keys();

/// Merges overrides into the defaults. Unknown keys, type mismatches and a
/// key given in both unit forms raise ConfigError.
nlohmann::json resolve_params(const std::string& id, const nlohmann::json& overrides);

/// {"scenario": id, "output_dir": path, "params": {...}}; other keys rejected.
ScenarioConfig parse_scenario_config(const nlohmann::json& j);
ScenarioConfig load_scenario_config(const std::filesystem::path& path);

struct ManifestEntry {
    std::string file;  // relative to the output directory
    std::string sha256;
    std::uintmax_t bytes;
};

struct ScenarioResult {
    std::string id;
    std::filesystem::path output_dir;
    std::vector<ManifestEntry> files;
    nlohmann::json summary;
};

struct RunOptions {
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Writes the scenario's CSV/JSON files, summary.json and manifest.json.
/// On failure the files written so far are removed and the error is
/// rethrown with the scenario id prefixed, keeping its type.
ScenarioResult run_scenario(const ScenarioConfig& config, const RunOptions& opts = {});

std::string sha256_file(const std::filesystem::path& path);

}  // namespace catgate
