#pragma once

#include "swarmsearch/world.hpp"

#include <filesystem>
#include <string>

namespace swarmsearch {

/// Parse a scenario document (JSON). Unknown fields are rejected.
/// Throws std::invalid_argument on malformed input.
Scenario scenario_from_json(const std::string& text);

/// Serialize a scenario to JSON (two-space indent, stable field order).
std::string scenario_to_json(const Scenario& scenario);

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

}  // namespace swarmsearch
