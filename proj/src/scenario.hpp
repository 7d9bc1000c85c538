#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "types.hpp"

namespace riscov {

// Flat key-value scenario files with dotted sections (radio., panel., site.,
// solver.). Omitted keys keep their defaults; '#' starts a comment. Power is
// given in watts, noise in dBm, sensitivity/margin/threshold in dB, angles in
// radians. The threshold is derived from sensitivity and margin unless given
// explicitly, in which case it must agree within 0.01 dB.

Scenario default_scenario();

// Parse a scenario from text. Advisory messages (for example element sizes
// above the wavelength) are appended to *warnings when provided.
Scenario parse_scenario(std::string_view text, std::vector<std::string>* warnings = nullptr);

Scenario load_scenario(const std::string& path, std::vector<std::string>* warnings = nullptr);

// Single-key set/get in file units. Setting sensitivity or margin re-derives
// the threshold; setting the threshold checks it against the current pair.
void scenario_set(Scenario& scn, const std::string& key, double value);
void scenario_set_string(Scenario& scn, const std::string& key, const std::string& value);
double scenario_get(const Scenario& scn, const std::string& key);

// Fully resolved configuration as ordered (key, value) pairs; parsing the
// echo reproduces the scenario.
std::vector<std::pair<std::string, std::string>> scenario_echo(const Scenario& scn);

}  // namespace riscov
