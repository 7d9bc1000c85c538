#include "scenario.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace riscov {

namespace {

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double parse_number(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0') {
    throw Error(Status::ParseFailure, "scenario: bad number for " + key + ": '" + value + "'");
  }
  return v;
}

// Shortest representation that parses back to the same double.
std::string format_number(double v) {
  char buf[40];
  for (int precision : {12, 17}) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

struct NumericKey {
  const char* name;
  std::function<void(Scenario&, double)> set;
  std::function<double(const Scenario&)> get;
};

int to_count(const std::string& key, double v) {
  const double r = std::round(v);
  if (std::abs(v - r) > 1e-9 || !(r >= 0.0) || r > 1e9) {
    throw Error(Status::ParseFailure, "scenario: " + key + " must be a non-negative integer");
  }
  return static_cast<int>(r);
}

const std::vector<NumericKey>& numeric_keys() {
  static const std::vector<NumericKey> keys = {
      {"radio.power_w", [](Scenario& s, double v) { s.radio.power_w = v; },
       [](const Scenario& s) { return s.radio.power_w; }},
      {"radio.noise_dbm", [](Scenario& s, double v) { s.radio.noise_w = dbm_to_watt(v); },
       [](const Scenario& s) { return watt_to_dbm(s.radio.noise_w); }},
      {"radio.wavelength_m", [](Scenario& s, double v) { s.radio.wavelength_m = v; },
       [](const Scenario& s) { return s.radio.wavelength_m; }},
      {"radio.antenna_gain", [](Scenario& s, double v) { s.radio.antenna_gain = v; },
       [](const Scenario& s) { return s.radio.antenna_gain; }},
      {"radio.pathloss_exponent",
       [](Scenario& s, double v) { s.radio.pathloss_exponent = v; },
       [](const Scenario& s) { return s.radio.pathloss_exponent; }},
      {"radio.sensitivity_db",
       [](Scenario& s, double v) {
         s.radio.sensitivity = db_to_linear(v);
         s.radio.threshold = s.radio.sensitivity * s.radio.margin;
       },
       [](const Scenario& s) { return linear_to_db(s.radio.sensitivity); }},
      {"radio.margin_db",
       [](Scenario& s, double v) {
         s.radio.margin = db_to_linear(v);
         s.radio.threshold = s.radio.sensitivity * s.radio.margin;
       },
       [](const Scenario& s) { return linear_to_db(s.radio.margin); }},
      {"radio.threshold_db",
       [](Scenario& s, double v) {
         const double derived = linear_to_db(s.radio.sensitivity * s.radio.margin);
         if (std::abs(v - derived) > 0.01 + 1e-9) {
           throw Error(Status::ParseFailure,
                       "scenario: radio.threshold_db inconsistent with sensitivity + margin "
                       "(expected " + format_number(derived) + " dB)");
         }
         s.radio.threshold = db_to_linear(v);
       },
       [](const Scenario& s) { return linear_to_db(s.radio.threshold); }},
      {"panel.m", [](Scenario& s, double v) { s.panel.count_m = to_count("panel.m", v); },
       [](const Scenario& s) { return static_cast<double>(s.panel.count_m); }},
      {"panel.n", [](Scenario& s, double v) { s.panel.count_n = to_count("panel.n", v); },
       [](const Scenario& s) { return static_cast<double>(s.panel.count_n); }},
      {"panel.element_width_m",
       [](Scenario& s, double v) { s.panel.element_width_m = v; },
       [](const Scenario& s) { return s.panel.element_width_m; }},
      {"panel.element_height_m",
       [](Scenario& s, double v) { s.panel.element_height_m = v; },
       [](const Scenario& s) { return s.panel.element_height_m; }},
      {"site.bs_height_m", [](Scenario& s, double v) { s.site.bs_height_m = v; },
       [](const Scenario& s) { return s.site.bs_height_m; }},
      {"site.ue_height_m", [](Scenario& s, double v) { s.site.ue_height_m = v; },
       [](const Scenario& s) { return s.site.ue_height_m; }},
      {"site.ris_height_m", [](Scenario& s, double v) { s.site.ris_height_m = v; },
       [](const Scenario& s) { return s.site.ris_height_m; }},
      {"site.distance_m", [](Scenario& s, double v) { s.site.horizontal_distance_m = v; },
       [](const Scenario& s) { return s.site.horizontal_distance_m; }},
      {"site.orientation_rad", [](Scenario& s, double v) { s.site.orientation_rad = v; },
       [](const Scenario& s) { return s.site.orientation_rad; }},
      {"solver.k", [](Scenario& s, double v) { s.solver.quad_intervals = to_count("solver.k", v); },
       [](const Scenario& s) { return static_cast<double>(s.solver.quad_intervals); }},
      {"solver.root_tol", [](Scenario& s, double v) { s.solver.root_tol = v; },
       [](const Scenario& s) { return s.solver.root_tol; }},
      {"solver.d_max_m", [](Scenario& s, double v) { s.solver.radius_ceiling_m = v; },
       [](const Scenario& s) { return s.solver.radius_ceiling_m; }},
      {"solver.n_phi",
       [](Scenario& s, double v) { s.solver.boundary_samples = to_count("solver.n_phi", v); },
       [](const Scenario& s) { return static_cast<double>(s.solver.boundary_samples); }},
  };
  return keys;
}

// Execution knob, deliberately kept out of the echo: results must not depend
// on it, so reproducibility-relevant metadata must not either.
const NumericKey& threads_key() {
  static const NumericKey key = {
      "solver.threads", [](Scenario& s, double v) { s.threads = to_count("solver.threads", v); },
      [](const Scenario& s) { return static_cast<double>(s.threads); }};
  return key;
}

const NumericKey* find_numeric(const std::string& key) {
  for (const NumericKey& k : numeric_keys()) {
    if (key == k.name) return &k;
  }
  if (key == threads_key().name) return &threads_key();
  return nullptr;
}

void set_string_key(Scenario& scn, const std::string& key, const std::string& value) {
  if (key == "solver.incidence_mode") {
    if (value == "3d") {
      scn.incidence_mode = IncidenceMode::Full3d;
    } else if (value == "horizontal") {
      scn.incidence_mode = IncidenceMode::Horizontal;
    } else {
      throw Error(Status::ParseFailure,
                  "scenario: solver.incidence_mode must be '3d' or 'horizontal'");
    }
    return;
  }
  if (key == "solver.mc_mode") {
    if (value == "exact") {
      scn.mc_mode = PathlossMode::ExactElementwise;
    } else if (value == "common") {
      scn.mc_mode = PathlossMode::CommonPathloss;
    } else {
      throw Error(Status::ParseFailure, "scenario: solver.mc_mode must be 'exact' or 'common'");
    }
    return;
  }
  throw Error(Status::ParseFailure, "scenario: unknown key '" + key + "'");
}

bool is_string_key(const std::string& key) {
  return key == "solver.incidence_mode" || key == "solver.mc_mode";
}

void advisory_checks(const Scenario& scn, std::vector<std::string>* warnings) {
  if (!warnings) return;
  if (scn.panel.element_width_m > scn.radio.wavelength_m ||
      scn.panel.element_height_m > scn.radio.wavelength_m) {
    warnings->push_back(
        "panel elements are larger than the wavelength; the element model "
        "assumes sub-wavelength sizes");
  }
}

}  // namespace

Scenario default_scenario() { return Scenario{}; }

Scenario parse_scenario(std::string_view text, std::vector<std::string>* warnings) {
  Scenario scn = default_scenario();
  std::vector<std::pair<std::string, std::string>> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw Error(Status::ParseFailure,
                  "scenario: line " + std::to_string(line_no) + " is not 'key = value'");
    }
    entries.emplace_back(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
  }

  // Threshold consistency depends on sensitivity and margin, so apply the
  // explicit threshold last regardless of file order.
  std::string threshold_value;
  try {
    for (const auto& [key, value] : entries) {
      if (key == "radio.threshold_db") {
        threshold_value = value;
        continue;
      }
      if (is_string_key(key)) {
        set_string_key(scn, key, value);
      } else if (const NumericKey* nk = find_numeric(key)) {
        nk->set(scn, parse_number(key, value));
      } else {
        throw Error(Status::ParseFailure, "scenario: unknown key '" + key + "'");
      }
    }
    if (!threshold_value.empty()) {
      find_numeric("radio.threshold_db")
          ->set(scn, parse_number("radio.threshold_db", threshold_value));
    }
    scn.validate();
  } catch (const Error& e) {
    if (e.status() == Status::ParseFailure) throw;
    throw Error(Status::ParseFailure, std::string("scenario: ") + e.what());
  }

  advisory_checks(scn, warnings);
  return scn;
}

Scenario load_scenario(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Status::ParseFailure, "scenario: cannot open '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str(), warnings);
}

void scenario_set(Scenario& scn, const std::string& key, double value) {
  if (const NumericKey* nk = find_numeric(key)) {
    Scenario candidate = scn;
    nk->set(candidate, value);
    candidate.validate();
    scn = candidate;
    return;
  }
  throw Error(Status::InvalidArgument, "scenario: unknown numeric key '" + key + "'");
}

void scenario_set_string(Scenario& scn, const std::string& key, const std::string& value) {
  Scenario candidate = scn;
  set_string_key(candidate, key, value);
  candidate.validate();
  scn = candidate;
}

double scenario_get(const Scenario& scn, const std::string& key) {
  if (const NumericKey* nk = find_numeric(key)) return nk->get(scn);
  throw Error(Status::InvalidArgument, "scenario: unknown numeric key '" + key + "'");
}

std::vector<std::pair<std::string, std::string>> scenario_echo(const Scenario& scn) {
  std::vector<std::pair<std::string, std::string>> echo;
  for (const NumericKey& k : numeric_keys()) {
    echo.emplace_back(k.name, format_number(k.get(scn)));
  }
  echo.emplace_back("solver.incidence_mode",
                    scn.incidence_mode == IncidenceMode::Full3d ? "3d" : "horizontal");
  echo.emplace_back("solver.mc_mode",
                    scn.mc_mode == PathlossMode::ExactElementwise ? "exact" : "common");
  return echo;
}

}  // namespace riscov
