#include "fqhe/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fqhe {

using nlohmann::json;

void SweepConfig::validate() const {
  try {
    base.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("/", e.what());
  }
  if (a_grid_nm.empty()) {
    throw ConfigError("/a_grid", "half-width grid is empty");
  }
  for (std::size_t i = 0; i < a_grid_nm.size(); ++i) {
    if (!(a_grid_nm[i] > 0.0) || !std::isfinite(a_grid_nm[i])) {
      throw ConfigError("/a_list_nm/" + std::to_string(i), "half-width must be positive");
    }
  }
  if (alpha_grid.empty()) {
    throw ConfigError("/alpha_list", "alpha grid is empty");
  }
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    if (!(alpha_grid[i] > 0.0 && alpha_grid[i] <= 2.0)) {
      throw ConfigError("/alpha_list/" + std::to_string(i),
                        "alpha must lie in (0, 2], got " + std::to_string(alpha_grid[i]));
    }
  }
}

std::vector<double> linear_grid(double min, double max, int count) {
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    grid[i] = count == 1 ? min : min + (max - min) * i / (count - 1);
  }
  if (count > 1) {
    grid.back() = max;
  }
  return grid;
}

std::vector<double> log_grid(double min, double max, int count) {
  std::vector<double> grid(static_cast<std::size_t>(count));
  const double lo = std::log(min);
  const double hi = std::log(max);
  for (int i = 0; i < count; ++i) {
    grid[i] = count == 1 ? min : std::exp(lo + (hi - lo) * i / (count - 1));
  }
  grid.front() = min;
  if (count > 1) {
    grid.back() = max;
  }
  return grid;
}

SweepConfig default_sweep_config() {
  SweepConfig cfg;
  cfg.base.well.mass = constants::electron_mass;
  cfg.base.well.chi = 0.5;
  cfg.base.hot_temperature = 2.0;
  cfg.base.cold_temperature = 1.0;
  cfg.a_grid_nm = log_grid(0.5, 200.0, 200);
  cfg.alpha_grid = {2.0, 1.8, 1.5, 1.2};
  return cfg;
}

namespace {

double number_at(const json& doc, const char* key, const std::string& path) {
  const json& v = doc.at(key);
  if (!v.is_number()) {
    throw ConfigError(path, "expected a number");
  }
  return v.get<double>();
}

std::int64_t integer_at(const json& doc, const char* key, const std::string& path) {
  const json& v = doc.at(key);
  if (!v.is_number_integer()) {
    throw ConfigError(path, "expected an integer");
  }
  return v.get<std::int64_t>();
}

std::vector<double> number_list(const json& doc, const char* key, const std::string& path) {
  const json& v = doc.at(key);
  if (!v.is_array()) {
    throw ConfigError(path, "expected an array of numbers");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) {
      throw ConfigError(path + "/" + std::to_string(i), "expected a number");
    }
    out.push_back(v[i].get<double>());
  }
  return out;
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& prefix) {
  for (const auto& [key, value] : obj.items()) {
    if (!known.contains(key)) {
      throw ConfigError(prefix + "/" + key, "unknown key");
    }
  }
}

std::vector<double> parse_a_grid(const json& grid) {
  if (!grid.is_object()) {
    throw ConfigError("/a_grid", "expected an object");
  }
  reject_unknown(grid, {"min_nm", "max_nm", "count", "spacing"}, "/a_grid");
  for (const char* key : {"min_nm", "max_nm", "count"}) {
    if (!grid.contains(key)) {
      throw ConfigError(std::string("/a_grid/") + key, "missing required key");
    }
  }
  const double min = number_at(grid, "min_nm", "/a_grid/min_nm");
  const double max = number_at(grid, "max_nm", "/a_grid/max_nm");
  const std::int64_t count = integer_at(grid, "count", "/a_grid/count");
  std::string spacing = "log";
  if (grid.contains("spacing")) {
    if (!grid["spacing"].is_string()) {
      throw ConfigError("/a_grid/spacing", "expected \"linear\" or \"log\"");
    }
    spacing = grid["spacing"].get<std::string>();
  }
  if (!(min > 0.0)) {
    throw ConfigError("/a_grid/min_nm", "must be positive");
  }
  if (!(max >= min)) {
    throw ConfigError("/a_grid/max_nm", "must be >= min_nm");
  }
  if (count < 1 || count > 1'000'000) {
    throw ConfigError("/a_grid/count", "must lie in [1, 1000000]");
  }
  if (spacing == "linear") {
    return linear_grid(min, max, static_cast<int>(count));
  }
  if (spacing == "log") {
    return log_grid(min, max, static_cast<int>(count));
  }
  throw ConfigError("/a_grid/spacing", "expected \"linear\" or \"log\", got \"" + spacing + "\"");
}

} // namespace

SweepConfig parse_config(std::string_view text) {
  SweepConfig cfg = default_sweep_config();
  if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) {
    return cfg;
  }

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("/", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("/", "expected a JSON object");
  }
  reject_unknown(doc,
                 {"mass_kg", "chi", "t_hot_k", "t_cold_k", "tolerance", "max_terms", "a_grid",
                  "a_list_nm", "alpha_list", "output_path"},
                 "");

  if (doc.contains("mass_kg")) {
    cfg.base.well.mass = number_at(doc, "mass_kg", "/mass_kg");
    if (!(cfg.base.well.mass > 0.0)) {
      throw ConfigError("/mass_kg", "must be positive");
    }
  }
  if (doc.contains("chi")) {
    cfg.base.well.chi = number_at(doc, "chi", "/chi");
    if (!(cfg.base.well.chi > 0.0)) {
      throw ConfigError("/chi", "must be positive");
    }
  }
  if (doc.contains("t_hot_k")) {
    cfg.base.hot_temperature = number_at(doc, "t_hot_k", "/t_hot_k");
    if (!(cfg.base.hot_temperature > 0.0)) {
      throw ConfigError("/t_hot_k", "must be positive");
    }
  }
  if (doc.contains("t_cold_k")) {
    cfg.base.cold_temperature = number_at(doc, "t_cold_k", "/t_cold_k");
    if (!(cfg.base.cold_temperature > 0.0)) {
      throw ConfigError("/t_cold_k", "must be positive");
    }
  }
  if (cfg.base.cold_temperature > cfg.base.hot_temperature) {
    throw ConfigError("/t_cold_k", "cold bath must not be hotter than t_hot_k");
  }
  if (doc.contains("tolerance")) {
    cfg.base.series.tolerance = number_at(doc, "tolerance", "/tolerance");
    if (!(cfg.base.series.tolerance > 0.0 && cfg.base.series.tolerance <= 1e-6)) {
      throw ConfigError("/tolerance", "must lie in (0, 1e-6]");
    }
  }
  if (doc.contains("max_terms")) {
    cfg.base.series.max_terms = integer_at(doc, "max_terms", "/max_terms");
    if (cfg.base.series.max_terms < 1) {
      throw ConfigError("/max_terms", "must be >= 1");
    }
  }
  if (doc.contains("a_grid") && doc.contains("a_list_nm")) {
    throw ConfigError("/a_list_nm", "give either a_grid or a_list_nm, not both");
  }
  if (doc.contains("a_grid")) {
    cfg.a_grid_nm = parse_a_grid(doc["a_grid"]);
  }
  if (doc.contains("a_list_nm")) {
    cfg.a_grid_nm = number_list(doc, "a_list_nm", "/a_list_nm");
    for (std::size_t i = 0; i < cfg.a_grid_nm.size(); ++i) {
      if (!(cfg.a_grid_nm[i] > 0.0)) {
        throw ConfigError("/a_list_nm/" + std::to_string(i), "half-width must be positive");
      }
    }
  }
  if (doc.contains("alpha_list")) {
    cfg.alpha_grid = number_list(doc, "alpha_list", "/alpha_list");
  }
  if (doc.contains("output_path")) {
    if (!doc["output_path"].is_string()) {
      throw ConfigError("/output_path", "expected a string");
    }
    cfg.output_path = doc["output_path"].get<std::string>();
  }

  cfg.validate();
  return cfg;
}

SweepConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("/", "cannot open config file " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

} // namespace fqhe
