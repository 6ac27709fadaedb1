#include "sfk/error.hpp"
#include "sfk/io.hpp"
#include "sfk/pipeline.hpp"

#include <algorithm>
#include <sstream>

namespace sfk {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

bool known(const std::string& dotted) {
  const auto& keys = RunConfig::knownKeys();
  return std::find(keys.begin(), keys.end(), dotted) != keys.end();
}

void checkKnown(const std::string& section, const std::string& key) {
  if (!known(section + "." + key)) fail(ErrorCode::Parse, "unknown configuration key '" + section + "." + key + "'");
}

}  // namespace

const std::vector<std::string>& RunConfig::knownKeys() {
  static const std::vector<std::string> keys{
      "surface.genus",           "surface.degree",           "surface.blowups",
      "class.fiber_area",        "class.B",                  "class.weights",
      "class.alpha",             "monopole.group",           "monopole.points",
      "monopole.compact",        "numerics.grid",            "numerics.word_length",
      "numerics.x_range",        "numerics.y_range",         "numerics.t_range",
      "numerics.exclusion_radius", "numerics.epsilon",       "numerics.truncation",
      "numerics.phi_order",      "numerics.rho_order",       "numerics.boundary_points",
      "numerics.sphere_radius",  "numerics.sphere_flux_tol", "numerics.slope_tol",
      "numerics.ell_tol",        "numerics.convergence_ratio", "numerics.seed",
      "output.report",           "output.csv",               "output.slice_svg",
  };
  return keys;
}

RunConfig RunConfig::parse(std::string_view text) {
  RunConfig cfg;
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::Parse, std::string("malformed JSON configuration: ") + e.what());
    }
    const nlohmann::json& sections = j.contains("config") ? j.at("config") : j;
    if (!sections.is_object()) fail(ErrorCode::Parse, "JSON configuration must be an object of sections");
    for (const auto& [section, entries] : sections.items()) {
      if (!entries.is_object()) fail(ErrorCode::Parse, "section '" + section + "' must be an object");
      for (const auto& [key, value] : entries.items()) {
        checkKnown(section, key);
        if (!value.is_string()) fail(ErrorCode::Parse, "value of '" + section + "." + key + "' must be a string");
        cfg.values_[section][key] = value.get<std::string>();
      }
    }
    return cfg;
  }

  std::istringstream in{std::string(text)};
  std::string line, section;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string s = trim(line);
    if (s.empty()) continue;
    const std::string where = "line " + std::to_string(lineNo) + ": ";
    if (s.front() == '[') {
      if (s.back() != ']') fail(ErrorCode::Parse, where + "unterminated section header");
      section = trim(std::string_view(s).substr(1, s.size() - 2));
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) fail(ErrorCode::Parse, where + "expected key = value");
    if (section.empty()) fail(ErrorCode::Parse, where + "key outside of a section");
    const std::string key = trim(std::string_view(s).substr(0, eq));
    checkKnown(section, key);
    if (cfg.values_[section].count(key)) fail(ErrorCode::Parse, where + "duplicate key '" + section + "." + key + "'");
    cfg.values_[section][key] = trim(std::string_view(s).substr(eq + 1));
  }
  return cfg;
}

RunConfig RunConfig::load(const std::string& path) { return parse(readFile(path)); }

void RunConfig::set(std::string_view key, std::string value) {
  const auto dot = key.find('.');
  if (dot == std::string_view::npos) fail(ErrorCode::Parse, "configuration key must look like section.name");
  const std::string section(key.substr(0, dot)), name(key.substr(dot + 1));
  checkKnown(section, name);
  values_[section][name] = trim(value);
}

std::optional<std::string> RunConfig::get(const std::string& section, const std::string& key) const {
  const auto s = values_.find(section);
  if (s == values_.end()) return std::nullopt;
  const auto k = s->second.find(key);
  if (k == s->second.end()) return std::nullopt;
  return k->second;
}

nlohmann::json RunConfig::toJson() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [section, entries] : values_)
    for (const auto& [key, value] : entries) j[section][key] = value;
  return j;
}

std::string RunConfig::toIni() const {
  std::ostringstream out;
  for (const auto& [section, entries] : values_) {
    out << '[' << section << "]\n";
    for (const auto& [key, value] : entries) out << key << " = " << value << '\n';
  }
  return out.str();
}

}  // namespace sfk
