#pragma once

// Sectioned configuration and the subcommand runner shared by the C API and
// the command line tool.

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sfk {

inline constexpr const char* kVersion = "0.1.0";

class RunConfig {
 public:
  /// INI-style text with [surface], [class], [monopole], [numerics] and
  /// [output] sections, or JSON: either a report (its "config" member is
  /// used) or an object of sections. Unknown sections or keys throw Parse.
  static RunConfig parse(std::string_view text);
  static RunConfig load(const std::string& path);

  /// key is "section.name". Throws Parse for unknown keys.
  void set(std::string_view key, std::string value);
  std::optional<std::string> get(const std::string& section, const std::string& key) const;
  bool has(const std::string& section, const std::string& key) const { return get(section, key).has_value(); }

  nlohmann::json toJson() const;
  std::string toIni() const;

  static const std::vector<std::string>& knownKeys();

 private:
  std::map<std::string, std::map<std::string, std::string>> values_;
};

struct RunReport {
  nlohmann::json json;
  int exitCode = 0;  // 0 pass, 1 check failure
  std::optional<std::string> failedCheck;
};

/// Subcommands: admissible, futaki, stability, ansatz, asd-index, full.
/// Configuration problems throw sfk::Error (Parse, InvalidArgument, Io,
/// DimensionMismatch); failed checks are reported with exit code 1.
RunReport runPipeline(const std::string& subcommand, const RunConfig& config);

const std::vector<std::string>& subcommands();

}  // namespace sfk
