#include "sfk/sfk.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

struct Options {
  std::string config;
  std::vector<std::string> sets;
  std::string report;
  bool quiet = false;
};

// Convenience flags forwarded as section.key overrides.
struct Forward {
  const char* flag;
  const char* key;
  const char* help;
};

const std::vector<Forward> kSurfaceFlags{
    {"--genus", "surface.genus", "genus of the base curve"},
    {"--degree", "surface.degree", "degree k of L"},
    {"--weights", "class.weights", "comma separated weights w_j"},
    {"--fiber-area", "class.fiber_area", "fiber area A, optionally with a pi suffix"},
    {"--B", "class.B", "section parameter B (default: admissible value)"},
};
const std::vector<Forward> kAlphaFlags{{"--alpha", "class.alpha", "comma separated alpha_j"}};
const std::vector<Forward> kMonopoleFlags{
    {"--group", "monopole.group", "group file, 'default' or 'builtin'"},
    {"--points", "monopole.points", "charges x,y,t;x,y,t"},
    {"--grid", "numerics.grid", "nx,ny,nt"},
    {"--word-length", "numerics.word_length", "image sum word length"},
    {"--csv", "output.csv", "grid dump path"},
    {"--slice-svg", "output.slice_svg", "contour plot path"},
};
const std::vector<Forward> kAsdFlags{{"--truncation", "numerics.truncation", "Fourier truncation N"}};

int configError(const std::string& what) {
  std::cerr << "sfk: " << what << '\n';
  return 2;
}

int exitFor(sfk_status s) {
  return (s == SFK_PRECONDITION || s == SFK_INTERNAL || s == SFK_CHECK_FAILED) ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scalar-flat Kahler surface toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sfk_version()));

  Options opt;
  std::vector<std::pair<std::string, std::string>> forwarded;
  std::vector<std::unique_ptr<std::string>> storage;

  for (size_t i = 0; i < sfk_subcommand_count(); ++i) {
    const std::string name = sfk_subcommand_name(i);
    auto* sub = app.add_subcommand(name, "run the " + name + " checks");
    sub->add_option("-c,--config", opt.config, "INI or JSON configuration (a previous report works)");
    sub->add_option("-s,--set", opt.sets, "override, section.key=value")->take_all();
    sub->add_option("-r,--report", opt.report, "write the JSON report here instead of stdout");
    sub->add_flag("-q,--quiet", opt.quiet, "no report on stdout");

    std::vector<Forward> flags;
    if (name == "admissible" || name == "futaki" || name == "stability")
      flags.insert(flags.end(), kSurfaceFlags.begin(), kSurfaceFlags.end());
    if (name == "stability" || name == "full") flags.insert(flags.end(), kAlphaFlags.begin(), kAlphaFlags.end());
    if (name == "ansatz" || name == "full")
      flags.insert(flags.end(), kMonopoleFlags.begin(), kMonopoleFlags.end());
    if (name == "asd-index") flags.insert(flags.end(), kAsdFlags.begin(), kAsdFlags.end());
    for (const auto& f : flags) {
      storage.push_back(std::make_unique<std::string>());
      std::string* slot = storage.back().get();
      const std::string key = f.key;
      sub->add_option(f.flag, *slot, f.help)->each([&forwarded, key](const std::string& v) {
        forwarded.emplace_back(key, v);
      });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string subcommand = app.get_subcommands().front()->get_name();

  sfk_config* raw = nullptr;
  sfk_status s = opt.config.empty() ? sfk_config_new(&raw) : sfk_config_load(opt.config.c_str(), &raw);
  if (s != SFK_OK) return configError(sfk_last_error());
  std::unique_ptr<sfk_config, decltype(&sfk_config_free)> cfg(raw, sfk_config_free);

  for (const auto& kv : forwarded)
    if (sfk_config_set(cfg.get(), kv.first.c_str(), kv.second.c_str()) != SFK_OK)
      return configError(sfk_last_error());
  for (const auto& item : opt.sets) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) return configError("--set expects section.key=value, got '" + item + "'");
    if (sfk_config_set(cfg.get(), item.substr(0, eq).c_str(), item.substr(eq + 1).c_str()) != SFK_OK)
      return configError(sfk_last_error());
  }
  if (!opt.report.empty() && sfk_config_set(cfg.get(), "output.report", opt.report.c_str()) != SFK_OK)
    return configError(sfk_last_error());

  sfk_report* rep = nullptr;
  s = sfk_run(subcommand.c_str(), cfg.get(), &rep);
  if (s != SFK_OK) {
    std::cerr << "sfk: " << sfk_status_name(s) << ": " << sfk_last_error() << '\n';
    return exitFor(s);
  }
  std::unique_ptr<sfk_report, decltype(&sfk_report_free)> report(rep, sfk_report_free);

  if (opt.report.empty() && !opt.quiet) {
    char* text = nullptr;
    if (sfk_report_json(report.get(), 2, &text) != SFK_OK) return configError(sfk_last_error());
    std::cout << text << '\n';
    sfk_string_free(text);
  }
  const int code = sfk_report_exit_code(report.get());
  if (const char* failed = sfk_report_failed_check(report.get())) std::cerr << "sfk: check failed: " << failed << '\n';
  return code;
}
