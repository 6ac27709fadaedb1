#include "sfk/error.hpp"
#include "sfk/io.hpp"
#include "sfk/pipeline.hpp"

#include <doctest.h>

using namespace sfk;

namespace {

RunConfig ini(const std::string& text) { return RunConfig::parse(text); }

const nlohmann::json* check(const RunReport& r, const std::string& name) {
  for (const auto& c : r.json.at("checks"))
    if (c.at("name") == name) return &c;
  return nullptr;
}

ErrorCode codeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("ini parsing") {
  const auto c = ini("# comment\n[surface]\ngenus = 2\ndegree=1 # trailing\n\n[monopole]\npoints = 0,1,0; 0.3,1.4,0\n");
  CHECK(c.get("surface", "genus") == std::optional<std::string>("2"));
  CHECK(c.get("surface", "degree") == std::optional<std::string>("1"));
  CHECK(c.get("monopole", "points") == std::optional<std::string>("0,1,0; 0.3,1.4,0"));
  CHECK_FALSE(c.has("class", "weights"));
  CHECK(codeOf([] { ini("[surface]\ncolour = red\n"); }) == ErrorCode::Parse);
  CHECK(codeOf([] { ini("[nonsense]\ngenus = 2\n"); }) == ErrorCode::Parse);
  CHECK(codeOf([] { ini("genus = 2\n"); }) == ErrorCode::Parse);
  CHECK(codeOf([] { ini("[surface]\ngenus = 2\ngenus = 3\n"); }) == ErrorCode::Parse);
  CHECK(codeOf([] { ini("[surface\n"); }) == ErrorCode::Parse);
}

TEST_CASE("json configuration and round trip") {
  auto c = ini("[surface]\ngenus = 2\ndegree = 1\n[class]\nweights = 1/2,1/2\n");
  c.set("class.fiber_area", "3");
  const auto again = RunConfig::parse(c.toJson().dump());
  CHECK(again.toIni() == c.toIni());
  CHECK(RunConfig::parse(c.toIni()).toIni() == c.toIni());
  CHECK(codeOf([] { RunConfig::parse("{\"surface\": {\"genus\": 2}}"); }) == ErrorCode::Parse);
  CHECK(codeOf([] { RunConfig::parse("{broken"); }) == ErrorCode::Parse);
  CHECK(codeOf([&] { c.set("surface.colour", "1"); }) == ErrorCode::Parse);
  CHECK(codeOf([] { RunConfig::load("no_such_config.ini"); }) == ErrorCode::Io);
}

TEST_CASE("admissible subcommand") {
  const auto r = runPipeline("admissible", ini("[surface]\ngenus=2\ndegree=1\n[class]\nweights=1/2,1/2\n"));
  CHECK(r.exitCode == 0);
  CHECK(r.json.at("results").at("class").at("B") == "1/1");
  CHECK(r.json.at("results").at("model").at("c1_squared") == -10);
  const auto off = runPipeline("admissible", ini("[surface]\ngenus=2\ndegree=1\n[class]\nweights=1/2,1/2\nB=2\n"));
  CHECK(off.exitCode == 1);
  CHECK(off.failedCheck == std::optional<std::string>("admissibility"));
  CHECK(check(off, "admissibility")->at("failed_condition") == "(i)");
}

TEST_CASE("futaki and stability subcommands") {
  const auto bad = ini("[surface]\ngenus=2\ndegree=1\n[class]\nweights=1/4,1/4\n");
  const auto f = runPipeline("futaki", bad);
  CHECK(f.exitCode == 1);
  CHECK(f.failedCheck == std::optional<std::string>("futaki_zero"));
  CHECK(f.json.at("results").at("futaki").at("value") == "-1/4");
  const auto s = runPipeline("stability", bad);
  CHECK(s.exitCode == 1);
  CHECK(s.json.at("results").at("stability").at("witness") == "SummandL");
  const auto good = runPipeline("stability", ini("[surface]\ndegree=1\n[class]\nweights=1/2,1/2\nalpha=1/8,0\n"));
  CHECK(good.exitCode == 0);
  const auto pi = runPipeline("futaki", ini("[surface]\ngenus=2\ndegree=1\n[class]\nweights=1/2,1/2\nfiber_area=4pi\n"));
  CHECK(pi.json.at("results").at("futaki").at("unit") == "pi^2");
}

TEST_CASE("configuration errors") {
  CHECK(codeOf([] { runPipeline("futaki", ini("[surface]\ngenus=2\ndegree=1\n[class]\nweights=1/0\n")); }) ==
        ErrorCode::Parse);
  CHECK(codeOf([] { runPipeline("admissible", ini("[surface]\ndegree=1\n")); }) == ErrorCode::InvalidArgument);
  CHECK(codeOf([] { runPipeline("admissible", ini("[surface]\ngenus=two\ndegree=1\n")); }) == ErrorCode::Parse);
  CHECK(codeOf([] { runPipeline("bogus", RunConfig{}); }) == ErrorCode::InvalidArgument);
  CHECK(codeOf([] { runPipeline("ansatz", ini("[numerics]\nepsilon=-1\n")); }) == ErrorCode::InvalidArgument);
  CHECK(codeOf([] { runPipeline("ansatz", ini("[monopole]\npoints=0,1\n")); }) == ErrorCode::Parse);
}

TEST_CASE("asd-index subcommand") {
  const auto r = runPipeline("asd-index", ini("[numerics]\ntruncation=1\n"));
  CHECK(r.exitCode == 0);
  CHECK(r.json.at("results").at("asd_index").at("kernel") == 3);
  CHECK(r.json.at("status") == "pass");
}

TEST_CASE("full pipeline quantization gate") {
  const auto r = runPipeline("full", ini("[monopole]\ngroup=builtin\npoints=0,1,0\n[numerics]\ngrid=9,9,9\n"));
  CHECK(r.exitCode == 1);
  CHECK(r.failedCheck == std::optional<std::string>("quantization"));
}

TEST_CASE("full pipeline rejects a class that contradicts the charges") {
  const std::string base = "[monopole]\ngroup=builtin\npoints=0,1,0;0.3,1.4,0\n[numerics]\ngrid=9,9,9\n";
  CHECK(codeOf([&] { runPipeline("full", ini(base + "[class]\nweights=1/4,3/4\n")); }) == ErrorCode::InvalidArgument);
  CHECK(codeOf([&] { runPipeline("full", ini(base + "[class]\nfiber_area=2\n")); }) == ErrorCode::InvalidArgument);
  CHECK(codeOf([&] { runPipeline("full", ini(base + "[surface]\ngenus=3\n")); }) == ErrorCode::InvalidArgument);
  CHECK(codeOf([&] { runPipeline("full", ini(base + "[surface]\ndegree=2\n")); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("report file is written and re-runs identically") {
  auto c = ini("[surface]\ngenus=3\ndegree=2\n[class]\nweights=1/3,2/3,1/2\nfiber_area=2\n[output]\nreport=pipe_report.json\n");
  const auto first = runPipeline("futaki", c);
  const auto again = runPipeline("futaki", RunConfig::load("pipe_report.json"));
  CHECK(first.json.at("results") == again.json.at("results"));
  CHECK(subcommands().size() == 6);
}
