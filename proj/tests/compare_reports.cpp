// compare_reports a.json b.json: exit 0 iff the "results" members are equal.
#include <json.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: compare_reports a.json b.json\n";
    return 2;
  }
  try {
    std::ifstream a(argv[1]), b(argv[2]);
    const auto ja = nlohmann::json::parse(a), jb = nlohmann::json::parse(b);
    if (ja.at("results") == jb.at("results")) return 0;
    std::cerr << "results differ\n" << nlohmann::json::diff(ja.at("results"), jb.at("results")).dump(2) << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
