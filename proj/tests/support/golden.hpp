#pragma once

// Runs the CLI over tests/golden/cases.json and compares each JSON report
// byte for byte with tests/golden/expected/<name>.json. With
// COTWIST_UPDATE_GOLDEN=1 in the environment the expected files are
// rewritten instead.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cotwist/cli.hpp"

namespace golden {

struct Result {
  std::string name;
  bool ok = false;
  std::string detail;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::vector<Result> run_all(const std::filesystem::path& dir) {
  const bool update = std::getenv("COTWIST_UPDATE_GOLDEN") != nullptr;
  const auto cases = nlohmann::json::parse(read_file(dir / "cases.json"));
  std::vector<Result> results;
  for (const auto& c : cases) {
    Result r;
    r.name = c.at("name").get<std::string>();
    std::vector<std::string> args;
    bool next_is_config = false;
    for (const auto& a : c.at("args")) {
      auto s = a.get<std::string>();
      args.push_back(next_is_config ? (dir / "configs" / s).string() : s);
      next_is_config = s == "--config";
    }
    args.push_back("--json");

    std::ostringstream out, err;
    const int code = cotwist::cli::run(args, out, err);
    const auto expected_path = dir / "expected" / (r.name + ".json");
    if (update) std::ofstream(expected_path) << out.str();

    const int want = c.at("exit").get<int>();
    if (code != want) {
      r.detail = "exit code " + std::to_string(code) + ", expected " + std::to_string(want) + "; " + err.str();
    } else if (!std::filesystem::exists(expected_path)) {
      r.detail = "missing " + expected_path.string();
    } else if (read_file(expected_path) != out.str()) {
      r.detail = "report differs from " + expected_path.string();
    } else {
      r.ok = true;
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace golden
