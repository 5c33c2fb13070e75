// minkruled: report, mesh and verify for trajectory ruled surfaces of
// involutes in Minkowski 3-space.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "minkruled/scene.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw minkruled::Error(minkruled::ErrorCode::IOFailure, "cannot read " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

int emit(const minkruled::RunResult& r) {
  std::cout << r.text;
  std::cerr << r.diagnostics;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trajectory ruled surfaces of involutes in Minkowski 3-space"};
  app.require_subcommand(1);

  std::string config_path;
  int trials = 100;
  std::uint64_t seed = 20240601;

  auto* report = app.add_subcommand("report", "Print curvature, drall and striction data");
  report->add_option("config", config_path, "Scene JSON file")->required();
  auto* mesh = app.add_subcommand("mesh", "Write surface meshes (OBJ/CSV)");
  mesh->add_option("config", config_path, "Scene JSON file")->required();
  auto* verify = app.add_subcommand("verify", "Check closed-form drall against numerics");
  verify->add_option("config", config_path, "Scene JSON file")->required();
  verify->add_option("--trials", trials, "Random trials per group")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "RNG seed (MINKRULED_SEED overrides)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : minkruled::exit_config;
  }

  if (const char* env = std::getenv("MINKRULED_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: MINKRULED_SEED is not an unsigned integer\n";
      return minkruled::exit_config;
    }
  }

  try {
    const auto cfg = minkruled::parse_scene_config(read_file(config_path));
    if (*report) return emit(minkruled::run_report(cfg));
    if (*mesh) return emit(minkruled::run_mesh(cfg));
    return emit(minkruled::run_verify(cfg, trials, seed));
  } catch (const minkruled::Error& e) {
    std::cerr << "error [" << minkruled::to_string(e.code()) << "] " << config_path << ": " << e.what()
              << "\n";
    switch (e.code()) {
      case minkruled::ErrorCode::InvalidConfig:
      case minkruled::ErrorCode::IOFailure:
        return minkruled::exit_config;
      default:
        return minkruled::exit_failure;
    }
  }
}
