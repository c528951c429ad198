#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ffmfg/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"1-D mean-field-game conservation-law laboratory"};
  app.name("ffmfg");

  std::string command;
  std::string config_path;
  std::string out_dir;
  bool force = false;
  app.add_option("--command", command, "simulate | levelsets | eigen | convergence-study")
      ->required();
  app.add_option("--config", config_path, "key = value configuration file")->required();
  app.add_option("--out", out_dir, "output directory (all commands except eigen)");
  app.add_flag("--force", force, "overwrite existing output files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  ffmfg::RunManifest manifest;
  if (command == "simulate") {
    manifest.command = ffmfg::Command::Simulate;
  } else if (command == "levelsets") {
    manifest.command = ffmfg::Command::LevelSets;
  } else if (command == "eigen") {
    manifest.command = ffmfg::Command::Eigen;
  } else if (command == "convergence-study") {
    manifest.command = ffmfg::Command::ConvergenceStudy;
  } else {
    std::cerr << "config error: unknown command '" << command
              << "' (expected simulate, levelsets, eigen, or convergence-study)\n";
    return 2;
  }

  if (manifest.command != ffmfg::Command::Eigen && out_dir.empty()) {
    std::cerr << "config error: --out is required for command '" << command << "'\n";
    return 2;
  }

  manifest.config_path = config_path;
  manifest.out_dir = out_dir;
  manifest.force = force;
  return ffmfg::run(manifest);
}
