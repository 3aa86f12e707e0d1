#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

// Exit status: 0 all checks pass, 1 a check failed or a run error, 2 bad
// usage or configuration.
int main(int argc, char** argv) {
  CLI::App app{"nlslab: numerical checks for the defocusing NLS long-time asymptotics"};
  std::string command, config_path, out_dir;
  bool have_out = false;
  app.add_option("command", command, "scatter | phase | model-check | asymptote | evolve | compare | dbar | all")
      ->required();
  app.add_option("--config", config_path, "key = value experiment file")->required();
  app.add_option("--out", out_dir, "artifact directory (overrides out_dir)")->each([&](const std::string&) {
    have_out = true;
  });
  app.footer("Threads: set NLSDBAR_THREADS (default: hardware concurrency).");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("NLSDBAR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*env == '\0' || *end != '\0' || v <= 0) {
      std::cerr << "NLSDBAR_THREADS must be a positive integer, got '" << env << "'\n";
      return 2;
    }
  }

  const auto cmd = nlslab::parse_command(command);
  if (!cmd) {
    std::cerr << "unknown command '" << command << "'\n";
    return 2;
  }

  nlslab::ExperimentConfig cfg;
  try {
    cfg = nlslab::load_config(config_path);
  } catch (const nlslab::ConfigError& e) {
    for (const auto& d : e.diagnostics()) std::cerr << d << "\n";
    return 2;
  }
  if (have_out) cfg.out_dir = out_dir;

  try {
    const nlslab::Summary s = nlslab::run(*cmd, cfg);
    std::cout << nlslab::format_summary(s);
    return s.pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
