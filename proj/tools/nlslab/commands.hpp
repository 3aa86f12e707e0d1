#pragma once

#include <optional>
#include <string>
#include <vector>

#include "checks.hpp"
#include "config.hpp"

namespace nlslab {

enum class Command { scatter, phase, model_check, asymptote, evolve, compare, dbar, all };

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command c);
const std::vector<std::string>& command_names();

/// Runs one sub-pipeline and returns its checks. CSV artifacts and
/// summary.json go to cfg.out_dir (created if missing); nothing is written
/// when out_dir is empty. Library errors inside a step are caught and
/// reported as a failing check, so only I/O problems escape as exceptions.
Summary run(Command c, const ExperimentConfig& cfg);

}  // namespace nlslab
