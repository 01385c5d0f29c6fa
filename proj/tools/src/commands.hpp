#pragma once

#include <functional>
#include <vector>

#include "CLI11.hpp"
#include "hnl/verify.hpp"
#include "report.hpp"

namespace hnl::cli {

struct Context {
  SearchOptions search;
};

struct Outcome {
  Json report;
  int exit_code = 0;
};

struct Command {
  CLI::App* app;
  std::function<Outcome(const Context&)> handler;
};

/// Add every analysis subcommand (all but batch) to `app`.
std::vector<Command> register_commands(CLI::App& app);

}  // namespace hnl::cli
