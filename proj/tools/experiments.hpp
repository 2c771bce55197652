#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"

namespace exotica::cli {

enum class Format { Json, Csv };

struct Outcome {
  int status = 0;  // 0 pass, 1 a mathematical check failed
  std::string body;
};

const std::vector<std::string>& subcommands();

/// Runs one subcommand. Library errors propagate (the caller maps them to exit 2).
Outcome run_experiment(const std::string& name, const Config& cfg, Format format, std::uint64_t seed,
                       unsigned threads);

}  // namespace exotica::cli
