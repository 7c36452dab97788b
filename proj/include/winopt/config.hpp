#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "winopt/sweep.hpp"

namespace winopt {

/// Settings of one CLI run. An empty config file reproduces the reference setup.
struct RunConfig {
  std::string weather_path;
  std::string out_dir = ".";
  StudyConfig study;
  ScenarioGrid grid = ScenarioGrid::defaults();
  std::uint64_t seed = 0;

  void validate() const;
};

/// Applies `key = value` lines to `config`. `#` starts a comment; blank lines
/// are ignored. Unknown keys and bad values raise ParseError naming the line.
void apply_config_text(std::string_view text, RunConfig& config);
void apply_config_file(const std::string& path, RunConfig& config);

/// Every key with its current value, in the accepted syntax.
std::string describe_config(const RunConfig& config);

}  // namespace winopt
