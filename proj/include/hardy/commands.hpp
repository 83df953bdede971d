#pragma once

#include "hardy/moebius.hpp"

#include <optional>
#include <string>

namespace hardy {

struct JobConfig
{
  std::optional<std::string> map_path;  ///< JSON map file; the reference map -(1+z)/2 when absent
  std::string expression;
  int resolution = 1000;
  int n = 512;
  int window = 64;
  std::optional<std::string> out;

  void validate() const;
  Moebius load_map() const;
};

/// Text destined for stdout/stderr plus the process exit code
/// (0 success, 1 failed verification, 2 invalid input).
struct CommandOutput
{
  int exit_code = 0;
  std::string out;
  std::string err;
};

CommandOutput cmd_analyze(JobConfig const &config);
CommandOutput cmd_normalize(JobConfig const &config);
CommandOutput cmd_spectrum(JobConfig const &config);
CommandOutput cmd_norm(JobConfig const &config);
CommandOutput cmd_verify(JobConfig const &config);

} // namespace hardy
