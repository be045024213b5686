#pragma once

#include <string>

#include "nchyl/config.hpp"

namespace nchyl::io {

// Exit codes shared by the CLI: 0 ok, 1 validation failure, 2 config error,
// 3 solver failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitSolverFailure = 3;

int cmd_solve(const RunConfig& cfg, const std::string& out_dir);
int cmd_correct(const RunConfig& cfg, const std::string& out_dir);
int cmd_validate(const RunConfig& cfg, const std::string& out_dir);
int cmd_scan(const RunConfig& cfg, const std::string& out_dir, const std::string& axis,
             double lo, double hi, int steps);

} // namespace nchyl::io
