#pragma once

#include <iosfwd>
#include <string>

#include "config.hpp"

namespace femtonc::cli {

enum ExitCode { kOk = 0, kConfigError = 2, kSolverLimit = 3, kValidationFailed = 4 };

struct RunOptions {
  bool timestamp = true;
  std::string command;
};

// Each command writes its header (resolved config as '# key=value' lines)
// and body to `out`, diagnostics to `err`, and returns an exit code.
int cmd_schedule(const Config& c, const RunOptions& o, std::ostream& out, std::ostream& err);
int cmd_sweep(const Config& c, const RunOptions& o, std::ostream& out, std::ostream& err);
int cmd_theory(const Config& c, const RunOptions& o, std::ostream& out, std::ostream& err);
int cmd_validate(const Config& c, const RunOptions& o, std::ostream& out, std::ostream& err);
int cmd_fixtures(const Config& c, const RunOptions& o, std::ostream& out, std::ostream& err);

int dispatch(const std::string& command, const Config& c, const RunOptions& o, std::ostream& out,
             std::ostream& err);

}  // namespace femtonc::cli
