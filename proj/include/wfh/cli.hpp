#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wfh {

// Exit statuses of the command-line tool.
enum ExitStatus {
  kExitOk = 0,
  kExitUsage = 2,
  kExitUnsupported = 3,
  kExitResource = 4,
  kExitDegreeCap = 5,
  kExitValidation = 6,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wfh
