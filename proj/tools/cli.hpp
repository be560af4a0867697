#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlie::cli {

enum Exit : int {
  kOk = 0,
  kInvalid = 1,
  kExhausted = 2,
  kContradiction = 3,
  kUsage = 4,
};

/// Runs `nlie <args...>`; args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlie::cli
