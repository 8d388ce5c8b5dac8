#pragma once

#include <string>
#include <vector>

namespace bsrig::cli {

struct Outcome {
  int exit_code;  // 0 success, 1 domain error, 2 usage error
  std::string out;
  std::string err;
};

/// Runs the `bsrig` command line; args excludes the program name.
Outcome run(const std::vector<std::string>& args);

}  // namespace bsrig::cli
