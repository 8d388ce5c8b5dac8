#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bsrig::acceptance {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;  // first failed check, or a short summary
  double seconds;
  double budget_seconds;
};

/// Runs every acceptance criterion with the given seed. Each criterion passes only if all
/// of its exact checks hold and it finishes within its time budget. A nonzero `only` runs
/// just that criterion.
std::vector<CriterionResult> run_all(std::uint64_t seed = 20130917, int only = 0);

/// "[PASS] 1 word problem soundness (0.84 s / 10 s)" style line.
std::string format_line(const CriterionResult& r);

}  // namespace bsrig::acceptance
