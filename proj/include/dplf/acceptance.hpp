// Release gate: the fixed battery of correctness, privacy, and utility
// checks the project ships against. Each criterion prints one PASS/FAIL
// line; the gate as a whole fails if any criterion does.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dplf/exec.hpp"

namespace dplf {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // counts, tolerances, elapsed time
  double seconds = 0.0;
};

// Runs every criterion in order, streaming one line per result to `out`.
// Returns true only if all pass.
bool run_acceptance(std::ostream& out, ExecPolicy policy = ExecPolicy::Parallel);

// Same battery without the printing, for programmatic use.
std::vector<CriterionResult> run_acceptance_criteria(ExecPolicy policy,
                                                     std::ostream* progress = nullptr);

}  // namespace dplf
