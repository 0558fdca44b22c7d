#ifndef LSTAR_REPORT_HPP
#define LSTAR_REPORT_HPP

#include <string>
#include <vector>

#include "lstar/typecheck.hpp"

namespace lstar {

enum class Status { Proved, Failed, FuelExhausted };
const char* to_string(Status status);

// Result of one theorem pipeline run: a plain check, a reflection, a prime
// relabelling, or an extensionality witness. `goal` is the type the witness
// was actually checked against; `goal_display` may simplify it for reports.
struct WitnessReport {
  Mode mode = Mode::LStar;
  Context source_ctx;
  TermPtr source_term;
  TermPtr source_type;
  Context translated_ctx;
  TermPtr witness;
  TermPtr goal;
  TermPtr goal_display;
  Status status = Status::Failed;
  std::vector<std::string> diagnostics;
  long long steps = 0;
};

// Renders an error with the display names of the context it occurred in.
std::string describe(const TypeError& error, const std::vector<Name>& scope = {});

}  // namespace lstar

#endif  // LSTAR_REPORT_HPP
