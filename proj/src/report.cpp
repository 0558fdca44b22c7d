#include "lstar/report.hpp"

#include "lstar/print.hpp"

namespace lstar {

const char* to_string(Status status) {
  switch (status) {
    case Status::Proved: return "proved";
    case Status::Failed: return "failed";
    case Status::FuelExhausted: return "fuel-exhausted";
  }
  return "failed";
}

std::string describe(const TypeError& error, const std::vector<Name>& scope) {
  std::string out = to_string(error.kind);
  if (error.kind == ErrorKind::Mismatch) {
    out += ": term `" + print(error.subject, scope) + "` expected type `" +
           print(error.expected, scope) + "` but has type `" + print(error.got, scope) + "`";
  } else if (error.subject) {
    out += ": `" + print(error.subject, scope) + "`";
    if (error.got) out += " of type `" + print(error.got, scope) + "`";
  }
  if (!error.where.empty()) out += " (" + error.where + ")";
  return out;
}

}  // namespace lstar
