#ifndef LSTAR_PARSE_HPP
#define LSTAR_PARSE_HPP

#include <exception>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lstar/typecheck.hpp"

namespace lstar {

struct ParseError : std::exception {
  std::string path;
  int line = 0;
  int column = 0;
  std::string message;
  std::string rendered;  // "path:line:col: message"

  ParseError(std::string p, int l, int c, std::string msg);
  const char* what() const noexcept override { return rendered.c_str(); }
};

struct Goal {
  TermPtr term;
  TermPtr type;
  int line = 0;
};

// A parsed .lst file: optional `mode` pragma, `assume` entries forming the
// context, `def`s (transparent macros, already expanded), and `check` goals,
// all resolved to de Bruijn form over the assumes.
struct SourceFile {
  std::string path;
  std::optional<Mode> pragma;
  Context assumes;
  std::vector<Goal> goals;
  std::set<std::string> constants_used;

  // Explicit flag wins over the pragma, which wins over inference from the
  // constants that occur. Throws ParseError when a used constant does not
  // exist in the selected mode.
  Mode effective_mode(std::optional<Mode> flag) const;
};

SourceFile parse_source(const std::string& text, const std::string& path);
SourceFile parse_file(const std::string& path);

// Helper for tests and tools: parse a single term over named scope entries
// (outermost first).
TermPtr parse_term(const std::string& text, const std::vector<Name>& scope = {});

}  // namespace lstar

#endif  // LSTAR_PARSE_HPP
