#ifndef LSTAR_ERRORS_HPP
#define LSTAR_ERRORS_HPP

#include <exception>
#include <string>
#include <utility>

#include "lstar/term.hpp"

namespace lstar {

enum class ErrorKind {
  UnboundVariable,
  NotAFunction,
  NotAPair,
  NotASort,
  Mismatch,
  CannotInfer,
  FuelExhausted,
  IllFormedContext,
  NotAUContext,
  MalformedInput,
  NegativeIndex,
};

const char* to_string(ErrorKind kind);

// Kernel or translation failure. `subject` is the offending subterm when one
// exists; Mismatch also carries `expected` and `got` (normalized as far as
// the remaining fuel allowed). `where` is a free-form note filled in by the
// layer that has the surrounding context.
struct TypeError : std::exception {
  ErrorKind kind;
  TermPtr subject;
  TermPtr expected;
  TermPtr got;
  std::string where;

  explicit TypeError(ErrorKind k, TermPtr subj = nullptr, TermPtr exp = nullptr,
                     TermPtr g = nullptr)
      : kind(k), subject(std::move(subj)), expected(std::move(exp)), got(std::move(g)) {}

  const char* what() const noexcept override { return to_string(kind); }
};

}  // namespace lstar

#endif  // LSTAR_ERRORS_HPP
