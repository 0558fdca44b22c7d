#ifndef LSTAR_SIGNATURE_HPP
#define LSTAR_SIGNATURE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lstar/term.hpp"

namespace lstar {

enum class Mode { LStar, LStarU, LStarUEq, Internal };

const char* to_string(Mode mode);
bool mode_from_string(const std::string& text, Mode& out);

struct ConstDecl {
  std::string name;
  TermPtr type;  // closed, checked against * over the preceding declarations
};

// First-order rewrite rule for a constant. An application
//   head a0 ... a{arity-1} rest...
// fires when a_{scrutinee} weak-head-normalizes to an application of
// pattern_head to exactly pattern_arity arguments; every other position is a
// wildcard. `rhs` is a template whose free variables stand for
// [pattern args..., a0 ... a{arity-1}], listed outermost-first.
struct DeltaRule {
  std::string head;
  std::size_t arity = 0;
  std::size_t scrutinee = 0;
  std::string pattern_head;
  std::size_t pattern_arity = 0;
  TermPtr rhs;
};

struct Signature {
  Mode mode = Mode::LStar;
  std::vector<ConstDecl> constants;
  std::vector<DeltaRule> rules;

  const ConstDecl* find(const std::string& name) const;
  bool reducible(const std::string& head) const;
  // All rules for one head share arity and scrutinee; this returns the first.
  const DeltaRule* head_info(const std::string& head) const;
  const DeltaRule* rule(const std::string& head, const std::string& pattern) const;
};

// Returns the cached signature for a mode. Constant types are checked against
// * over the preceding prefix when the cache is first built; a failure there
// aborts, since it can only be a construction bug.
const Signature& declare_signature(Mode mode);

// Union of the constant names of every mode; used by the parser, which
// resolves first and validates mode membership afterwards.
const std::set<std::string>& all_constant_names();

inline constexpr long long kDefaultFuel = 100000;

}  // namespace lstar

#endif  // LSTAR_SIGNATURE_HPP
