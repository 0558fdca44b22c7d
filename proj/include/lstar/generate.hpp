#ifndef LSTAR_GENERATE_HPP
#define LSTAR_GENERATE_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "lstar/typecheck.hpp"

namespace lstar {

// The ten rule shapes a generated judgment can exercise.
enum class RuleCase {
  Axiom,
  Variable,
  Weakening,
  PiFormation,
  SigmaFormation,
  PiIntroduction,
  PiElimination,
  SigmaIntroduction,
  SigmaElimination,
  Conversion,
};
const char* to_string(RuleCase c);

struct GenJudgment {
  Context ctx;
  TermPtr term;
  TermPtr type;
  std::set<RuleCase> cases;
};

// Deterministic type-directed generation of well-typed lambda-star judgments:
// the same seed/size/count always produces the same list, and every emitted
// judgment has been re-validated with check().
std::vector<GenJudgment> generate(std::uint64_t seed, int size, int count);

// Scans a judgment for the rule shapes it exercises.
std::set<RuleCase> judgment_cases(const Context& ctx, const TermPtr& term, const TermPtr& type);

// A substitution scenario: m lives over ctx + (x : b); n inhabits b over ctx.
struct SubstInstance {
  Context ctx;
  TermPtr b;
  TermPtr m;
  TermPtr m_type;
  TermPtr n;
};
std::vector<SubstInstance> generate_subst(std::uint64_t seed, int size, int count);

// A beta or projection redex together with its one-step reduct, well-typed
// over ctx.
struct RedexPair {
  Context ctx;
  TermPtr redex;
  TermPtr reduct;
};
std::vector<RedexPair> generate_redexes(std::uint64_t seed, int size, int count);

// Variants confined to the translatable fragment: U-contexts, lambda domains
// of the form T C, and codes built from qstar/qFun/qSum and code variables.
// Every emitted term is accepted by the star translation.
std::vector<SubstInstance> generate_u_subst(std::uint64_t seed, int size, int count);
std::vector<RedexPair> generate_u_redexes(std::uint64_t seed, int size, int count);

}  // namespace lstar

#endif  // LSTAR_GENERATE_HPP
