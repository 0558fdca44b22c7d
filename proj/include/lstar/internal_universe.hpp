#ifndef LSTAR_INTERNAL_UNIVERSE_HPP
#define LSTAR_INTERNAL_UNIVERSE_HPP

#include "lstar/extensionality.hpp"

namespace lstar {

// Relational translation targeting the fully internal signature: equality and
// relation types are themselves codes (qEq, qRel decoded through rel), so the
// translation can be applied to its own output.
TermPtr star_internal(const TermPtr& t);
Context star_context_internal(const Context& ctx);

// As check_extensionality, but source and target both live in mode internal
// and the goal is T (rel a_p a'_p star(a) m_p m'_p).
WitnessReport check_extensionality_internal(const Context& ctx, const TermPtr& m,
                                            const TermPtr& a,
                                            long long fuel_budget = kDefaultFuel);

// One-step tower check anchored at the polymorphic identity id : T C, where
// C = qFun qstar (\A. qFun A (\x. A)). Three parts:
//   (a) the coded dimension-2 judgment () |- id* : T (qRel C C' C* id id')
//       holds, where id* is the dimension-1 witness;
//   (b) id* is literally the lambda-closure of the variable x* over the
//       starred telescope (A : T qstar, x : T A)*;
//   (c) extensionality of that opened judgment is proved in mode internal,
//       producing a dimension-2 witness x** over the twice-starred telescope.
struct TowerReport {
  WitnessReport dim1;
  bool coded_judgment_ok = false;
  bool closure_matches = false;
  WitnessReport dim2;
  std::vector<std::string> diagnostics;

  bool ok() const {
    return dim1.status == Status::Proved && coded_judgment_ok && closure_matches &&
           dim2.status == Status::Proved;
  }
};

TowerReport check_tower_identity(long long fuel_budget = kDefaultFuel);

}  // namespace lstar

#endif  // LSTAR_INTERNAL_UNIVERSE_HPP
