#ifndef LSTAR_EXTENSIONALITY_HPP
#define LSTAR_EXTENSIONALITY_HPP

#include "lstar/report.hpp"

namespace lstar {

// Marker relabelling: every variable occurrence and binder hint becomes
// primed. Indices are untouched, so a primed judgment checks exactly when the
// source judgment does.
TermPtr prime(const TermPtr& t);
Context prime_context(const Context& ctx);

// Embeddings into the interleaved starred context, where each source entry
// (and each source binder) expands to the triple (x, x', x*) with x*
// innermost. A free index i lands on 3i+2 (plain copy) or 3i+1 (primed copy);
// `depth` counts binders of t that have already been crossed.
TermPtr embed_plain(const TermPtr& t, std::size_t depth = 0);
TermPtr embed_prime(const TermPtr& t, std::size_t depth = 0);

// Relational translation. Defined on variables, qstar, qFun/qSum codes,
// lambdas with T-headed domains, applications, pairs, and projections (plus
// qEq/qRel codes in Internal mode); anything else throws MalformedInput.
// Every binder is tripled, so an index i — local or ambient — maps uniformly
// to the starred slot 3i. In Internal mode the x* binder domains are coded as
// T (qRel ...) (or T (qEq x x') when the domain code is qstar) so that
// iterating the translation stays inside its own domain.
TermPtr star(const TermPtr& t, Mode mode = Mode::LStarUEq);
Context star_context(const Context& ctx, Mode mode = Mode::LStarUEq);

// True when every entry type has the shape T <code> as written — the shape
// the translation reads off — with the prefix proving <code> : U.
bool is_U_context(const Signature& sig, const Context& ctx, Fuel& fuel);

// Re-checks ctx |- m : a after priming all three parts, in the given mode.
WitnessReport check_prime_typing(const Context& ctx, const TermPtr& m, const TermPtr& a,
                                 Mode mode, long long fuel_budget = kDefaultFuel);

// For a U-context judgment ctx |- m : T a with ctx |- a : U in mode lstarU,
// builds the starred context, the witness star(m), and the goal
//   Rel a_p a'_p star(a) m_p m'_p
// and checks the witness in mode lstarUeq.
WitnessReport check_extensionality(const Context& ctx, const TermPtr& m, const TermPtr& a,
                                   long long fuel_budget = kDefaultFuel);

}  // namespace lstar

#endif  // LSTAR_EXTENSIONALITY_HPP
