#ifndef LSTAR_UNIVERSE_HPP
#define LSTAR_UNIVERSE_HPP

#include "lstar/report.hpp"

namespace lstar {

// Code-level reflection of a plain lambda-star term: * becomes qstar, Pi and
// Sigma become qFun/qSum codes with the bound family abstracted at T <code>,
// lambda annotations A become T <code of A>, and everything else is
// homomorphic. Constants in the input are rejected with MalformedInput.
TermPtr reflect(const TermPtr& t);
Context reflect_context(const Context& ctx);

// Verifies ctx |- m : a in mode lstar, then checks the translated judgment
//   reflect_context(ctx) |- reflect(m) : T (reflect(a))
// in mode lstarU and reports the outcome.
WitnessReport check_reflection(const Context& ctx, const TermPtr& m, const TermPtr& a,
                               long long fuel_budget = kDefaultFuel);

}  // namespace lstar

#endif  // LSTAR_UNIVERSE_HPP
