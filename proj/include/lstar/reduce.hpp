#ifndef LSTAR_REDUCE_HPP
#define LSTAR_REDUCE_HPP

#include "lstar/errors.hpp"
#include "lstar/signature.hpp"
#include "lstar/term.hpp"

namespace lstar {

// Step budget shared by reduction, conversion, and checking. Every beta,
// projection, or delta step costs exactly one unit; running out throws
// FuelExhausted, so a blown budget can never be mistaken for a negative
// verdict.
struct Fuel {
  long long remaining;
  long long initial;

  explicit Fuel(long long amount = kDefaultFuel) : remaining(amount), initial(amount) {}

  long long used() const { return initial - remaining; }

  void step(const TermPtr& at) {
    if (remaining <= 0) throw TypeError(ErrorKind::FuelExhausted, at);
    --remaining;
  }
};

// Weak head normal form under beta, projection, and the signature's delta
// rules. A constant-headed application that no rule fires on is returned as
// written, even when probing the scrutinee did some work.
TermPtr whnf(const Signature& sig, TermPtr t, Fuel& fuel);

// Full normal form: whnf at every position, including the arguments of inert
// constant spines.
TermPtr normalize(const Signature& sig, const TermPtr& t, Fuel& fuel);

// Untyped conversion: whnf both sides and compare heads structurally. There
// is no eta and no surjective pairing. Returns false on a genuine head
// mismatch; throws FuelExhausted when the budget dies first.
bool conv(const Signature& sig, const TermPtr& x, const TermPtr& y, Fuel& fuel);

}  // namespace lstar

#endif  // LSTAR_REDUCE_HPP
