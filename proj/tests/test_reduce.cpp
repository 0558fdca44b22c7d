#include <doctest.h>

#include "lstar/generate.hpp"
#include "lstar/parse.hpp"
#include "lstar/reduce.hpp"

using namespace lstar;

namespace {

const Signature& empty_sig() { return declare_signature(Mode::LStar); }
const Signature& usig() { return declare_signature(Mode::LStarU); }
const Signature& esig() { return declare_signature(Mode::LStarUEq); }

TermPtr omega() {
  TermPtr half = lam("x", sort(), app(var(0), var(0)));
  return app(half, half);
}

}  // namespace

TEST_CASE("whnf performs single beta and projection steps") {
  Fuel fuel;
  TermPtr t = app(lam("x", sort(), var(0)), sort());
  CHECK(alpha_equal(whnf(empty_sig(), t, fuel), sort()));
  CHECK(fuel.used() == 1);

  Fuel f2;
  CHECK(alpha_equal(whnf(empty_sig(), proj(1, pair(sort(), var(0))), f2), sort()));
  CHECK(f2.used() == 1);
  Fuel f3;
  CHECK(alpha_equal(whnf(empty_sig(), proj(2, pair(sort(), var(0))), f3), var(0)));
}

TEST_CASE("whnf stops at weak head normal form") {
  Fuel fuel;
  // The argument redex is untouched.
  TermPtr arg = app(lam("y", sort(), var(0)), sort());
  TermPtr t = pair(arg, arg);
  CHECK(alpha_equal(whnf(empty_sig(), t, fuel), t));
  CHECK(fuel.used() == 0);
  // A lambda is already weak head normal.
  TermPtr l = lam("x", sort(), app(lam("y", sort(), var(0)), var(0)));
  CHECK(alpha_equal(whnf(empty_sig(), l, fuel), l));
}

TEST_CASE("delta rules decode the universe") {
  Fuel fuel;
  CHECK(alpha_equal(whnf(usig(), app(cnst("T"), cnst("qstar")), fuel), cnst("U")));
  CHECK(fuel.used() == 1);

  // T (qFun qstar (\A. A)) unfolds to a Pi and normalizes the domain.
  TermPtr fam = lam("A", app(cnst("T"), cnst("qstar")), var(0));
  TermPtr code = apps(cnst("qFun"), {cnst("qstar"), fam});
  Fuel f2;
  TermPtr nf = normalize(usig(), app(cnst("T"), code), f2);
  CHECK(alpha_equal(nf, pi("a", cnst("U"), app(cnst("T"), var(0)))));

  // The qSum code decodes to a Sigma.
  TermPtr scode = apps(cnst("qSum"), {cnst("qstar"), fam});
  Fuel f3;
  CHECK(alpha_equal(normalize(usig(), app(cnst("T"), scode), f3),
                    sigma("a", cnst("U"), app(cnst("T"), var(0)))));
}

TEST_CASE("no delta rule firing returns the term as written") {
  // The scrutinee probe may spend fuel, but a variable-headed scrutinee means
  // the application is returned exactly as given, not with a reduced argument.
  TermPtr arg = app(lam("y", cnst("U"), var(0)), var(0));
  TermPtr t = app(cnst("T"), arg);
  Fuel fuel;
  TermPtr w = whnf(usig(), t, fuel);
  CHECK(alpha_equal(w, t));

  // Rigid constants without rules are inert.
  TermPtr eq = apps(cnst("Eq"), {cnst("qstar"), cnst("qstar")});
  Fuel f2;
  CHECK(alpha_equal(whnf(esig(), eq, f2), eq));
  CHECK(f2.used() == 0);
}

TEST_CASE("Rel unfolds by the constructor at its starred argument") {
  std::vector<Name> scope = {Name("a"), Name("b")};
  TermPtr t = parse_term("Rel qstar qstar reflstar a b", scope);
  Fuel fuel;
  CHECK(alpha_equal(whnf(esig(), t, fuel), parse_term("Eq a b", scope)));

  // A variable at the scrutinee keeps the spine inert.
  std::vector<Name> scope2 = {Name("e"), Name("x"), Name("y")};
  TermPtr stuck = parse_term("Rel qstar qstar e x y", scope2);
  Fuel f2;
  CHECK(alpha_equal(whnf(esig(), stuck, f2), stuck));
}

TEST_CASE("normalize handles nested redexes and is idempotent") {
  Fuel fuel;
  TermPtr t = app(lam("x", sort(), var(0)), app(lam("y", sort(), var(0)), sort()));
  CHECK(alpha_equal(normalize(empty_sig(), t, fuel), sort()));
  CHECK(fuel.used() == 2);

  Fuel f2;
  CHECK(alpha_equal(normalize(empty_sig(), proj(1, pair(sort(), sort())), f2), sort()));

  for (const RedexPair& p : generate_redexes(3, 4, 50)) {
    Fuel fa(kDefaultFuel);
    TermPtr once = normalize(empty_sig(), p.redex, fa);
    Fuel fb(kDefaultFuel);
    CHECK(alpha_equal(normalize(empty_sig(), once, fb), once));
  }
}

TEST_CASE("conv equates beta-delta-projection convertible terms") {
  Fuel fuel;
  CHECK(conv(empty_sig(), pi("x", sort(), var(0)), pi("y", sort(), var(0)), fuel));
  CHECK(!conv(empty_sig(), sort(), pi("A", sort(), var(0)), fuel));

  TermPtr fam = lam("A", app(cnst("T"), cnst("qstar")), var(0));
  TermPtr code = apps(cnst("qFun"), {cnst("qstar"), fam});
  CHECK(conv(usig(), app(cnst("T"), code), pi("a", cnst("U"), app(cnst("T"), var(0))), fuel));

  // Redex and reduct.
  CHECK(conv(empty_sig(), app(lam("x", sort(), var(0)), sort()), sort(), fuel));
  CHECK(conv(empty_sig(), proj(2, pair(sort(), pi("A", sort(), var(0)))),
             pi("A", sort(), var(0)), fuel));
}

TEST_CASE("conv has no eta and no surjective pairing") {
  // \(x:A). f x  vs  f  over scope (A : *, f : A -> A).
  TermPtr etaish = lam("x", var(1), app(var(1), var(0)));
  Fuel fuel;
  CHECK(!conv(empty_sig(), etaish, var(0), fuel));

  // (p.1, p.2) vs p over scope (p : Sg (x:*). *).
  TermPtr repacked = pair(proj(1, var(0)), proj(2, var(0)));
  CHECK(!conv(empty_sig(), repacked, var(0), fuel));
}

TEST_CASE("conv is reflexive and symmetric on generated judgments") {
  for (const GenJudgment& j : generate(4, 4, 60)) {
    Fuel f1(kDefaultFuel);
    CHECK(conv(empty_sig(), j.term, j.term, f1));
    Fuel f2(kDefaultFuel);
    Fuel f3(kDefaultFuel);
    bool ab = conv(empty_sig(), j.term, j.type, f2);
    bool ba = conv(empty_sig(), j.type, j.term, f3);
    CHECK(ab == ba);
  }
}

TEST_CASE("fuel exhaustion throws instead of reporting a verdict") {
  Fuel fuel(50);
  CHECK_THROWS_AS(whnf(empty_sig(), omega(), fuel), TypeError);
  try {
    Fuel f(50);
    whnf(empty_sig(), omega(), f);
  } catch (const TypeError& e) {
    CHECK(e.kind == ErrorKind::FuelExhausted);
  }
  try {
    Fuel f(50);
    conv(empty_sig(), omega(), sort(), f);
    CHECK(false);
  } catch (const TypeError& e) {
    CHECK(e.kind == ErrorKind::FuelExhausted);
  }
  // The looping side never contaminates a decidable comparison on the other.
  Fuel ok(kDefaultFuel);
  CHECK(conv(empty_sig(), sort(), sort(), ok));
  CHECK(ok.used() == 0);
}
