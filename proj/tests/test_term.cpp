#include <doctest.h>

#include "lstar/errors.hpp"
#include "lstar/generate.hpp"
#include "lstar/term.hpp"

using namespace lstar;

TEST_CASE("names parse trailing markers") {
  Name plain("A");
  CHECK(plain.text == "A");
  CHECK(plain.marker == Marker::Plain);

  Name primed("A'");
  CHECK(primed.text == "A");
  CHECK(primed.marker == Marker::Primed);

  Name starred("x*");
  CHECK(starred.text == "x");
  CHECK(starred.marker == Marker::Starred);

  CHECK(show_name(primed) == "A'");
  CHECK(show_name(starred) == "x*");
  CHECK(same_name(Name("A'"), Name("A", Marker::Primed)));
  CHECK(!same_name(Name("A'"), Name("A")));
}

TEST_CASE("display hints never affect equality") {
  TermPtr x = var(0, "x");
  TermPtr y = var(0, "y'");
  CHECK(alpha_equal(x, y));
  CHECK(!marked_equal(x, y));
  CHECK(marked_equal(var(2, "a*"), var(2, Name("b", Marker::Starred))));

  TermPtr f = lam("x", sort(), var(0, "x"));
  TermPtr g = lam("z'", sort(), var(0, "w*"));
  CHECK(alpha_equal(f, g));
}

TEST_CASE("shift adjusts free indices only") {
  CHECK(alpha_equal(shift(var(0), 1, 0), var(1)));
  CHECK(alpha_equal(shift(lam("x", sort(), var(0)), 1, 0), lam("x", sort(), var(0))));
  CHECK(alpha_equal(shift(lam("x", sort(), var(1)), 2, 0), lam("x", sort(), var(3))));
  // Cutoff 1: the domain occurrence of index 0 is below it; the body's index 2
  // clears the adjusted cutoff and moves.
  CHECK(alpha_equal(shift(pi("x", var(0), var(2)), 3, 1), pi("x", var(0), var(5))));

  CHECK_THROWS_AS(shift(var(0), -1, 0), TypeError);
  try {
    shift(var(0), -1, 0);
  } catch (const TypeError& e) {
    CHECK(e.kind == ErrorKind::NegativeIndex);
  }
  // A bound occurrence is safe even with a negative amount.
  CHECK(alpha_equal(shift(lam("x", sort(), var(0)), -1, 1), lam("x", sort(), var(0))));
}

TEST_CASE("subst replaces the target and renumbers") {
  // x[x := *] = *
  CHECK(alpha_equal(subst(var(0), 0, sort()), sort()));
  // y[x := *] = y, with the vacated slot removed.
  CHECK(alpha_equal(subst(var(1), 0, sort()), var(0)));
  // No capture: the replacement is shifted under the binder it moves into.
  // Scope (y, x): substituting y for x inside \(z:*). x yields \(z:*). y.
  TermPtr body = lam("z", sort(), var(1));  // \(z:*). x  over scope (y, x)
  TermPtr out = subst(body, 0, var(0));     // x := y, y numbered in scope (y)
  CHECK(alpha_equal(out, lam("z", sort(), var(1))));  // \(z:*). y  over scope (y)
  // An occurrence of y above the target renumbers down.
  CHECK(alpha_equal(subst(app(var(0), var(1)), 0, sort()), app(sort(), var(0))));
}

TEST_CASE("substitution after weakening is the identity") {
  std::vector<TermPtr> samples = {
      sort(),
      var(0),
      pi("A", sort(), var(0)),
      lam("x", sort(), app(var(0), var(1))),
      sigma("p", sort(), pair(var(0), proj(1, var(1)))),
  };
  for (const TermPtr& t : samples) {
    CHECK(alpha_equal(subst(shift(t, 1, 0), 0, sort()), t));
    CHECK(alpha_equal(subst(shift(t, 1, 0), 0, lam("y", sort(), var(0))), t));
  }
}

TEST_CASE("substitution commutation") {
  // t[u/0][v/0] = t[v/1][ u[v/0] / 0 ]  when t has free vars 0 and 1.
  auto commutes = [](const TermPtr& t, const TermPtr& u, const TermPtr& v) {
    TermPtr lhs = subst(subst(t, 0, u), 0, v);
    TermPtr rhs = subst(subst(t, 1, v), 0, subst(u, 0, v));
    return alpha_equal(lhs, rhs);
  };
  // Scope (y, x) with u over (y), v closed.
  CHECK(commutes(app(var(0), var(1)), var(0), sort()));
  CHECK(commutes(lam("z", sort(), app(var(1), var(2))), lam("w", sort(), var(1)), sort()));
  CHECK(commutes(pair(var(0), var(1)), pi("A", sort(), var(1)), sort()));
}

TEST_CASE("instantiate fills template variables outermost first") {
  // Template over metavars (f, a): f a, i.e. Var1 Var0.
  TermPtr tmpl = app(var(1), var(0));
  TermPtr out = instantiate(tmpl, {lam("x", sort(), var(0)), sort()});
  CHECK(alpha_equal(out, app(lam("x", sort(), var(0)), sort())));
  // Under a binder the filled values are shifted.
  TermPtr tmpl2 = lam("y", sort(), app(var(1), var(0)));
  TermPtr out2 = instantiate(tmpl2, {var(0)});
  CHECK(alpha_equal(out2, lam("y", sort(), app(var(1), var(0)))));
}

TEST_CASE("occurs_free and scope_valid") {
  TermPtr t = lam("x", var(2), app(var(0), var(3)));
  CHECK(occurs_free(t, 2));
  CHECK(!occurs_free(t, 0));
  CHECK(!occurs_free(t, 1));
  CHECK(scope_valid(t, 3));
  CHECK(!scope_valid(t, 2));
  CHECK(scope_valid(sort(), 0));
  CHECK(!scope_valid(uvar("loose"), 10));
}

TEST_CASE("spine flattening and apps") {
  TermPtr t = apps(cnst("Rel"), {sort(), var(0), var(1)});
  Spine s = spine(t);
  CHECK(is_const(s.head, "Rel"));
  REQUIRE(s.args.size() == 3);
  CHECK(alpha_equal(s.args[0], sort()));
  CHECK(alpha_equal(s.args[2], var(1)));
  CHECK(alpha_equal(apps(s.head, s.args), t));

  Spine leaf = spine(var(4));
  CHECK(alpha_equal(leaf.head, var(4)));
  CHECK(leaf.args.empty());
}

TEST_CASE("resolve binds names through scope then constants") {
  std::vector<Name> scope = {Name("A"), Name("x")};
  std::set<std::string> constants = {"U", "qstar"};

  TermPtr t = resolve(app(uvar("x"), uvar("A")), scope, constants);
  CHECK(alpha_equal(t, app(var(0), var(1))));

  TermPtr c = resolve(uvar("qstar"), scope, constants);
  CHECK(is_const(c, "qstar"));

  // Markers participate in name lookup: x' is not the same binder as x.
  std::vector<Name> marked = {Name("x"), Name("x'")};
  TermPtr m = resolve(app(uvar("x"), uvar("x'")), marked, constants);
  CHECK(alpha_equal(m, app(var(1), var(0))));

  CHECK_THROWS_AS(resolve(uvar("missing"), scope, constants), TypeError);
  try {
    resolve(uvar("missing"), scope, constants);
  } catch (const TypeError& e) {
    CHECK(e.kind == ErrorKind::UnboundVariable);
  }

  // Shadowing resolves to the innermost (rightmost) entry.
  std::vector<Name> shadowed = {Name("x"), Name("x")};
  CHECK(alpha_equal(resolve(uvar("x"), shadowed, constants), var(0)));
}

TEST_CASE("generated substitution instances satisfy the weakening lemma") {
  for (const SubstInstance& s : generate_subst(5, 4, 100)) {
    // shift-then-subst cancels on the generated replacement.
    CHECK(alpha_equal(subst(shift(s.n, 1, 0), 0, s.n), s.n));
  }
}
