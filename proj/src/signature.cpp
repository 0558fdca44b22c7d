#include "lstar/signature.hpp"

#include <cstdlib>
#include <utility>

#include "lstar/errors.hpp"
#include "lstar/typecheck.hpp"

namespace lstar {

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::LStar: return "lstar";
    case Mode::LStarU: return "lstarU";
    case Mode::LStarUEq: return "lstarUeq";
    case Mode::Internal: return "internal";
  }
  return "lstar";
}

bool mode_from_string(const std::string& text, Mode& out) {
  if (text == "lstar") out = Mode::LStar;
  else if (text == "lstarU") out = Mode::LStarU;
  else if (text == "lstarUeq") out = Mode::LStarUEq;
  else if (text == "internal") out = Mode::Internal;
  else return false;
  return true;
}

const ConstDecl* Signature::find(const std::string& name) const {
  for (const ConstDecl& d : constants)
    if (d.name == name) return &d;
  return nullptr;
}

bool Signature::reducible(const std::string& head) const { return head_info(head) != nullptr; }

const DeltaRule* Signature::head_info(const std::string& head) const {
  for (const DeltaRule& r : rules)
    if (r.head == head) return &r;
  return nullptr;
}

const DeltaRule* Signature::rule(const std::string& head, const std::string& pattern) const {
  for (const DeltaRule& r : rules)
    if (r.head == head && r.pattern_head == pattern) return &r;
  return nullptr;
}

namespace {

// Declares one constant: the named type is resolved against the constants so
// far, checked against * over the empty context, and appended. A failure here
// is a construction bug, so it aborts loudly.
void declare(Signature& sig, std::set<std::string>& names, const char* name,
             const TermPtr& named_type) {
  TermPtr ty = resolve(named_type, {}, names);
  Fuel fuel(kDefaultFuel);
  check(sig, Context{}, ty, sort(), fuel);
  sig.constants.push_back({name, ty});
  names.insert(name);
}

// Appends one rewrite rule. `metavars` lists the template variables,
// outermost first: the pattern arguments followed by the rule arguments.
void add_rule(Signature& sig, const std::set<std::string>& names, const char* head,
              std::size_t arity, std::size_t scrutinee, const char* pattern,
              std::size_t pattern_arity, const std::vector<Name>& metavars,
              const TermPtr& named_rhs) {
  DeltaRule r;
  r.head = head;
  r.arity = arity;
  r.scrutinee = scrutinee;
  r.pattern_head = pattern;
  r.pattern_arity = pattern_arity;
  r.rhs = resolve(named_rhs, metavars, names);
  sig.rules.push_back(std::move(r));
}

TermPtr v(const char* s) { return uvar(s); }

// Right-fold of a named binder telescope onto a result type.
TermPtr telescope(const std::vector<std::pair<Name, TermPtr>>& binders, TermPtr result) {
  for (std::size_t i = binders.size(); i-- > 0;)
    result = pi(binders[i].first, binders[i].second, std::move(result));
  return result;
}

Signature build(Mode mode) {
  Signature sig;
  sig.mode = mode;
  if (mode == Mode::LStar) return sig;

  std::set<std::string> names;
  auto T_ = [](TermPtr code) { return app(v("T"), std::move(code)); };

  // Base universe: U with decoding T and codes for *, Pi, Sigma.
  declare(sig, names, "U", sort());
  declare(sig, names, "T", pi("c", v("U"), sort()));
  declare(sig, names, "qstar", v("U"));
  auto code_former = [&] {
    return pi("A", v("U"), pi("B", pi("a", T_(v("A")), v("U")), v("U")));
  };
  declare(sig, names, "qFun", code_former());
  declare(sig, names, "qSum", code_former());

  add_rule(sig, names, "T", 1, 0, "qstar", 0, {"c"}, v("U"));
  add_rule(sig, names, "T", 1, 0, "qFun", 2, {"A", "B", "c"},
           pi("a", T_(v("A")), T_(app(v("B"), v("a")))));
  add_rule(sig, names, "T", 1, 0, "qSum", 2, {"A", "B", "c"},
           sigma("a", T_(v("A")), T_(app(v("B"), v("a")))));

  if (mode == Mode::LStarU) return sig;

  if (mode == Mode::LStarUEq) {
    // Sort-valued equality of codes and the logical relation over it.
    auto eq = [&](TermPtr a, TermPtr b) { return apps(v("Eq"), {std::move(a), std::move(b)}); };
    auto rel = [&](TermPtr a, TermPtr b, TermPtr e, TermPtr x, TermPtr y) {
      return apps(v("Rel"), {std::move(a), std::move(b), std::move(e), std::move(x), std::move(y)});
    };

    declare(sig, names, "Eq", pi("A", v("U"), pi("B", v("U"), sort())));
    declare(sig, names, "Rel",
            pi("A", v("U"), pi("B", v("U"), pi("e", eq(v("A"), v("B")),
              pi("a", T_(v("A")), pi("b", T_(v("B")), sort()))))));
    declare(sig, names, "reflstar", eq(v("qstar"), v("qstar")));

    auto congruence = [&](const char* code) {
      TermPtr be =
          pi("a", T_(v("A")), pi("a'", T_(v("A'")),
            pi("a*", rel(v("A"), v("A'"), v("A*"), v("a"), v("a'")),
              eq(app(v("B"), v("a")), app(v("B'"), v("a'"))))));
      return pi("A", v("U"), pi("A'", v("U"),
             pi("B", pi("a", T_(v("A")), v("U")), pi("B'", pi("a'", T_(v("A'")), v("U")),
             pi("A*", eq(v("A"), v("A'")), pi("B*", be,
               eq(apps(v(code), {v("A"), v("B")}), apps(v(code), {v("A'"), v("B'")}))))))));
    };
    declare(sig, names, "qFunE", congruence("qFun"));
    declare(sig, names, "qSumE", congruence("qSum"));

    add_rule(sig, names, "Rel", 5, 2, "reflstar", 0, {"X0", "X1", "X2", "A", "B"},
             eq(v("A"), v("B")));
    add_rule(sig, names, "Rel", 5, 2, "qFunE", 6,
             {"A", "A'", "B", "B'", "A*", "B*", "X0", "X1", "X2", "f", "f'"},
             pi("x", T_(v("A")), pi("x'", T_(v("A'")),
               pi("x*", rel(v("A"), v("A'"), v("A*"), v("x"), v("x'")),
                 rel(app(v("B"), v("x")), app(v("B'"), v("x'")),
                     apps(v("B*"), {v("x"), v("x'"), v("x*")}),
                     app(v("f"), v("x")), app(v("f'"), v("x'")))))));
    add_rule(sig, names, "Rel", 5, 2, "qSumE", 6,
             {"A", "A'", "B", "B'", "A*", "B*", "X0", "X1", "X2", "p", "p'"},
             sigma("x*", rel(v("A"), v("A'"), v("A*"), proj(1, v("p")), proj(1, v("p'"))),
                   rel(app(v("B"), proj(1, v("p"))), app(v("B'"), proj(1, v("p'"))),
                       apps(v("B*"), {proj(1, v("p")), proj(1, v("p'")), v("x*")}),
                       proj(2, v("p")), proj(2, v("p'")))));
    return sig;
  }

  // Fully internal mode: equality and the relation are codes themselves,
  // decoded through rel, so the translation can consume its own output.
  auto qeq = [&](TermPtr a, TermPtr b) { return apps(v("qEq"), {std::move(a), std::move(b)}); };
  auto rel5 = [&](const char* head, TermPtr a, TermPtr b, TermPtr e, TermPtr x, TermPtr y) {
    return apps(v(head), {std::move(a), std::move(b), std::move(e), std::move(x), std::move(y)});
  };
  // qFun-coded function space over a coded domain.
  auto qfun = [&](const TermPtr& dom, const char* x, TermPtr body) {
    return apps(v("qFun"), {dom, lam(x, app(v("T"), dom), std::move(body))});
  };

  declare(sig, names, "qEq", pi("A", v("U"), pi("B", v("U"), v("U"))));
  auto rel_former = [&] {
    return pi("A", v("U"), pi("B", v("U"), pi("e", T_(qeq(v("A"), v("B"))),
           pi("a", T_(v("A")), pi("b", T_(v("B")), v("U"))))));
  };
  declare(sig, names, "qRel", rel_former());
  declare(sig, names, "rel", rel_former());
  declare(sig, names, "reflstar", T_(qeq(v("qstar"), v("qstar"))));

  auto congruence_i = [&](const char* code) {
    TermPtr be =
        pi("a", T_(v("A")), pi("a'", T_(v("A'")),
          pi("a*", T_(rel5("rel", v("A"), v("A'"), v("A*"), v("a"), v("a'"))),
            T_(qeq(app(v("B"), v("a")), app(v("B'"), v("a'")))))));
    return pi("A", v("U"), pi("A'", v("U"),
           pi("B", pi("a", T_(v("A")), v("U")), pi("B'", pi("a'", T_(v("A'")), v("U")),
           pi("A*", T_(qeq(v("A"), v("A'"))), pi("B*", be,
             T_(qeq(apps(v(code), {v("A"), v("B")}), apps(v(code), {v("A'"), v("B'")})))))))));
  };
  declare(sig, names, "qFunE", congruence_i("qFun"));
  declare(sig, names, "qSumE", congruence_i("qSum"));

  declare(sig, names, "qEqE",
          telescope({{"A", v("U")}, {"A'", v("U")}, {"A*", T_(qeq(v("A"), v("A'")))},
                     {"B", v("U")}, {"B'", v("U")}, {"B*", T_(qeq(v("B"), v("B'")))}},
                    T_(qeq(qeq(v("A"), v("B")), qeq(v("A'"), v("B'"))))));

  declare(sig, names, "qRelE",
          telescope({{"A", v("U")}, {"A'", v("U")}, {"A*", T_(qeq(v("A"), v("A'")))},
                     {"B", v("U")}, {"B'", v("U")}, {"B*", T_(qeq(v("B"), v("B'")))},
                     {"e", T_(qeq(v("A"), v("B")))}, {"e'", T_(qeq(v("A'"), v("B'")))},
                     {"e*", T_(rel5("rel", qeq(v("A"), v("B")), qeq(v("A'"), v("B'")),
                                   apps(v("qEqE"), {v("A"), v("A'"), v("A*"),
                                                    v("B"), v("B'"), v("B*")}),
                                   v("e"), v("e'")))},
                     {"a", T_(v("A"))}, {"a'", T_(v("A'"))},
                     {"a*", T_(rel5("rel", v("A"), v("A'"), v("A*"), v("a"), v("a'")))},
                     {"b", T_(v("B"))}, {"b'", T_(v("B'"))},
                     {"b*", T_(rel5("rel", v("B"), v("B'"), v("B*"), v("b"), v("b'")))}},
                    T_(qeq(rel5("qRel", v("A"), v("B"), v("e"), v("a"), v("b")),
                           rel5("qRel", v("A'"), v("B'"), v("e'"), v("a'"), v("b'"))))));

  add_rule(sig, names, "T", 1, 0, "qRel", 5, {"A", "B", "e", "a", "b", "c"},
           T_(rel5("rel", v("A"), v("B"), v("e"), v("a"), v("b"))));

  add_rule(sig, names, "rel", 5, 2, "reflstar", 0, {"X0", "X1", "X2", "A", "B"},
           qeq(v("A"), v("B")));
  add_rule(sig, names, "rel", 5, 2, "qFunE", 6,
           {"A", "A'", "B", "B'", "A*", "B*", "X0", "X1", "X2", "f", "f'"},
           apps(v("qFun"), {v("A"), lam("x", T_(v("A")),
             apps(v("qFun"), {v("A'"), lam("x'", T_(v("A'")),
               apps(v("qFun"), {rel5("rel", v("A"), v("A'"), v("A*"), v("x"), v("x'")),
                 lam("x*", T_(rel5("rel", v("A"), v("A'"), v("A*"), v("x"), v("x'"))),
                   rel5("rel", app(v("B"), v("x")), app(v("B'"), v("x'")),
                        apps(v("B*"), {v("x"), v("x'"), v("x*")}),
                        app(v("f"), v("x")), app(v("f'"), v("x'"))))}))}))}));
  add_rule(sig, names, "rel", 5, 2, "qSumE", 6,
           {"A", "A'", "B", "B'", "A*", "B*", "X0", "X1", "X2", "p", "p'"},
           apps(v("qSum"),
                {rel5("rel", v("A"), v("A'"), v("A*"), proj(1, v("p")), proj(1, v("p'"))),
                 lam("x*", T_(rel5("rel", v("A"), v("A'"), v("A*"), proj(1, v("p")),
                                   proj(1, v("p'")))),
                     rel5("rel", app(v("B"), proj(1, v("p"))), app(v("B'"), proj(1, v("p'"))),
                          apps(v("B*"), {proj(1, v("p")), proj(1, v("p'")), v("x*")}),
                          proj(2, v("p")), proj(2, v("p'"))))}));
  add_rule(sig, names, "rel", 5, 2, "qEqE", 6,
           {"A", "A'", "A*", "B", "B'", "B*", "X0", "X1", "X2", "e", "e'"},
           qfun(v("A"), "a",
           qfun(v("A'"), "a'",
           qfun(rel5("rel", v("A"), v("A'"), v("A*"), v("a"), v("a'")), "a*",
           qfun(v("B"), "b",
           qfun(v("B'"), "b'",
           qfun(rel5("rel", v("B"), v("B'"), v("B*"), v("b"), v("b'")), "b*",
                qeq(rel5("qRel", v("A"), v("B"), v("e"), v("a"), v("b")),
                    rel5("qRel", v("A'"), v("B'"), v("e'"), v("a'"), v("b'"))))))))));
  add_rule(sig, names, "rel", 5, 2, "qRelE", 15,
           {"A", "A'", "A*", "B", "B'", "B*", "e", "e'", "e*", "a", "a'", "a*",
            "b", "b'", "b*", "X0", "X1", "X2", "g", "g'"},
           rel5("qRel", rel5("qRel", v("A"), v("B"), v("e"), v("a"), v("b")),
                rel5("qRel", v("A'"), v("B'"), v("e'"), v("a'"), v("b'")),
                apps(v("e*"), {v("a"), v("a'"), v("a*"), v("b"), v("b'"), v("b*")}),
                v("g"), v("g'")));
  return sig;
}

}  // namespace

const Signature& declare_signature(Mode mode) {
  static const Signature lstar = build(Mode::LStar);
  static const Signature lstar_u = build(Mode::LStarU);
  static const Signature lstar_ueq = build(Mode::LStarUEq);
  static const Signature internal = build(Mode::Internal);
  switch (mode) {
    case Mode::LStar: return lstar;
    case Mode::LStarU: return lstar_u;
    case Mode::LStarUEq: return lstar_ueq;
    case Mode::Internal: return internal;
  }
  return lstar;
}

const std::set<std::string>& all_constant_names() {
  static const std::set<std::string> names = [] {
    std::set<std::string> out;
    for (Mode m : {Mode::LStar, Mode::LStarU, Mode::LStarUEq, Mode::Internal})
      for (const ConstDecl& d : declare_signature(m).constants) out.insert(d.name);
    return out;
  }();
  return names;
}

}  // namespace lstar
