#include "lstar/universe.hpp"

#include "lstar/print.hpp"

namespace lstar {

TermPtr reflect(const TermPtr& t) {
  switch (t->tag) {
    case Tag::Sort:
      return cnst("qstar");
    case Tag::Var:
      if (t->index == kUnresolved) throw TypeError(ErrorKind::MalformedInput, t);
      return t;
    case Tag::Const:
      throw TypeError(ErrorKind::MalformedInput, t);
    case Tag::Pi:
    case Tag::Sigma: {
      TermPtr dom_code = reflect(t->a);
      TermPtr family = lam(t->name, app(cnst("T"), dom_code), reflect(t->b));
      return apps(cnst(t->tag == Tag::Pi ? "qFun" : "qSum"), {dom_code, family});
    }
    case Tag::Lam:
      return lam(t->name, app(cnst("T"), reflect(t->a)), reflect(t->b));
    case Tag::App:
      return app(reflect(t->a), reflect(t->b));
    case Tag::Pair:
      return pair(reflect(t->a), reflect(t->b));
    case Tag::Proj:
      return proj(t->index, reflect(t->a));
  }
  throw TypeError(ErrorKind::MalformedInput, t);
}

Context reflect_context(const Context& ctx) {
  Context out;
  for (const ContextEntry& e : ctx.entries)
    out.push(e.name, app(cnst("T"), reflect(e.type)));
  return out;
}

WitnessReport check_reflection(const Context& ctx, const TermPtr& m, const TermPtr& a,
                               long long fuel_budget) {
  WitnessReport rep;
  rep.mode = Mode::LStarU;
  rep.source_ctx = ctx;
  rep.source_term = m;
  rep.source_type = a;
  Fuel fuel(fuel_budget);
  std::vector<Name> scope = context_scope(ctx);
  const char* phase = "source judgment";
  try {
    const Signature& base = declare_signature(Mode::LStar);
    check_context(base, ctx, fuel);
    check(base, ctx, m, a, fuel);
    rep.translated_ctx = reflect_context(ctx);
    rep.witness = reflect(m);
    rep.goal = app(cnst("T"), reflect(a));
    rep.goal_display = rep.goal;
    scope = context_scope(rep.translated_ctx);
    phase = "translated judgment";
    const Signature& target = declare_signature(Mode::LStarU);
    check_context(target, rep.translated_ctx, fuel);
    check(target, rep.translated_ctx, rep.witness, rep.goal, fuel);
    rep.status = Status::Proved;
  } catch (const TypeError& e) {
    rep.status = e.kind == ErrorKind::FuelExhausted ? Status::FuelExhausted : Status::Failed;
    rep.diagnostics.push_back(std::string(phase) + ": " + describe(e, scope));
  }
  rep.steps = fuel.used();
  return rep;
}

}  // namespace lstar
