#include "lstar/internal_universe.hpp"

#include "lstar/print.hpp"

namespace lstar {

TermPtr star_internal(const TermPtr& t) {
  return star(t, Mode::Internal);
}

Context star_context_internal(const Context& ctx) {
  return star_context(ctx, Mode::Internal);
}

WitnessReport check_extensionality_internal(const Context& ctx, const TermPtr& m,
                                            const TermPtr& a, long long fuel_budget) {
  WitnessReport rep;
  rep.mode = Mode::Internal;
  rep.source_ctx = ctx;
  rep.source_term = m;
  rep.source_type = a;
  Fuel fuel(fuel_budget);
  std::vector<Name> scope = context_scope(ctx);
  const char* phase = "source judgment";
  try {
    const Signature& sig = declare_signature(Mode::Internal);
    if (!is_U_context(sig, ctx, fuel)) {
      TypeError err(ErrorKind::NotAUContext);
      err.where = "every assumption must have shape x : T <code>";
      throw err;
    }
    check_context(sig, ctx, fuel);
    check(sig, ctx, a, cnst("U"), fuel);
    check(sig, ctx, m, app(cnst("T"), a), fuel);
    rep.translated_ctx = star_context_internal(ctx);
    rep.witness = star_internal(m);
    rep.goal = app(cnst("T"),
                   apps(cnst("rel"), {embed_plain(a, 0), embed_prime(a, 0), star_internal(a),
                                      embed_plain(m, 0), embed_prime(m, 0)}));
    rep.goal_display = rep.goal;
    scope = context_scope(rep.translated_ctx);
    phase = "starred judgment";
    check_context(sig, rep.translated_ctx, fuel);
    check(sig, rep.translated_ctx, rep.witness, rep.goal, fuel);
    rep.status = Status::Proved;
  } catch (const TypeError& e) {
    rep.status = e.kind == ErrorKind::FuelExhausted ? Status::FuelExhausted : Status::Failed;
    rep.diagnostics.push_back(std::string(phase) + ": " + describe(e, scope));
  }
  rep.steps = fuel.used();
  return rep;
}

TowerReport check_tower_identity(long long fuel_budget) {
  TowerReport tower;

  // id : T C with C the code of (A : *) -> (x : A) -> A.
  TermPtr t_qstar = app(cnst("T"), cnst("qstar"));
  TermPtr id_term = lam("A", t_qstar, lam("x", app(cnst("T"), var(0, "A")), var(0, "x")));
  TermPtr id_code =
      apps(cnst("qFun"),
           {cnst("qstar"),
            lam("A", t_qstar,
                apps(cnst("qFun"),
                     {var(0, "A"), lam("x", app(cnst("T"), var(0, "A")), var(1, "A"))}))});

  tower.dim1 = check_extensionality_internal(Context{}, id_term, id_code, fuel_budget);
  if (tower.dim1.status != Status::Proved) {
    tower.diagnostics.push_back("dimension-1 witness was not proved");
    return tower;
  }

  // (a) The coded dimension-2 judgment: the dimension-1 witness inhabits the
  // code of its own goal. Everything is closed, so the embeddings are just
  // the identity and a marker relabelling.
  const Signature& sig = declare_signature(Mode::Internal);
  TermPtr coded_goal =
      app(cnst("T"), apps(cnst("qRel"), {id_code, prime(id_code), star_internal(id_code),
                                         id_term, prime(id_term)}));
  {
    Fuel fuel(fuel_budget);
    try {
      check(sig, Context{}, tower.dim1.witness, coded_goal, fuel);
      tower.coded_judgment_ok = true;
    } catch (const TypeError& e) {
      tower.diagnostics.push_back("coded dimension-2 judgment: " + describe(e));
    }
  }

  // (b) The witness is exactly the lambda-closure of x* over the starred
  // telescope of (A : T qstar, x : T A).
  Context telescope;
  telescope.push("A", t_qstar);
  telescope.push("x", app(cnst("T"), var(0, "A")));
  Context gamma2 = star_context_internal(telescope);
  TermPtr closure = var(0, Name("x", Marker::Starred));
  for (std::size_t i = gamma2.size(); i-- > 0;)
    closure = lam(gamma2.entries[i].name, gamma2.entries[i].type, std::move(closure));
  tower.closure_matches = alpha_equal(closure, tower.dim1.witness);
  if (!tower.closure_matches)
    tower.diagnostics.push_back("dimension-1 witness is not the closure of x*");

  // (c) Dimension-2 extensionality: the opened judgment gamma2 |- x* : T a2
  // with a2 = qRel A A' A* x x' is itself a U-context judgment, so the
  // translation applies to it one dimension up.
  const TermPtr& x_star_type = gamma2.entries.back().type;
  TermPtr a2 = shift(x_star_type->b, 1, 0);  // strip T, move under the x* entry
  tower.dim2 = check_extensionality_internal(gamma2, var(0, Name("x", Marker::Starred)), a2,
                                             fuel_budget);
  if (tower.dim2.status != Status::Proved)
    tower.diagnostics.push_back("dimension-2 witness was not proved");
  return tower;
}

}  // namespace lstar
