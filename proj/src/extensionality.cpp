#include "lstar/extensionality.hpp"

#include <utility>

#include "lstar/print.hpp"

namespace lstar {

TermPtr prime(const TermPtr& t) {
  switch (t->tag) {
    case Tag::Sort:
    case Tag::Const:
      return t;
    case Tag::Var:
      return var(t->index, Name(t->name.text, Marker::Primed));
    case Tag::Pi:
      return pi(Name(t->name.text, Marker::Primed), prime(t->a), prime(t->b));
    case Tag::Sigma:
      return sigma(Name(t->name.text, Marker::Primed), prime(t->a), prime(t->b));
    case Tag::Lam:
      return lam(Name(t->name.text, Marker::Primed), prime(t->a), prime(t->b));
    case Tag::App:
      return app(prime(t->a), prime(t->b));
    case Tag::Pair:
      return pair(prime(t->a), prime(t->b));
    case Tag::Proj:
      return proj(t->index, prime(t->a));
  }
  throw TypeError(ErrorKind::MalformedInput, t);
}

Context prime_context(const Context& ctx) {
  Context out;
  for (const ContextEntry& e : ctx.entries)
    out.push(Name(e.name.text, Marker::Primed), prime(e.type));
  return out;
}

namespace {

// Shared reindexing for the two embeddings: a free index k >= depth lands on
// depth + 3*(k - depth) + offset. The primed embedding also relabels every
// hint, bound or free.
TermPtr embed_at(const TermPtr& t, std::size_t depth, std::size_t offset, bool primed) {
  switch (t->tag) {
    case Tag::Sort:
    case Tag::Const:
      return t;
    case Tag::Var: {
      if (t->index == kUnresolved) throw TypeError(ErrorKind::MalformedInput, t);
      Name hint = primed ? Name(t->name.text, Marker::Primed) : t->name;
      if (t->index < depth) return var(t->index, hint);
      return var(depth + 3 * (t->index - depth) + offset, hint);
    }
    case Tag::Pi:
    case Tag::Sigma:
    case Tag::Lam: {
      Name binder = primed ? Name(t->name.text, Marker::Primed) : t->name;
      TermPtr a = embed_at(t->a, depth, offset, primed);
      TermPtr b = embed_at(t->b, depth + 1, offset, primed);
      if (t->tag == Tag::Pi) return pi(binder, std::move(a), std::move(b));
      if (t->tag == Tag::Sigma) return sigma(binder, std::move(a), std::move(b));
      return lam(binder, std::move(a), std::move(b));
    }
    case Tag::App:
      return app(embed_at(t->a, depth, offset, primed), embed_at(t->b, depth, offset, primed));
    case Tag::Pair:
      return pair(embed_at(t->a, depth, offset, primed), embed_at(t->b, depth, offset, primed));
    case Tag::Proj:
      return proj(t->index, embed_at(t->a, depth, offset, primed));
  }
  throw TypeError(ErrorKind::MalformedInput, t);
}

// The x* binder domain relating the plain and primed copies of a code. In
// lstarUeq this is the sort-valued Rel; internally it is the coded relation,
// collapsed to T (qEq x x') when the code is qstar (the delta-normal form of
// T (qRel qstar qstar reflstar x x')), which keeps iterated translation
// inside the translatable fragment.
TermPtr rel_domain(Mode mode, TermPtr code_p, TermPtr code_pp, TermPtr code_s,
                   TermPtr x, TermPtr xp) {
  if (mode == Mode::Internal) {
    TermPtr code = is_const(code_p, "qstar")
                       ? apps(cnst("qEq"), {std::move(x), std::move(xp)})
                       : apps(cnst("qRel"), {std::move(code_p), std::move(code_pp),
                                             std::move(code_s), std::move(x), std::move(xp)});
    return app(cnst("T"), std::move(code));
  }
  return apps(cnst("Rel"), {std::move(code_p), std::move(code_pp), std::move(code_s),
                            std::move(x), std::move(xp)});
}

// Splits a lambda annotation or context entry type of shape T <code>.
const TermPtr& decoded_code(const TermPtr& type) {
  static const TermPtr missing;
  if (type->tag != Tag::App || !is_const(type->a, "T")) return missing;
  return type->b;
}

}  // namespace

TermPtr embed_plain(const TermPtr& t, std::size_t depth) {
  return embed_at(t, depth, 2, false);
}

TermPtr embed_prime(const TermPtr& t, std::size_t depth) {
  return embed_at(t, depth, 1, true);
}

TermPtr star(const TermPtr& t, Mode mode) {
  switch (t->tag) {
    case Tag::Var:
      if (t->index == kUnresolved) throw TypeError(ErrorKind::MalformedInput, t);
      return var(3 * t->index, Name(t->name.text, Marker::Starred));
    case Tag::Const:
      if (t->name.text == "qstar") return cnst("reflstar");
      throw TypeError(ErrorKind::MalformedInput, t);
    case Tag::Lam: {
      const TermPtr& code = decoded_code(t->a);
      if (!code) throw TypeError(ErrorKind::MalformedInput, t);
      Name x(t->name.text, Marker::Plain);
      Name xp(t->name.text, Marker::Primed);
      Name xs(t->name.text, Marker::Starred);
      TermPtr dom_plain = embed_plain(t->a);
      TermPtr dom_prime = shift(embed_prime(t->a), 1, 0);
      TermPtr dom_rel = rel_domain(mode,
                                   shift(embed_plain(code), 2, 0),
                                   shift(embed_prime(code), 2, 0),
                                   shift(star(code, mode), 2, 0),
                                   var(1, x), var(0, xp));
      return lam(x, std::move(dom_plain),
                 lam(xp, std::move(dom_prime),
                     lam(xs, std::move(dom_rel), star(t->b, mode))));
    }
    case Tag::App: {
      Spine s = spine(t);
      if (s.head->tag == Tag::Const) {
        const std::string& head = s.head->name.text;
        if ((head == "qFun" || head == "qSum") && s.args.size() == 2) {
          return apps(cnst(head == "qFun" ? "qFunE" : "qSumE"),
                      {embed_plain(s.args[0]), embed_prime(s.args[0]),
                       embed_plain(s.args[1]), embed_prime(s.args[1]),
                       star(s.args[0], mode), star(s.args[1], mode)});
        }
        if (mode == Mode::Internal && head == "qEq" && s.args.size() == 2) {
          return apps(cnst("qEqE"),
                      {embed_plain(s.args[0]), embed_prime(s.args[0]),
                       star(s.args[0], mode),
                       embed_plain(s.args[1]), embed_prime(s.args[1]),
                       star(s.args[1], mode)});
        }
        if (mode == Mode::Internal && head == "qRel" && s.args.size() == 5) {
          std::vector<TermPtr> pieces;
          for (const TermPtr& arg : s.args) {
            pieces.push_back(embed_plain(arg));
            pieces.push_back(embed_prime(arg));
            pieces.push_back(star(arg, mode));
          }
          return apps(cnst("qRelE"), pieces);
        }
      }
      return app(app(app(star(t->a, mode), embed_plain(t->b)), embed_prime(t->b)),
                 star(t->b, mode));
    }
    case Tag::Pair:
      return pair(star(t->a, mode), star(t->b, mode));
    case Tag::Proj:
      return proj(t->index, star(t->a, mode));
    case Tag::Sort:
    case Tag::Pi:
    case Tag::Sigma:
      throw TypeError(ErrorKind::MalformedInput, t);
  }
  throw TypeError(ErrorKind::MalformedInput, t);
}

Context star_context(const Context& ctx, Mode mode) {
  Context out;
  for (const ContextEntry& e : ctx.entries) {
    const TermPtr& code = decoded_code(e.type);
    if (!code) throw TypeError(ErrorKind::NotAUContext, e.type);
    Name x(e.name.text, Marker::Plain);
    Name xp(e.name.text, Marker::Primed);
    Name xs(e.name.text, Marker::Starred);
    out.push(x, embed_plain(e.type, 0));
    out.push(xp, shift(embed_prime(e.type, 0), 1, 0));
    out.push(xs, rel_domain(mode,
                            shift(embed_plain(code, 0), 2, 0),
                            shift(embed_prime(code, 0), 2, 0),
                            shift(star(code, mode), 2, 0),
                            var(1, x), var(0, xp)));
  }
  return out;
}

bool is_U_context(const Signature& sig, const Context& ctx, Fuel& fuel) {
  Context prefix;
  for (const ContextEntry& e : ctx.entries) {
    // The translation reads the code off the entry as written, so the shape
    // test is syntactic; only the code's typing is up to conversion.
    const TermPtr& code = decoded_code(e.type);
    if (!code) return false;
    try {
      check(sig, prefix, code, cnst("U"), fuel);
    } catch (const TypeError& err) {
      if (err.kind == ErrorKind::FuelExhausted) throw;
      return false;
    }
    prefix.push(e.name, e.type);
  }
  return true;
}

WitnessReport check_prime_typing(const Context& ctx, const TermPtr& m, const TermPtr& a,
                                 Mode mode, long long fuel_budget) {
  WitnessReport rep;
  rep.mode = mode;
  rep.source_ctx = ctx;
  rep.source_term = m;
  rep.source_type = a;
  Fuel fuel(fuel_budget);
  std::vector<Name> scope = context_scope(ctx);
  const char* phase = "source judgment";
  try {
    const Signature& sig = declare_signature(mode);
    check_context(sig, ctx, fuel);
    check(sig, ctx, m, a, fuel);
    rep.translated_ctx = prime_context(ctx);
    rep.witness = prime(m);
    rep.goal = prime(a);
    rep.goal_display = rep.goal;
    scope = context_scope(rep.translated_ctx);
    phase = "primed judgment";
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

namespace {

// Rewrites Rel qstar qstar reflstar X Y to Eq X Y, bottom-up, purely for
// report readability. The checked goal stays as constructed.
TermPtr eq_display(const TermPtr& t) {
  TermPtr out;
  switch (t->tag) {
    case Tag::Sort:
    case Tag::Var:
    case Tag::Const:
      return t;
    case Tag::Pi:
      return pi(t->name, eq_display(t->a), eq_display(t->b));
    case Tag::Sigma:
      return sigma(t->name, eq_display(t->a), eq_display(t->b));
    case Tag::Lam:
      return lam(t->name, eq_display(t->a), eq_display(t->b));
    case Tag::App:
      out = app(eq_display(t->a), eq_display(t->b));
      break;
    case Tag::Pair:
      return pair(eq_display(t->a), eq_display(t->b));
    case Tag::Proj:
      return proj(t->index, eq_display(t->a));
  }
  Spine s = spine(out);
  if (is_const(s.head, "Rel") && s.args.size() == 5 && is_const(s.args[0], "qstar") &&
      is_const(s.args[1], "qstar") && is_const(s.args[2], "reflstar"))
    return apps(cnst("Eq"), {s.args[3], s.args[4]});
  return out;
}

}  // namespace

WitnessReport check_extensionality(const Context& ctx, const TermPtr& m, const TermPtr& a,
                                   long long fuel_budget) {
  WitnessReport rep;
  rep.mode = Mode::LStarUEq;
  rep.source_ctx = ctx;
  rep.source_term = m;
  rep.source_type = a;
  Fuel fuel(fuel_budget);
  std::vector<Name> scope = context_scope(ctx);
  const char* phase = "source judgment";
  try {
    const Signature& usig = declare_signature(Mode::LStarU);
    if (!is_U_context(usig, ctx, fuel)) {
      TypeError err(ErrorKind::NotAUContext);
      err.where = "every assumption must have shape x : T <code>";
      throw err;
    }
    check_context(usig, ctx, fuel);
    check(usig, ctx, a, cnst("U"), fuel);
    check(usig, ctx, m, app(cnst("T"), a), fuel);
    rep.translated_ctx = star_context(ctx, Mode::LStarUEq);
    rep.witness = star(m, Mode::LStarUEq);
    rep.goal = apps(cnst("Rel"), {embed_plain(a, 0), embed_prime(a, 0),
                                  star(a, Mode::LStarUEq), embed_plain(m, 0),
                                  embed_prime(m, 0)});
    rep.goal_display = eq_display(rep.goal);
    scope = context_scope(rep.translated_ctx);
    phase = "starred judgment";
    const Signature& esig = declare_signature(Mode::LStarUEq);
    check_context(esig, rep.translated_ctx, fuel);
    check(esig, rep.translated_ctx, rep.witness, rep.goal, fuel);
    rep.status = Status::Proved;
  } catch (const TypeError& e) {
    rep.status = e.kind == ErrorKind::FuelExhausted ? Status::FuelExhausted : Status::Failed;
    rep.diagnostics.push_back(std::string(phase) + ": " + describe(e, scope));
  }
  rep.steps = fuel.used();
  return rep;
}

}  // namespace lstar
