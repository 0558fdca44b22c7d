#include "lstar/typecheck.hpp"

#include <utility>

namespace lstar {

void Context::push(Name name, TermPtr type) {
  entries.push_back({std::move(name), std::move(type)});
}

void Context::pop() { entries.pop_back(); }

TermPtr Context::var_type(std::size_t index) const {
  if (index == kUnresolved || index >= entries.size())
    throw TypeError(ErrorKind::UnboundVariable, var(index));
  return shift(binder(index).type, static_cast<long long>(index) + 1, 0);
}

const ContextEntry& Context::binder(std::size_t index) const {
  if (index == kUnresolved || index >= entries.size())
    throw TypeError(ErrorKind::UnboundVariable, var(index));
  return entries[entries.size() - 1 - index];
}

Context extend(const Context& ctx, Name name, TermPtr type) {
  Context out = ctx;
  out.push(std::move(name), std::move(type));
  return out;
}

void check_context(const Signature& sig, const Context& ctx, Fuel& fuel) {
  Context prefix;
  for (const ContextEntry& e : ctx.entries) {
    try {
      check(sig, prefix, e.type, sort(), fuel);
    } catch (TypeError& err) {
      if (err.kind != ErrorKind::FuelExhausted && err.where.empty())
        err.where = "while checking context entry " + show_name(e.name);
      throw;
    }
    prefix.push(e.name, e.type);
  }
}

namespace {

// Verifies that `type` may classify terms: either * itself or something that
// infers a type convertible to *.
void require_type(const Signature& sig, const Context& ctx, const TermPtr& type, Fuel& fuel) {
  if (type->tag == Tag::Sort) return;
  TermPtr of = infer(sig, ctx, type, fuel);
  if (!conv(sig, of, sort(), fuel))
    throw TypeError(ErrorKind::NotASort, type, sort(), of);
}

// Assembles a Mismatch whose sides are normalized for display as far as the
// remaining fuel allows; on exhaustion the raw side is kept.
TypeError mismatch(const Signature& sig, const TermPtr& subject, const TermPtr& expected,
                   const TermPtr& got, Fuel& fuel) {
  TermPtr ne = expected;
  TermPtr ng = got;
  try {
    ne = normalize(sig, expected, fuel);
  } catch (const TypeError& e) {
    if (e.kind != ErrorKind::FuelExhausted) throw;
  }
  try {
    ng = normalize(sig, got, fuel);
  } catch (const TypeError& e) {
    if (e.kind != ErrorKind::FuelExhausted) throw;
  }
  return TypeError(ErrorKind::Mismatch, subject, ne, ng);
}

// Check-mode workhorse. The expected type is trusted here: it was verified by
// the public entry point or produced by inference. Re-inferring it on every
// recursive call would reject types that are convertible to well-formed ones
// but not themselves inferable — projections of literal pairs, which appear
// as soon as a delta rule is instantiated with pair arguments.
void check_rec(const Signature& sig, const Context& ctx, const TermPtr& term,
               const TermPtr& type, Fuel& fuel);

}  // namespace

TermPtr infer(const Signature& sig, const Context& ctx, const TermPtr& term, Fuel& fuel) {
  switch (term->tag) {
    case Tag::Sort:
      return sort();
    case Tag::Var:
      if (term->index == kUnresolved) throw TypeError(ErrorKind::MalformedInput, term);
      return ctx.var_type(term->index);
    case Tag::Const: {
      const ConstDecl* decl = sig.find(term->name.text);
      if (!decl) throw TypeError(ErrorKind::UnboundVariable, term);
      return decl->type;
    }
    case Tag::Pi:
    case Tag::Sigma:
      check_rec(sig, ctx, term->a, sort(), fuel);
      check_rec(sig, extend(ctx, term->name, term->a), term->b, sort(), fuel);
      return sort();
    case Tag::Lam: {
      check_rec(sig, ctx, term->a, sort(), fuel);
      TermPtr body_type = infer(sig, extend(ctx, term->name, term->a), term->b, fuel);
      return pi(term->name, term->a, body_type);
    }
    case Tag::App: {
      TermPtr fn_type = whnf(sig, infer(sig, ctx, term->a, fuel), fuel);
      if (fn_type->tag != Tag::Pi)
        throw TypeError(ErrorKind::NotAFunction, term->a, nullptr, fn_type);
      check_rec(sig, ctx, term->b, fn_type->a, fuel);
      return subst(fn_type->b, 0, term->b);
    }
    case Tag::Pair:
      throw TypeError(ErrorKind::CannotInfer, term);
    case Tag::Proj: {
      TermPtr subject_type = whnf(sig, infer(sig, ctx, term->a, fuel), fuel);
      if (subject_type->tag != Tag::Sigma)
        throw TypeError(ErrorKind::NotAPair, term->a, nullptr, subject_type);
      if (term->index == 1) return subject_type->a;
      return subst(subject_type->b, 0, proj(1, term->a));
    }
  }
  throw TypeError(ErrorKind::MalformedInput, term);
}

namespace {

void check_rec(const Signature& sig, const Context& ctx, const TermPtr& term,
               const TermPtr& type, Fuel& fuel) {
  switch (term->tag) {
    case Tag::Pair: {
      TermPtr w = whnf(sig, type, fuel);
      if (w->tag != Tag::Sigma) throw TypeError(ErrorKind::NotAPair, term, type);
      check_rec(sig, ctx, term->a, w->a, fuel);
      check_rec(sig, ctx, term->b, subst(w->b, 0, term->a), fuel);
      return;
    }
    case Tag::Lam: {
      // Check-mode propagation: pairs may sit under lambdas, so the body is
      // checked against the codomain rather than inferred.
      TermPtr w = whnf(sig, type, fuel);
      if (w->tag != Tag::Pi) throw TypeError(ErrorKind::NotAFunction, term, type);
      check_rec(sig, ctx, term->a, sort(), fuel);
      if (!conv(sig, term->a, w->a, fuel)) throw mismatch(sig, term, w->a, term->a, fuel);
      check_rec(sig, extend(ctx, term->name, term->a), term->b, w->b, fuel);
      return;
    }
    default: {
      TermPtr got = infer(sig, ctx, term, fuel);
      if (!conv(sig, got, type, fuel)) throw mismatch(sig, term, type, got, fuel);
    }
  }
}

}  // namespace

void check(const Signature& sig, const Context& ctx, const TermPtr& term,
           const TermPtr& type, Fuel& fuel) {
  require_type(sig, ctx, type, fuel);
  check_rec(sig, ctx, term, type, fuel);
}

}  // namespace lstar
