#include "lstar/reduce.hpp"

#include <utility>
#include <vector>

namespace lstar {

TermPtr whnf(const Signature& sig, TermPtr t, Fuel& fuel) {
  for (;;) {
    if (t->tag == Tag::App) {
      Spine s = spine(t);
      TermPtr head = whnf(sig, s.head, fuel);
      if (head->tag == Tag::Lam) {
        fuel.step(t);
        TermPtr next = subst(head->b, 0, s.args.front());
        t = apps(std::move(next), {s.args.begin() + 1, s.args.end()});
        continue;
      }
      if (head->tag == Tag::Const && sig.reducible(head->name.text)) {
        const DeltaRule* info = sig.head_info(head->name.text);
        if (s.args.size() >= info->arity) {
          // Probe the scrutinee; when no rule fires the probe's work is kept
          // (the fuel is spent) but the term is returned exactly as written.
          TermPtr scrut = whnf(sig, s.args[info->scrutinee], fuel);
          Spine ps = spine(scrut);
          if (ps.head->tag == Tag::Const) {
            const DeltaRule* r = sig.rule(head->name.text, ps.head->name.text);
            if (r && ps.args.size() == r->pattern_arity) {
              fuel.step(t);
              std::vector<TermPtr> values = std::move(ps.args);
              values.insert(values.end(), s.args.begin(),
                            s.args.begin() + static_cast<long>(r->arity));
              TermPtr reduced = instantiate(r->rhs, values);
              t = apps(std::move(reduced),
                       {s.args.begin() + static_cast<long>(r->arity), s.args.end()});
              continue;
            }
          }
        }
        return t;
      }
      if (head == s.head) return t;
      return apps(std::move(head), s.args);
    }
    if (t->tag == Tag::Proj) {
      TermPtr subject = whnf(sig, t->a, fuel);
      if (subject->tag == Tag::Pair) {
        fuel.step(t);
        t = t->index == 1 ? subject->a : subject->b;
        continue;
      }
      return subject == t->a ? t : proj(t->index, std::move(subject));
    }
    return t;
  }
}

TermPtr normalize(const Signature& sig, const TermPtr& t0, Fuel& fuel) {
  TermPtr t = whnf(sig, t0, fuel);
  switch (t->tag) {
    case Tag::Sort:
    case Tag::Var:
    case Tag::Const:
      return t;
    case Tag::Pi:
      return pi(t->name, normalize(sig, t->a, fuel), normalize(sig, t->b, fuel));
    case Tag::Sigma:
      return sigma(t->name, normalize(sig, t->a, fuel), normalize(sig, t->b, fuel));
    case Tag::Lam:
      return lam(t->name, normalize(sig, t->a, fuel), normalize(sig, t->b, fuel));
    case Tag::App:
      // Inert spine: no rule rewrites at this head, but the pieces still
      // normalize (delta rules only ever fire at the spine root).
      return app(normalize(sig, t->a, fuel), normalize(sig, t->b, fuel));
    case Tag::Pair:
      return pair(normalize(sig, t->a, fuel), normalize(sig, t->b, fuel));
    case Tag::Proj:
      return proj(t->index, normalize(sig, t->a, fuel));
  }
  return t;
}

bool conv(const Signature& sig, const TermPtr& x0, const TermPtr& y0, Fuel& fuel) {
  if (x0 == y0) return true;
  TermPtr x = whnf(sig, x0, fuel);
  TermPtr y = whnf(sig, y0, fuel);
  if (x == y) return true;
  if (x->tag != y->tag) return false;
  switch (x->tag) {
    case Tag::Sort:
      return true;
    case Tag::Var:
      return x->index == y->index;
    case Tag::Const:
      return x->name.text == y->name.text;
    case Tag::Pi:
    case Tag::Sigma:
    case Tag::Lam:
    case Tag::App:
    case Tag::Pair:
      return conv(sig, x->a, y->a, fuel) && conv(sig, x->b, y->b, fuel);
    case Tag::Proj:
      return x->index == y->index && conv(sig, x->a, y->a, fuel);
  }
  return false;
}

}  // namespace lstar
