#include "lstar/generate.hpp"

#include <random>
#include <utility>

#include "lstar/extensionality.hpp"
#include "lstar/signature.hpp"

namespace lstar {

const char* to_string(RuleCase c) {
  switch (c) {
    case RuleCase::Axiom: return "Axiom";
    case RuleCase::Variable: return "Variable";
    case RuleCase::Weakening: return "Weakening";
    case RuleCase::PiFormation: return "PiFormation";
    case RuleCase::SigmaFormation: return "SigmaFormation";
    case RuleCase::PiIntroduction: return "PiIntroduction";
    case RuleCase::PiElimination: return "PiElimination";
    case RuleCase::SigmaIntroduction: return "SigmaIntroduction";
    case RuleCase::SigmaElimination: return "SigmaElimination";
    case RuleCase::Conversion: return "Conversion";
  }
  return "?";
}

namespace {

constexpr const char* kTermHints[] = {"x", "y", "z", "u", "v", "w"};
constexpr const char* kTypeHints[] = {"A", "B", "C", "D"};

class Gen {
 public:
  Gen(std::uint64_t seed, int size) : rng_(seed), size_(size < 1 ? 1 : size) {}

  GenJudgment judgment() {
    for (int attempt = 0; attempt < 64; ++attempt) {
      Context ctx = seed_context();
      auto [type, term] = inhabited(ctx, size_);
      if (roll(4) == 0)  // wrap the type in a redex so conversion fires
        type = app(lam(Name("X"), sort(), var(0, Name("X"))), type);
      if (roll(4) == 0) {  // append an unused entry so weakening fires
        TermPtr extra = a_type(ctx, 1);
        ctx.push(fresh_term_hint(), extra);
        term = shift(term, 1, 0);
        type = shift(type, 1, 0);
      }
      if (!validate(ctx, term, type)) continue;
      return {ctx, term, type, judgment_cases(ctx, term, type)};
    }
    Context ctx;
    return {ctx, sort(), sort(), judgment_cases(ctx, sort(), sort())};
  }

  SubstInstance subst_instance() {
    for (int attempt = 0; attempt < 64; ++attempt) {
      Context ctx = seed_context();
      auto [b, n] = inhabited(ctx, size_ - 1);  // n : b over ctx
      ctx.push(fresh_term_hint(), b);
      auto [m_type, m] = inhabited(ctx, size_ - 1);
      ctx.pop();
      SubstInstance inst{ctx, b, m, m_type, n};
      if (!validate_subst(inst)) continue;
      return inst;
    }
    Context ctx;
    return {ctx, sort(), var(0, Name("x")), sort(), sort()};
  }

  RedexPair redex() {
    for (int attempt = 0; attempt < 64; ++attempt) {
      Context ctx = seed_context();
      auto [a_ty, a] = inhabited(ctx, size_ - 1);
      ctx.push(fresh_term_hint(), a_ty);
      auto [b_ty, b] = inhabited(ctx, size_ - 1);
      ctx.pop();
      RedexPair out;
      out.ctx = ctx;
      switch (roll(3)) {
        case 0:
          out.redex = app(lam(fresh_term_hint(), a_ty, b), a);
          out.reduct = subst(b, 0, a);
          break;
        case 1:
          out.redex = proj(1, pair(a, subst(b, 0, a)));
          out.reduct = a;
          break;
        default:
          out.redex = proj(2, pair(a, subst(b, 0, a)));
          out.reduct = subst(b, 0, a);
          break;
      }
      if (!validate_redex(out, a_ty, a, b_ty, b)) continue;
      return out;
    }
    Context ctx;
    TermPtr id = lam(Name("x"), sort(), var(0, Name("x")));
    return {ctx, app(id, sort()), sort()};
  }

  SubstInstance u_subst_instance() {
    const Signature& sig = declare_signature(Mode::LStarU);
    for (int attempt = 0; attempt < 64; ++attempt) {
      Context ctx = u_context();
      auto [code, n] = code_with_inhabitant(ctx);
      TermPtr b = app(cnst("T"), code);
      ctx.push(fresh_term_hint(), b);
      auto [m_type, m] = u_term(ctx, size_ - 1);
      ctx.pop();
      SubstInstance inst{ctx, b, m, m_type, n};
      if (!validate_u_subst(sig, inst)) continue;
      return inst;
    }
    Context ctx;
    return {ctx, app(cnst("T"), cnst("qstar")), var(0, Name("x")),
            app(cnst("T"), cnst("qstar")), cnst("qstar")};
  }

  RedexPair u_redex() {
    const Signature& sig = declare_signature(Mode::LStarU);
    for (int attempt = 0; attempt < 64; ++attempt) {
      Context ctx = u_context();
      RedexPair out;
      out.ctx = ctx;
      if (roll(3) == 0) {
        auto [a_ty, a] = u_term(ctx, size_ - 1);
        ctx.push(fresh_term_hint(), a_ty);
        auto [b_ty, b] = u_term(ctx, size_ - 1);
        ctx.pop();
        (void)b_ty;
        if (roll(2) == 0) {
          out.redex = proj(1, pair(a, subst(b, 0, a)));
          out.reduct = a;
        } else {
          out.redex = proj(2, pair(a, subst(b, 0, a)));
          out.reduct = subst(b, 0, a);
        }
      } else {
        auto [code, arg] = code_with_inhabitant(ctx);
        ctx.push(fresh_term_hint(), app(cnst("T"), code));
        auto [b_ty, b] = u_term(ctx, size_ - 1);
        ctx.pop();
        (void)b_ty;
        out.redex = app(lam(fresh_term_hint(), app(cnst("T"), code), b), arg);
        out.reduct = subst(b, 0, arg);
      }
      if (!validate_u_redex(sig, out)) continue;
      return out;
    }
    Context ctx;
    TermPtr dom = app(cnst("T"), cnst("qstar"));
    return {ctx, app(lam(Name("x"), dom, var(0, Name("x"))), cnst("qstar")),
            cnst("qstar")};
  }

 private:
  std::mt19937_64 rng_;
  int size_;
  int hint_at_ = 0;
  int type_hint_at_ = 0;

  int roll(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Name fresh_term_hint() {
    return Name(kTermHints[hint_at_++ % (sizeof(kTermHints) / sizeof(*kTermHints))]);
  }
  Name fresh_type_hint() {
    return Name(
        kTypeHints[type_hint_at_++ % (sizeof(kTypeHints) / sizeof(*kTypeHints))]);
  }

  // ---- plain lambda-star ------------------------------------------------

  Context seed_context() {
    Context ctx;
    int n = roll(4);
    for (int i = 0; i < n; ++i) ctx.push(fresh_term_hint(), a_type(ctx, size_ - 1));
    return ctx;
  }

  TermPtr a_type(Context& ctx, int depth) {
    if (depth <= 0) {
      if (roll(2) == 0) {
        TermPtr v = star_typed_var(ctx);
        if (v) return v;
      }
      return sort();
    }
    switch (roll(6)) {
      case 0:
        return sort();
      case 1: {
        TermPtr v = star_typed_var(ctx);
        return v ? v : sort();
      }
      case 2:
      case 3: {
        Name x = fresh_term_hint();
        TermPtr dom = a_type(ctx, depth - 1);
        ctx.push(x, dom);
        TermPtr cod = a_type(ctx, depth - 1);
        ctx.pop();
        return pi(x, dom, cod);
      }
      default: {
        Name x = fresh_term_hint();
        TermPtr dom = a_type(ctx, depth - 1);
        ctx.push(x, dom);
        TermPtr cod = a_type(ctx, depth - 1);
        ctx.pop();
        return sigma(x, dom, cod);
      }
    }
  }

  TermPtr star_typed_var(const Context& ctx) {
    std::vector<std::size_t> hits;
    for (std::size_t k = 0; k < ctx.size(); ++k)
      if (ctx.var_type(k)->tag == Tag::Sort) hits.push_back(k);
    if (hits.empty()) return nullptr;
    std::size_t k = hits[static_cast<std::size_t>(roll(static_cast<int>(hits.size())))];
    return var(k, ctx.binder(k).name);
  }

  // Returns a (type, term) judgment over ctx.
  std::pair<TermPtr, TermPtr> inhabited(Context& ctx, int depth) {
    int c = depth <= 0 ? roll(2) : roll(9);
    switch (c) {
      case 1: {
        if (ctx.empty()) break;
        std::size_t k = static_cast<std::size_t>(roll(static_cast<int>(ctx.size())));
        return {ctx.var_type(k), var(k, ctx.binder(k).name)};
      }
      case 2:
      case 3: {  // lambda
        Name x = fresh_term_hint();
        TermPtr dom = a_type(ctx, depth - 1);
        ctx.push(x, dom);
        auto [b_ty, b] = inhabited(ctx, depth - 1);
        ctx.pop();
        return {pi(x, dom, b_ty), lam(x, dom, b)};
      }
      case 4: {  // dependent pair, second component specialised by the first
        auto [a_ty, a] = inhabited(ctx, depth - 1);
        Name x = fresh_term_hint();
        ctx.push(x, a_ty);
        auto [b_ty, b] = inhabited(ctx, depth - 1);
        ctx.pop();
        return {sigma(x, a_ty, b_ty), pair(a, subst(b, 0, a))};
      }
      case 5: {  // beta redex
        auto [a_ty, a] = inhabited(ctx, depth - 1);
        Name x = fresh_term_hint();
        ctx.push(x, a_ty);
        auto [b_ty, b] = inhabited(ctx, depth - 1);
        ctx.pop();
        return {subst(b_ty, 0, a), app(lam(x, a_ty, b), a)};
      }
      case 6: {  // projection from a Sigma-typed variable
        std::vector<std::size_t> hits;
        for (std::size_t k = 0; k < ctx.size(); ++k)
          if (ctx.var_type(k)->tag == Tag::Sigma) hits.push_back(k);
        if (hits.empty()) break;
        std::size_t k =
            hits[static_cast<std::size_t>(roll(static_cast<int>(hits.size())))];
        TermPtr subject = var(k, ctx.binder(k).name);
        TermPtr ty = ctx.var_type(k);
        if (roll(2) == 0) return {ty->a, proj(1, subject)};
        return {subst(ty->b, 0, proj(1, subject)), proj(2, subject)};
      }
      case 7: {  // neutral application of a Pi-over-* variable to a type
        std::vector<std::size_t> hits;
        for (std::size_t k = 0; k < ctx.size(); ++k) {
          TermPtr ty = ctx.var_type(k);
          if (ty->tag == Tag::Pi && ty->a->tag == Tag::Sort) hits.push_back(k);
        }
        if (hits.empty()) break;
        std::size_t k =
            hits[static_cast<std::size_t>(roll(static_cast<int>(hits.size())))];
        TermPtr fn = var(k, ctx.binder(k).name);
        TermPtr arg = a_type(ctx, depth - 1);
        return {subst(ctx.var_type(k)->b, 0, arg), app(fn, arg)};
      }
      case 8: {  // type former used as a term
        Name x = fresh_type_hint();
        TermPtr dom = a_type(ctx, depth - 1);
        ctx.push(x, dom);
        TermPtr cod = a_type(ctx, depth - 1);
        ctx.pop();
        return {sort(), roll(2) == 0 ? pi(x, dom, cod) : sigma(x, dom, cod)};
      }
      default:
        break;
    }
    return {sort(), a_type(ctx, depth - 1)};
  }

  bool validate(const Context& ctx, const TermPtr& term, const TermPtr& type) {
    const Signature& sig = declare_signature(Mode::LStar);
    try {
      Fuel ctx_fuel(kDefaultFuel);
      check_context(sig, ctx, ctx_fuel);
      Fuel fuel(kDefaultFuel);
      check(sig, ctx, term, type, fuel);
      return true;
    } catch (const TypeError&) {
      return false;
    }
  }

  bool validate_subst(const SubstInstance& inst) {
    const Signature& sig = declare_signature(Mode::LStar);
    try {
      Fuel f1(kDefaultFuel);
      check_context(sig, inst.ctx, f1);
      Fuel f2(kDefaultFuel);
      check(sig, inst.ctx, inst.b, sort(), f2);
      Fuel f3(kDefaultFuel);
      check(sig, inst.ctx, inst.n, inst.b, f3);
      Context inner = extend(inst.ctx, Name("x"), inst.b);
      Fuel f4(kDefaultFuel);
      check(sig, inner, inst.m, inst.m_type, f4);
      return true;
    } catch (const TypeError&) {
      return false;
    }
  }

  bool validate_redex(const RedexPair& r, const TermPtr& a_ty, const TermPtr& a,
                      const TermPtr& b_ty, const TermPtr& b) {
    const Signature& sig = declare_signature(Mode::LStar);
    try {
      Fuel f1(kDefaultFuel);
      check_context(sig, r.ctx, f1);
      Fuel f2(kDefaultFuel);
      check(sig, r.ctx, a, a_ty, f2);
      Context inner = extend(r.ctx, Name("x"), a_ty);
      Fuel f3(kDefaultFuel);
      check(sig, inner, b, b_ty, f3);
      Fuel f4(kDefaultFuel);
      check(sig, r.ctx, r.reduct, subst(b_ty, 0, a), f4);
      return true;
    } catch (const TypeError&) {
      return false;
    }
  }

  // ---- translatable fragment ---------------------------------------------

  Context u_context() {
    Context ctx;
    ctx.push(fresh_type_hint(), app(cnst("T"), cnst("qstar")));
    if (roll(2) == 0) ctx.push(fresh_term_hint(), app(cnst("T"), var(0)));
    if (roll(2) == 0) ctx.push(fresh_type_hint(), app(cnst("T"), cnst("qstar")));
    if (roll(3) == 0) {
      // a pair entry: p : T (qSum A (\y:T A. A))
      std::size_t a = code_var_index(ctx);
      TermPtr ca = var(a, ctx.binder(a).name);
      TermPtr fam = lam(fresh_term_hint(), app(cnst("T"), ca), shift(ca, 1, 0));
      ctx.push(fresh_term_hint(),
               app(cnst("T"), apps(cnst("qSum"), {ca, fam})));
    }
    if (roll(3) == 0) {
      // a function entry: f : T (qFun A (\y:T A. A))
      std::size_t a = code_var_index(ctx);
      TermPtr ca = var(a, ctx.binder(a).name);
      TermPtr fam = lam(fresh_term_hint(), app(cnst("T"), ca), shift(ca, 1, 0));
      ctx.push(fresh_term_hint(),
               app(cnst("T"), apps(cnst("qFun"), {ca, fam})));
    }
    return ctx;
  }

  bool is_code_var(const Context& ctx, std::size_t k) {
    TermPtr ty = ctx.var_type(k);
    return ty->tag == Tag::App && is_const(ty->a, "T") && is_const(ty->b, "qstar");
  }

  // Index of some entry of type T qstar; u_context always seeds one.
  std::size_t code_var_index(const Context& ctx) {
    std::vector<std::size_t> hits;
    for (std::size_t k = 0; k < ctx.size(); ++k)
      if (is_code_var(ctx, k)) hits.push_back(k);
    return hits[static_cast<std::size_t>(roll(static_cast<int>(hits.size())))];
  }

  // A code over ctx: qstar, a code variable, or a qFun/qSum code.
  TermPtr a_code(Context& ctx, int depth) {
    if (depth <= 0) {
      if (roll(2) == 0) {
        std::size_t k = code_var_index(ctx);
        return var(k, ctx.binder(k).name);
      }
      return cnst("qstar");
    }
    switch (roll(5)) {
      case 0:
        return cnst("qstar");
      case 1:
      case 2: {
        std::size_t k = code_var_index(ctx);
        return var(k, ctx.binder(k).name);
      }
      default: {
        TermPtr dom = a_code(ctx, depth - 1);
        Name x = fresh_term_hint();
        ctx.push(x, app(cnst("T"), dom));
        TermPtr cod = a_code(ctx, depth - 1);
        ctx.pop();
        TermPtr fam = lam(x, app(cnst("T"), dom), cod);
        return apps(cnst(roll(2) == 0 ? "qFun" : "qSum"), {dom, fam});
      }
    }
  }

  // A code C together with a term of type T C over ctx.
  std::pair<TermPtr, TermPtr> code_with_inhabitant(Context& ctx) {
    if (roll(2) == 0) {
      // C = qstar, inhabited by any code.
      return {cnst("qstar"), a_code(ctx, size_ - 1)};
    }
    // C = some code variable A; find x : T A, else fall back to qstar.
    std::size_t a = code_var_index(ctx);
    TermPtr ca = var(a, ctx.binder(a).name);
    for (std::size_t k = 0; k < ctx.size(); ++k) {
      TermPtr ty = ctx.var_type(k);
      if (ty->tag == Tag::App && is_const(ty->a, "T") && alpha_equal(ty->b, ca))
        return {ca, var(k, ctx.binder(k).name)};
    }
    return {cnst("qstar"), a_code(ctx, size_ - 1)};
  }

  // A (type, term) judgment in the translatable fragment over ctx.
  std::pair<TermPtr, TermPtr> u_term(Context& ctx, int depth) {
    int c = depth <= 0 ? roll(3) : roll(8);
    switch (c) {
      case 1: {  // any context variable
        std::size_t k = static_cast<std::size_t>(roll(static_cast<int>(ctx.size())));
        return {ctx.var_type(k), var(k, ctx.binder(k).name)};
      }
      case 2: {  // a code used as a term of type T qstar
        return {app(cnst("T"), cnst("qstar")), a_code(ctx, depth - 1)};
      }
      case 3:
      case 4: {  // lambda with a coded domain
        TermPtr code = a_code(ctx, depth - 1);
        Name x = fresh_term_hint();
        ctx.push(x, app(cnst("T"), code));
        auto [b_ty, b] = u_term(ctx, depth - 1);
        ctx.pop();
        return {pi(x, app(cnst("T"), code), b_ty), lam(x, app(cnst("T"), code), b)};
      }
      case 5: {  // beta redex inside the fragment
        auto [code, arg] = code_with_inhabitant(ctx);
        Name x = fresh_term_hint();
        ctx.push(x, app(cnst("T"), code));
        auto [b_ty, b] = u_term(ctx, depth - 1);
        ctx.pop();
        return {subst(b_ty, 0, arg), app(lam(x, app(cnst("T"), code), b), arg)};
      }
      case 6: {  // projection from a qSum-typed variable
        for (std::size_t k = 0; k < ctx.size(); ++k) {
          TermPtr ty = ctx.var_type(k);
          if (ty->tag != Tag::App || !is_const(ty->a, "T")) continue;
          Spine code = spine(ty->b);
          if (!is_const(code.head, "qSum") || code.args.size() != 2) continue;
          TermPtr subject = var(k, ctx.binder(k).name);
          if (roll(2) == 0) return {app(cnst("T"), code.args[0]), proj(1, subject)};
          return {app(cnst("T"), app(code.args[1], proj(1, subject))),
                  proj(2, subject)};
        }
        break;
      }
      case 7: {  // application of a qFun-typed variable
        for (std::size_t k = 0; k < ctx.size(); ++k) {
          TermPtr ty = ctx.var_type(k);
          if (ty->tag != Tag::App || !is_const(ty->a, "T")) continue;
          Spine code = spine(ty->b);
          if (!is_const(code.head, "qFun") || code.args.size() != 2) continue;
          // Argument must inhabit T (first code arg); only variables qualify.
          TermPtr want = code.args[0];
          for (std::size_t j = 0; j < ctx.size(); ++j) {
            TermPtr jty = ctx.var_type(j);
            if (jty->tag == Tag::App && is_const(jty->a, "T") &&
                alpha_equal(jty->b, want)) {
              TermPtr arg = var(j, ctx.binder(j).name);
              return {app(cnst("T"), app(code.args[1], arg)),
                      app(var(k, ctx.binder(k).name), arg)};
            }
          }
        }
        break;
      }
      default:
        break;
    }
    return {app(cnst("T"), cnst("qstar")), depth <= 0 ? cnst("qstar") : a_code(ctx, 0)};
  }

  bool star_defined(const TermPtr& t) {
    try {
      star(t, Mode::LStarUEq);
      return true;
    } catch (const TypeError&) {
      return false;
    }
  }

  bool validate_u_subst(const Signature& sig, const SubstInstance& inst) {
    if (!star_defined(inst.m) || !star_defined(inst.n)) return false;
    try {
      Fuel f1(kDefaultFuel);
      check_context(sig, inst.ctx, f1);
      Fuel f2(kDefaultFuel);
      check(sig, inst.ctx, inst.n, inst.b, f2);
      Context inner = extend(inst.ctx, Name("x"), inst.b);
      Fuel f3(kDefaultFuel);
      check(sig, inner, inst.m, inst.m_type, f3);
      return true;
    } catch (const TypeError&) {
      return false;
    }
  }

  bool validate_u_redex(const Signature& sig, const RedexPair& r) {
    if (!star_defined(r.redex) || !star_defined(r.reduct)) return false;
    try {
      Fuel f1(kDefaultFuel);
      check_context(sig, r.ctx, f1);
      Fuel f2(kDefaultFuel);
      if (!conv(sig, r.redex, r.reduct, f2)) return false;
      return true;
    } catch (const TypeError&) {
      return false;
    }
  }
};

}  // namespace

std::set<RuleCase> judgment_cases(const Context& ctx, const TermPtr& term,
                                  const TermPtr& type) {
  std::set<RuleCase> out;
  switch (term->tag) {
    case Tag::Sort: out.insert(RuleCase::Axiom); break;
    case Tag::Var: out.insert(RuleCase::Variable); break;
    case Tag::Pi: out.insert(RuleCase::PiFormation); break;
    case Tag::Sigma: out.insert(RuleCase::SigmaFormation); break;
    case Tag::Lam: out.insert(RuleCase::PiIntroduction); break;
    case Tag::App: out.insert(RuleCase::PiElimination); break;
    case Tag::Pair: out.insert(RuleCase::SigmaIntroduction); break;
    case Tag::Proj: out.insert(RuleCase::SigmaElimination); break;
    case Tag::Const: break;
  }
  if (!ctx.empty() && !occurs_free(term, 0) && !occurs_free(type, 0))
    out.insert(RuleCase::Weakening);
  try {
    const Signature& sig = declare_signature(Mode::LStar);
    Fuel fuel(kDefaultFuel);
    TermPtr inferred = infer(sig, ctx, term, fuel);
    if (!alpha_equal(inferred, type)) out.insert(RuleCase::Conversion);
  } catch (const TypeError&) {
    // terms that only check (pairs) contribute no conversion evidence
  }
  return out;
}

std::vector<GenJudgment> generate(std::uint64_t seed, int size, int count) {
  Gen gen(seed, size);
  std::vector<GenJudgment> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(gen.judgment());
  return out;
}

std::vector<SubstInstance> generate_subst(std::uint64_t seed, int size, int count) {
  Gen gen(seed, size);
  std::vector<SubstInstance> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(gen.subst_instance());
  return out;
}

std::vector<RedexPair> generate_redexes(std::uint64_t seed, int size, int count) {
  Gen gen(seed, size);
  std::vector<RedexPair> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(gen.redex());
  return out;
}

std::vector<SubstInstance> generate_u_subst(std::uint64_t seed, int size, int count) {
  Gen gen(seed, size);
  std::vector<SubstInstance> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(gen.u_subst_instance());
  return out;
}

std::vector<RedexPair> generate_u_redexes(std::uint64_t seed, int size, int count) {
  Gen gen(seed, size);
  std::vector<RedexPair> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(gen.u_redex());
  return out;
}

}  // namespace lstar
