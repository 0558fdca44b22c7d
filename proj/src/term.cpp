#include "lstar/term.hpp"

#include <algorithm>
#include <utility>

#include "lstar/errors.hpp"

namespace lstar {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::NotAFunction: return "NotAFunction";
    case ErrorKind::NotAPair: return "NotAPair";
    case ErrorKind::NotASort: return "NotASort";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::CannotInfer: return "CannotInfer";
    case ErrorKind::FuelExhausted: return "FuelExhausted";
    case ErrorKind::IllFormedContext: return "IllFormedContext";
    case ErrorKind::NotAUContext: return "NotAUContext";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NegativeIndex: return "NegativeIndex";
  }
  return "TypeError";
}

static Name parse_surface(const std::string& s) {
  Name n;
  if (!s.empty() && (s.back() == '\'' || s.back() == '*')) {
    n.text = s.substr(0, s.size() - 1);
    n.marker = s.back() == '\'' ? Marker::Primed : Marker::Starred;
  } else {
    n.text = s;
  }
  return n;
}

Name::Name(const char* surface) { *this = parse_surface(surface); }
Name::Name(const std::string& surface) { *this = parse_surface(surface); }

std::string show_name(const Name& name) {
  std::string out = name.text.empty() ? "_" : name.text;
  if (name.marker == Marker::Primed) out += '\'';
  if (name.marker == Marker::Starred) out += '*';
  return out;
}

bool same_name(const Name& a, const Name& b) {
  return a.marker == b.marker && a.text == b.text;
}

static TermPtr make(Tag tag, std::size_t index, Name name, TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->tag = tag;
  t->index = index;
  t->name = std::move(name);
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

TermPtr sort() {
  static const TermPtr instance = make(Tag::Sort, 0, Name(), nullptr, nullptr);
  return instance;
}

TermPtr var(std::size_t index, Name hint) {
  return make(Tag::Var, index, std::move(hint), nullptr, nullptr);
}

TermPtr uvar(const char* surface) { return var(kUnresolved, Name(surface)); }

TermPtr pi(Name binder, TermPtr domain, TermPtr codomain) {
  return make(Tag::Pi, 0, std::move(binder), std::move(domain), std::move(codomain));
}

TermPtr sigma(Name binder, TermPtr domain, TermPtr codomain) {
  return make(Tag::Sigma, 0, std::move(binder), std::move(domain), std::move(codomain));
}

TermPtr lam(Name binder, TermPtr domain, TermPtr body) {
  return make(Tag::Lam, 0, std::move(binder), std::move(domain), std::move(body));
}

TermPtr app(TermPtr fn, TermPtr arg) {
  return make(Tag::App, 0, Name(), std::move(fn), std::move(arg));
}

TermPtr pair(TermPtr first, TermPtr second) {
  return make(Tag::Pair, 0, Name(), std::move(first), std::move(second));
}

TermPtr proj(std::size_t component, TermPtr subject) {
  if (component != 1 && component != 2)
    throw TypeError(ErrorKind::MalformedInput, std::move(subject));
  return make(Tag::Proj, component, Name(), std::move(subject), nullptr);
}

TermPtr cnst(std::string name) {
  return make(Tag::Const, 0, Name(std::move(name), Marker::Plain), nullptr, nullptr);
}

TermPtr apps(TermPtr head, const std::vector<TermPtr>& args) {
  TermPtr out = std::move(head);
  for (const TermPtr& a : args) out = app(out, a);
  return out;
}

Spine spine(const TermPtr& t) {
  Spine s;
  TermPtr cur = t;
  while (cur->tag == Tag::App) {
    s.args.push_back(cur->b);
    cur = cur->a;
  }
  s.head = cur;
  std::reverse(s.args.begin(), s.args.end());
  return s;
}

bool is_const(const TermPtr& t, const char* name) {
  return t->tag == Tag::Const && t->name.text == name;
}

static TermPtr shift_at(const TermPtr& t, long long amount, std::size_t cutoff) {
  switch (t->tag) {
    case Tag::Sort:
    case Tag::Const:
      return t;
    case Tag::Var: {
      if (t->index == kUnresolved) throw TypeError(ErrorKind::MalformedInput, t);
      if (t->index < cutoff) return t;
      long long moved = static_cast<long long>(t->index) + amount;
      if (moved < static_cast<long long>(cutoff)) throw TypeError(ErrorKind::NegativeIndex, t);
      return var(static_cast<std::size_t>(moved), t->name);
    }
    case Tag::Pi:
    case Tag::Sigma:
    case Tag::Lam: {
      TermPtr a = shift_at(t->a, amount, cutoff);
      TermPtr b = shift_at(t->b, amount, cutoff + 1);
      if (a == t->a && b == t->b) return t;
      return make(t->tag, 0, t->name, std::move(a), std::move(b));
    }
    case Tag::App:
    case Tag::Pair: {
      TermPtr a = shift_at(t->a, amount, cutoff);
      TermPtr b = shift_at(t->b, amount, cutoff);
      if (a == t->a && b == t->b) return t;
      return make(t->tag, 0, Name(), std::move(a), std::move(b));
    }
    case Tag::Proj: {
      TermPtr a = shift_at(t->a, amount, cutoff);
      if (a == t->a) return t;
      return make(Tag::Proj, t->index, Name(), std::move(a), nullptr);
    }
  }
  throw TypeError(ErrorKind::MalformedInput, t);
}

TermPtr shift(const TermPtr& t, long long amount, std::size_t cutoff) {
  if (amount == 0) return t;
  return shift_at(t, amount, cutoff);
}

static TermPtr subst_at(const TermPtr& t, std::size_t target, const TermPtr& r,
                        std::size_t depth) {
  switch (t->tag) {
    case Tag::Sort:
    case Tag::Const:
      return t;
    case Tag::Var: {
      if (t->index == kUnresolved) throw TypeError(ErrorKind::MalformedInput, t);
      std::size_t hit = target + depth;
      if (t->index == hit) return shift(r, static_cast<long long>(depth), 0);
      if (t->index > hit) return var(t->index - 1, t->name);
      return t;
    }
    case Tag::Pi:
    case Tag::Sigma:
    case Tag::Lam:
      return make(t->tag, 0, t->name, subst_at(t->a, target, r, depth),
                  subst_at(t->b, target, r, depth + 1));
    case Tag::App:
    case Tag::Pair:
      return make(t->tag, 0, Name(), subst_at(t->a, target, r, depth),
                  subst_at(t->b, target, r, depth));
    case Tag::Proj:
      return make(Tag::Proj, t->index, Name(), subst_at(t->a, target, r, depth), nullptr);
  }
  throw TypeError(ErrorKind::MalformedInput, t);
}

TermPtr subst(const TermPtr& t, std::size_t target, const TermPtr& replacement) {
  return subst_at(t, target, replacement, 0);
}

static TermPtr instantiate_at(const TermPtr& t, const std::vector<TermPtr>& values,
                              std::size_t depth) {
  switch (t->tag) {
    case Tag::Sort:
    case Tag::Const:
      return t;
    case Tag::Var: {
      if (t->index == kUnresolved) throw TypeError(ErrorKind::MalformedInput, t);
      if (t->index < depth) return t;
      std::size_t slot = t->index - depth;
      if (slot >= values.size()) throw TypeError(ErrorKind::MalformedInput, t);
      return shift(values[values.size() - 1 - slot], static_cast<long long>(depth), 0);
    }
    case Tag::Pi:
    case Tag::Sigma:
    case Tag::Lam:
      return make(t->tag, 0, t->name, instantiate_at(t->a, values, depth),
                  instantiate_at(t->b, values, depth + 1));
    case Tag::App:
    case Tag::Pair:
      return make(t->tag, 0, Name(), instantiate_at(t->a, values, depth),
                  instantiate_at(t->b, values, depth));
    case Tag::Proj:
      return make(Tag::Proj, t->index, Name(), instantiate_at(t->a, values, depth), nullptr);
  }
  throw TypeError(ErrorKind::MalformedInput, t);
}

TermPtr instantiate(const TermPtr& tmpl, const std::vector<TermPtr>& values) {
  return instantiate_at(tmpl, values, 0);
}

static bool equal_impl(const TermPtr& x, const TermPtr& y, bool markers) {
  if (x == y) return true;
  if (x->tag != y->tag) return false;
  switch (x->tag) {
    case Tag::Sort:
      return true;
    case Tag::Var:
      return x->index == y->index && (!markers || x->name.marker == y->name.marker);
    case Tag::Const:
      return x->name.text == y->name.text;
    case Tag::Pi:
    case Tag::Sigma:
    case Tag::Lam:
      if (markers && x->name.marker != y->name.marker) return false;
      return equal_impl(x->a, y->a, markers) && equal_impl(x->b, y->b, markers);
    case Tag::App:
    case Tag::Pair:
      return equal_impl(x->a, y->a, markers) && equal_impl(x->b, y->b, markers);
    case Tag::Proj:
      return x->index == y->index && equal_impl(x->a, y->a, markers);
  }
  return false;
}

bool alpha_equal(const TermPtr& x, const TermPtr& y) { return equal_impl(x, y, false); }
bool marked_equal(const TermPtr& x, const TermPtr& y) { return equal_impl(x, y, true); }

static bool occurs_at(const TermPtr& t, std::size_t index, std::size_t depth) {
  switch (t->tag) {
    case Tag::Sort:
    case Tag::Const:
      return false;
    case Tag::Var:
      return t->index == index + depth;
    case Tag::Pi:
    case Tag::Sigma:
    case Tag::Lam:
      return occurs_at(t->a, index, depth) || occurs_at(t->b, index, depth + 1);
    case Tag::App:
    case Tag::Pair:
      return occurs_at(t->a, index, depth) || occurs_at(t->b, index, depth);
    case Tag::Proj:
      return occurs_at(t->a, index, depth);
  }
  return false;
}

bool occurs_free(const TermPtr& t, std::size_t index) { return occurs_at(t, index, 0); }

static bool scope_at(const TermPtr& t, std::size_t depth) {
  switch (t->tag) {
    case Tag::Sort:
    case Tag::Const:
      return true;
    case Tag::Var:
      return t->index != kUnresolved && t->index < depth;
    case Tag::Pi:
    case Tag::Sigma:
    case Tag::Lam:
      return scope_at(t->a, depth) && scope_at(t->b, depth + 1);
    case Tag::App:
    case Tag::Pair:
      return scope_at(t->a, depth) && scope_at(t->b, depth);
    case Tag::Proj:
      return scope_at(t->a, depth);
  }
  return false;
}

bool scope_valid(const TermPtr& t, std::size_t depth) { return scope_at(t, depth); }

static TermPtr resolve_at(const TermPtr& t, std::vector<Name>& stack,
                          const std::set<std::string>& constants) {
  switch (t->tag) {
    case Tag::Sort:
    case Tag::Const:
      return t;
    case Tag::Var: {
      if (t->index != kUnresolved) return t;
      for (std::size_t i = stack.size(); i-- > 0;) {
        if (same_name(stack[i], t->name)) return var(stack.size() - 1 - i, t->name);
      }
      if (t->name.marker == Marker::Plain && constants.count(t->name.text))
        return cnst(t->name.text);
      throw TypeError(ErrorKind::UnboundVariable, t);
    }
    case Tag::Pi:
    case Tag::Sigma:
    case Tag::Lam: {
      TermPtr a = resolve_at(t->a, stack, constants);
      stack.push_back(t->name);
      TermPtr b = resolve_at(t->b, stack, constants);
      stack.pop_back();
      return make(t->tag, 0, t->name, std::move(a), std::move(b));
    }
    case Tag::App:
    case Tag::Pair:
      return make(t->tag, 0, Name(), resolve_at(t->a, stack, constants),
                  resolve_at(t->b, stack, constants));
    case Tag::Proj:
      return make(Tag::Proj, t->index, Name(), resolve_at(t->a, stack, constants), nullptr);
  }
  throw TypeError(ErrorKind::MalformedInput, t);
}

TermPtr resolve(const TermPtr& t, const std::vector<Name>& scope,
                const std::set<std::string>& constants) {
  std::vector<Name> stack = scope;
  return resolve_at(t, stack, constants);
}

}  // namespace lstar
