#include "lstar/print.hpp"

#include <utility>

#include "lstar/signature.hpp"

namespace lstar {

namespace {

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = [] {
    std::set<std::string> out = all_constant_names();
    for (const char* kw : {"def", "assume", "check", "mode", "Sg"}) out.insert(kw);
    return out;
  }();
  return words;
}

// Precedence levels: 0 arrow/lambda/Sg bodies, 1 application, 2 postfix
// projection, 3 atoms.
constexpr int kArrow = 0;
constexpr int kApp = 1;
constexpr int kPost = 2;

struct Printer {
  std::vector<Name> scope;

  bool taken(const Name& candidate) const {
    for (const Name& n : scope)
      if (same_name(n, candidate)) return true;
    return candidate.marker == Marker::Plain && reserved_words().count(candidate.text) > 0;
  }

  Name freshen(const Name& hint) const {
    Name base = hint;
    if (base.text.empty()) base.text = "x";
    Name candidate = base;
    for (int i = 1; taken(candidate); ++i)
      candidate.text = base.text + std::to_string(i);
    return candidate;
  }

  std::string wrap(std::string s, int have, int want) const {
    if (have < want) return "(" + std::move(s) + ")";
    return s;
  }

  std::string go(const TermPtr& t, int prec) {
    switch (t->tag) {
      case Tag::Sort:
        return "*";
      case Tag::Var: {
        if (t->index == kUnresolved) return "?" + show_name(t->name);
        if (t->index >= scope.size()) return "?" + std::to_string(t->index);
        return show_name(scope[scope.size() - 1 - t->index]);
      }
      case Tag::Const:
        return t->name.text;
      case Tag::Pi: {
        std::string s;
        if (!occurs_free(t->b, 0)) {
          s = go(t->a, kApp) + " -> ";
          scope.push_back(Name("", Marker::Plain));
          // The codomain ignores the binder, but indices still cross it.
          s += go(t->b, kArrow);
          scope.pop_back();
        } else {
          Name x = freshen(t->name);
          s = "(" + show_name(x) + " : " + go(t->a, kArrow) + ") -> ";
          scope.push_back(x);
          s += go(t->b, kArrow);
          scope.pop_back();
        }
        return wrap(std::move(s), kArrow, prec);
      }
      case Tag::Sigma: {
        Name x = freshen(t->name);
        std::string s = "Sg (" + show_name(x) + " : " + go(t->a, kArrow) + "). ";
        scope.push_back(x);
        s += go(t->b, kArrow);
        scope.pop_back();
        return wrap(std::move(s), kArrow, prec);
      }
      case Tag::Lam: {
        Name x = freshen(t->name);
        std::string s = "\\(" + show_name(x) + " : " + go(t->a, kArrow) + "). ";
        scope.push_back(x);
        s += go(t->b, kArrow);
        scope.pop_back();
        return wrap(std::move(s), kArrow, prec);
      }
      case Tag::App: {
        std::string s = go(t->a, kApp) + " " + go(t->b, kPost);
        return wrap(std::move(s), kApp, prec);
      }
      case Tag::Pair:
        return "(" + go(t->a, kArrow) + ", " + go(t->b, kArrow) + ")";
      case Tag::Proj: {
        std::string s = go(t->a, kPost) + (t->index == 1 ? ".1" : ".2");
        return wrap(std::move(s), kPost, prec);
      }
    }
    return "?";
  }
};

}  // namespace

std::string print(const TermPtr& t, const std::vector<Name>& scope) {
  if (!t) return "";
  Printer p{scope};
  return p.go(t, kArrow);
}

std::vector<Name> context_scope(const Context& ctx) {
  Printer p{{}};
  std::vector<Name> out;
  for (const ContextEntry& e : ctx.entries) {
    Name fresh = p.freshen(e.name);
    p.scope.push_back(fresh);
    out.push_back(fresh);
  }
  return out;
}

std::string print_context(const Context& ctx) {
  std::vector<Name> scope = context_scope(ctx);
  std::string out = "(";
  for (std::size_t i = 0; i < ctx.entries.size(); ++i) {
    if (i) out += ", ";
    out += show_name(scope[i]) + " : ";
    out += print(ctx.entries[i].type, {scope.begin(), scope.begin() + static_cast<long>(i)});
  }
  return out + ")";
}

std::string emit_source(Mode mode, const Context& assumes,
                        const std::vector<std::pair<TermPtr, TermPtr>>& goals) {
  std::string out = "mode ";
  out += to_string(mode);
  out += "\n";
  std::vector<Name> scope = context_scope(assumes);
  for (std::size_t i = 0; i < assumes.entries.size(); ++i) {
    out += "assume " + show_name(scope[i]) + " : ";
    out += print(assumes.entries[i].type, {scope.begin(), scope.begin() + static_cast<long>(i)});
    out += "\n";
  }
  for (const auto& [term, type] : goals) {
    out += "check " + print(term, scope) + " : " + print(type, scope) + "\n";
  }
  return out;
}

}  // namespace lstar
