#ifndef LSTAR_TERM_HPP
#define LSTAR_TERM_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace lstar {

// Display-only marker distinguishing the three copies of a variable that the
// relational translation juggles: x (plain), x' (primed), x* (starred).
enum class Marker : std::uint8_t { Plain, Primed, Starred };

// Display hint attached to variables and binders. Hints never influence
// equality, substitution, or reduction; de Bruijn indices carry the binding
// structure. The char*/string constructors parse a trailing ' or * into the
// marker, so Name("A'") is the primed copy of A.
struct Name {
  std::string text;
  Marker marker = Marker::Plain;

  Name() = default;
  Name(std::string t, Marker m) : text(std::move(t)), marker(m) {}
  Name(const char* surface);
  Name(const std::string& surface);
};

std::string show_name(const Name& name);
bool same_name(const Name& a, const Name& b);  // text and marker agree

enum class Tag : std::uint8_t { Sort, Var, Pi, Sigma, Lam, App, Pair, Proj, Const };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable term node. Var{index} is a de Bruijn index with 0 the innermost
// binder. Pi/Sigma/Lam store the domain in `a` and bind one variable in `b`.
// Proj stores the component (1 or 2) in `index`. Const names a signature
// constant in `name`.
struct Term {
  Tag tag = Tag::Sort;
  std::size_t index = 0;
  Name name;
  TermPtr a;
  TermPtr b;
};

// Sentinel index of a named variable that has not been resolved yet; only
// produced by uvar() and eliminated by resolve().
inline constexpr std::size_t kUnresolved = static_cast<std::size_t>(-1);

TermPtr sort();
TermPtr var(std::size_t index, Name hint = Name());
TermPtr uvar(const char* surface);
TermPtr pi(Name binder, TermPtr domain, TermPtr codomain);
TermPtr sigma(Name binder, TermPtr domain, TermPtr codomain);
TermPtr lam(Name binder, TermPtr domain, TermPtr body);
TermPtr app(TermPtr fn, TermPtr arg);
TermPtr pair(TermPtr first, TermPtr second);
TermPtr proj(std::size_t component, TermPtr subject);
TermPtr cnst(std::string name);

TermPtr apps(TermPtr head, const std::vector<TermPtr>& args);

// Flattened application spine: head is never an App node.
struct Spine {
  TermPtr head;
  std::vector<TermPtr> args;
};
Spine spine(const TermPtr& t);
bool is_const(const TermPtr& t, const char* name);

// Adds `amount` to every free index >= cutoff. Throws NegativeIndex when an
// index would be moved below the cutoff.
TermPtr shift(const TermPtr& t, long long amount, std::size_t cutoff = 0);

// Substitutes `replacement` for the variable numbered `target` at the root of
// t, renumbering so the result is scoped over the context with that entry
// removed. The replacement is shifted as it moves under binders.
TermPtr subst(const TermPtr& t, std::size_t target, const TermPtr& replacement);

// Simultaneously replaces the free variables of a rewrite-rule template.
// `values` is listed outermost-first: the last element stands for Var 0.
TermPtr instantiate(const TermPtr& tmpl, const std::vector<TermPtr>& values);

// Structural equality up to display hints.
bool alpha_equal(const TermPtr& x, const TermPtr& y);

// Like alpha_equal, but variable and binder markers must also agree.
bool marked_equal(const TermPtr& x, const TermPtr& y);

bool occurs_free(const TermPtr& t, std::size_t index);

// True when every free index is below `depth` and no unresolved names remain.
bool scope_valid(const TermPtr& t, std::size_t depth);

// Replaces uvar() leaves by de Bruijn indices into `scope` (listed outermost
// first) or by Const nodes for plain names in `constants`. Throws
// UnboundVariable on anything else.
TermPtr resolve(const TermPtr& t, const std::vector<Name>& scope,
                const std::set<std::string>& constants);

}  // namespace lstar

#endif  // LSTAR_TERM_HPP
