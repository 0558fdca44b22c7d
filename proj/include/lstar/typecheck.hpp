#ifndef LSTAR_TYPECHECK_HPP
#define LSTAR_TYPECHECK_HPP

#include <cstddef>
#include <vector>

#include "lstar/reduce.hpp"

namespace lstar {

struct ContextEntry {
  Name name;
  TermPtr type;  // scoped over the preceding entries
};

struct Context {
  std::vector<ContextEntry> entries;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  void push(Name name, TermPtr type);
  void pop();
  // Declared type of Var{index}, shifted into the full context's scope.
  TermPtr var_type(std::size_t index) const;
  const ContextEntry& binder(std::size_t index) const;
};

Context extend(const Context& ctx, Name name, TermPtr type);

// Checks every entry type against * over its prefix. Failures propagate with
// a note naming the entry; fuel exhaustion propagates untouched.
void check_context(const Signature& sig, const Context& ctx, Fuel& fuel);

TermPtr infer(const Signature& sig, const Context& ctx, const TermPtr& term, Fuel& fuel);
void check(const Signature& sig, const Context& ctx, const TermPtr& term,
           const TermPtr& type, Fuel& fuel);

}  // namespace lstar

#endif  // LSTAR_TYPECHECK_HPP
