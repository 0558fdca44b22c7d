#ifndef LSTAR_PRINT_HPP
#define LSTAR_PRINT_HPP

#include <string>
#include <utility>
#include <vector>

#include "lstar/typecheck.hpp"

namespace lstar {

// Round-trippable concrete syntax: parse(print(t)) is alpha-equal to t.
// Binder hints are freshened against the scope and the reserved words; a
// variable beyond the scope prints as ?k.
std::string print(const TermPtr& t, const std::vector<Name>& scope = {});
std::string print_context(const Context& ctx);

// Freshened display names for the entries, usable as a print scope.
std::vector<Name> context_scope(const Context& ctx);

// Renders a complete .lst source: mode pragma, assumes, check goals.
std::string emit_source(Mode mode, const Context& assumes,
                        const std::vector<std::pair<TermPtr, TermPtr>>& goals);

}  // namespace lstar

#endif  // LSTAR_PRINT_HPP
