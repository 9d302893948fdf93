#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ssg/automaton.hpp"

namespace ssg {

/// A parsed input file: the declared automaton and, when the file carries a
/// `generators` line, the states to close into a nucleus.
struct Presentation {
  NucleusAutomaton automaton;
  bool identity_declared = false;
  std::vector<StateId> generators;

  bool requests_closure() const noexcept { return !generators.empty(); }
};

/// Parses the line-oriented presentation format:
///
///   alphabet 0 1
///   identity e
///   state a : 0 -> 1 . e , 1 -> 0 . e
///   generators a
///
/// `#` starts a comment. Throws SyntaxError with a 1-based line/column, or
/// the validation errors of NucleusAutomaton::create.
Presentation parse_presentation(std::string_view text);

/// Emits the same grammar; states in table order, clauses in alphabet order.
std::string serialize(const NucleusAutomaton& a,
                      const std::vector<StateId>& generators = {});
std::string serialize(const Presentation& p);

}  // namespace ssg
