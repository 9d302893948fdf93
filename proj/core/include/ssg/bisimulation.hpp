#pragma once

#include <optional>

#include "ssg/automaton.hpp"

namespace ssg {

/// True iff p and q define the same transformation of X^w.
///
/// Explores pairs of canonical product states reachable from (p, q) and
/// fails on the first letter where outputs differ; revisited pairs are
/// assumed equal, which computes the greatest fixpoint.
bool bisimilar(const NucleusAutomaton& a, const FormalProduct& p,
               const FormalProduct& q);

/// The nucleus state equal to p, if any.
std::optional<StateId> identify_in_nucleus(const NucleusAutomaton& a,
                                           const FormalProduct& p);

}  // namespace ssg
