#pragma once

#include <cstddef>
#include <vector>

#include "ssg/automaton.hpp"
#include "ssg/presentation.hpp"

namespace ssg {

struct ClosureOptions {
  /// Maximum number of saturation rounds.
  std::size_t depth_bound = 10;
  /// Hard cap on the number of elements held at once, counting the
  /// unreduced product states of a round (about |N|^2).
  std::size_t max_elements = 200000;
};

/// Computes the nucleus of the group generated by `generators`.
///
/// Starts from the restriction closure of the generators and their inverses,
/// keeps the elements reachable from a restriction cycle, then repeatedly
/// adds the cycle-reachable restrictions of pairwise products until a full
/// round adds no new element. Products are built as explicit pair states and
/// equal elements are merged by partition refinement.
/// Throws NotContractedWithinBound when `depth_bound` rounds do not suffice.
///
/// The result lists the identity first, then surviving generators in the
/// given order, then the remaining elements in discovery order.
NucleusAutomaton nucleus_closure(const NucleusAutomaton& a,
                                 const std::vector<StateId>& generators,
                                 const ClosureOptions& options = {});

inline NucleusAutomaton nucleus_closure(const Presentation& p,
                                        const ClosureOptions& options = {}) {
  return nucleus_closure(p.automaton, p.generators, options);
}

}  // namespace ssg
