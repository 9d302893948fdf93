#pragma once

#include <cstddef>
#include <vector>

#include "ssg/automaton.hpp"

namespace ssg {

/// A finite group realised on nucleus states. Indices refer to `elements`.
struct GroupTable {
  std::vector<StateId> elements;  // ascending
  std::size_t identity = 0;
  std::vector<std::vector<std::size_t>> mul;  // mul[i][j] = elements[i] * elements[j]
  std::vector<std::size_t> inv;

  std::size_t order() const noexcept { return elements.size(); }
  /// Index of g, or order() when g is not an element.
  std::size_t index_of(StateId g) const;
};

/// Builds the multiplication table of `elems` by identifying each product
/// in the nucleus, then checks the group laws exhaustively.
/// Throws NotClosed if a product lands outside `elems`, and
/// InternalInconsistency if it lands outside the nucleus or a law fails.
GroupTable group_table(const NucleusAutomaton& a, const std::vector<StateId>& elems);

/// Left cosets g.S of a subgroup S of a GroupTable.
struct CosetSystem {
  std::vector<std::size_t> subgroup;             // ascending indices
  std::vector<std::vector<std::size_t>> cosets;  // each ascending; ordered by least member
};

/// Subgroup = table elements that belong to `members`. Throws
/// InternalInconsistency if that subset is not a subgroup.
CosetSystem left_cosets(const GroupTable& g, const std::vector<StateId>& members);

}  // namespace ssg
