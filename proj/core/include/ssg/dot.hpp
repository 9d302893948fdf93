#pragma once

#include <cstdint>
#include <string>

#include "ssg/automaton.hpp"
#include "ssg/structure.hpp"

namespace ssg {

/// Vertices in state order, edges labelled `x|x`; cyclic states get
/// peripheries=2.
std::string strongfix_to_dot(const NucleusAutomaton& a, const StrongFixGraph& h);

/// Vertices in breadth-first order, edges labelled `x`; minimal vertices get
/// peripheries=2.
std::string delta_to_dot(const NucleusAutomaton& a, const DeltaGraph& d);

/// At most `max_vertices` subsets (ascending mask order) are emitted; edges
/// to omitted vertices are dropped. Cycle vertices get peripheries=2.
std::string subset_digraph_to_dot(const NucleusAutomaton& a, const SubsetDigraph& s,
                                  std::uint32_t max_vertices = 256);

}  // namespace ssg
