#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ssg/automaton.hpp"
#include "ssg/scc.hpp"
#include "ssg/structure.hpp"

namespace ssg {

/// An equivalence relation on nucleus states: block id per state, with
/// blocks numbered in order of their least member.
using NucleusPartition = std::vector<std::uint32_t>;

NucleusPartition equality_partition(const NucleusAutomaton& a);

/// a ~ b in x.P iff a(x) = b(x) and a|_x ~ b|_x in P.
NucleusPartition gamma_step(const NucleusAutomaton& a, const NucleusPartition& part, Letter x);

/// The states in the block of `g`.
SubsetVertex block_of(const NucleusPartition& part, StateId g);

/// Schreier digraph of the action on partitions reachable from equality.
struct GammaGraph {
  std::uint32_t alphabet_size = 0;
  std::vector<NucleusPartition> vertices;  // breadth-first from equality
  std::vector<std::vector<std::uint32_t>> successor;
  SccResult scc;
  std::vector<bool> is_essential;  // reachable from a vertex on a cycle
  std::vector<bool> is_minimal;    // component without exit
};

/// Throws InternalInconsistency if the graph does not have exactly one
/// minimal strongly connected component.
GammaGraph build_gamma(const NucleusAutomaton& a);

struct GammaVerdict {
  std::size_t minimal_rank_q = 0;
  std::size_t essential_rank_q = 0;
  bool simple_char0 = false;
  std::map<std::uint64_t, std::pair<std::size_t, std::size_t>> ranks_mod_p;  // (minimal, essential)
  std::map<std::uint64_t, bool> simple_mod_p;
};

/// Simple over K iff the class-indicator equations of the minimal vertices
/// have the same rank over K as those of the essential vertices.
GammaVerdict gamma_verdict(const NucleusAutomaton& a, const std::vector<std::uint64_t>& primes);
GammaVerdict gamma_verdict(const NucleusAutomaton& a, const GammaGraph& gamma,
                           const std::vector<std::uint64_t>& primes);

/// Sends each partition to the block of e, as an index into `delta`.
/// Throws MorphismViolation unless the map is a surjective, label-preserving
/// digraph morphism.
std::vector<std::uint32_t> phi_morphism(const NucleusAutomaton& a, const GammaGraph& gamma,
                                        const DeltaGraph& delta);

}  // namespace ssg
