#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ssg/automaton.hpp"
#include "ssg/group.hpp"
#include "ssg/scc.hpp"

namespace ssg {

/// A set of nucleus states, kept sorted so it can serve as a map key.
using SubsetVertex = std::vector<StateId>;

SubsetVertex make_subset(std::vector<StateId> members);

struct StrongFixEdge {
  StateId from;
  Letter letter;
  StateId to;
  friend auto operator<=>(const StrongFixEdge&, const StrongFixEdge&) = default;
};

/// The subgraph of the automaton keeping only letter-fixing transitions
/// g -x-> g|_x with g(x) = x, plus the set of states on its directed cycles.
struct StrongFixGraph {
  std::uint32_t state_count = 0;
  std::uint32_t alphabet_size = 0;
  StateId identity{};
  std::vector<StrongFixEdge> edges;  // sorted by (from, letter)
  /// successor[g][x] is g|_x when g fixes x, kNoVertex otherwise.
  std::vector<std::vector<std::uint32_t>> successor;
  SubsetVertex cyclic;
  std::vector<bool> is_cyclic;
};

StrongFixGraph build_strongfix(const NucleusAutomaton& a);

struct HausdorffReport {
  bool hausdorff = true;
  /// When not Hausdorff: a nontrivial cyclic state g and a word u with
  /// g(u) = u and g|_u = e.
  std::optional<StateId> witness_state;
  Word witness_word;
};

/// Hausdorff iff no cyclic state other than e has a path to e.
HausdorffReport is_hausdorff(const StrongFixGraph& h);

/// Digraph on subsets of the cyclic set. An x-edge joins A to B when every
/// member of A has an x-edge to a cyclic state and these targets are
/// pairwise distinct and form B. Only subsets containing e are built; vertex
/// masks index the cyclic states other than e.
class SubsetDigraph {
 public:
  static constexpr std::uint64_t kDefaultCapacity = std::uint64_t{1} << 24;

  /// Throws CapacityExceeded when 2^(|C| - 1) exceeds `capacity`.
  static SubsetDigraph build(const StrongFixGraph& h,
                             std::uint64_t capacity = kDefaultCapacity);

  std::uint32_t vertex_count() const noexcept { return vertex_count_; }
  std::uint32_t alphabet_size() const noexcept { return alphabet_size_; }
  /// Successor mask along letter x, or kNoVertex.
  std::uint32_t successor(std::uint32_t mask, std::uint32_t x) const {
    return succ_[std::size_t{mask} * alphabet_size_ + x];
  }
  bool on_cycle(std::uint32_t mask) const { return scc_.on_cycle[mask]; }
  std::uint32_t component(std::uint32_t mask) const { return scc_.component[mask]; }

  /// Members (including e) of the subset encoded by `mask`.
  SubsetVertex members(std::uint32_t mask) const;
  std::uint32_t mask_of(const SubsetVertex& s) const;

  /// Masks lying on directed cycles, ascending.
  std::vector<std::uint32_t> cycle_masks() const;
  /// Cycle masks with no cycle mask strictly above them.
  std::vector<std::uint32_t> maximal_cycle_masks() const;
  /// Shortest nonempty word labelling a closed path at `mask`
  /// (letters tried in order); empty if the mask is not on a cycle.
  Word cycle_word(std::uint32_t mask) const;

 private:
  std::uint32_t alphabet_size_ = 0;
  std::uint32_t vertex_count_ = 0;
  StateId identity_{};
  std::vector<StateId> others_;  // cyclic states other than e, by bit
  std::vector<std::uint32_t> succ_;
  SccResult scc_;
};

/// Subsets of C (each containing e) lying on directed cycles of the subset
/// digraph, i.e. those contained in some H_w.
std::vector<SubsetVertex> cyclic_subsets(const StrongFixGraph& h,
                                         std::uint64_t capacity = SubsetDigraph::kDefaultCapacity);

/// A maximal subgroup H_w = {g : g(w) = w, g|_w = g} with its word.
struct CyclicSubgroupWitness {
  SubsetVertex elements;
  Word word;
  GroupTable group;
};

/// The maximal cycle subsets, each with a word w such that the subset is
/// exactly H_w (the shortest closed-path label repeated up to the order of
/// the permutation it induces) and its verified group table.
/// Throws InternalInconsistency if a maximal subset is not a subgroup.
std::vector<CyclicSubgroupWitness> maximal_cyclic_subgroups(
    const NucleusAutomaton& a, const StrongFixGraph& h,
    std::uint64_t capacity = SubsetDigraph::kDefaultCapacity);

/// {g : g(w) = w and g|_w = g}.
SubsetVertex fixed_subgroup(const NucleusAutomaton& a, const Word& w);

/// Schreier digraph of x.Y = {g : g(x) = x, g|_x in Y} on the subsets
/// reachable from {e}.
struct DeltaGraph {
  std::uint32_t alphabet_size = 0;
  std::vector<SubsetVertex> vertices;  // breadth-first from {e}
  /// successor[v][x] = index of x.vertices[v].
  std::vector<std::vector<std::uint32_t>> successor;
  SccResult scc;
  std::vector<bool> is_minimal;
  /// Minimal vertices, sorted lexicographically.
  std::vector<SubsetVertex> minimal;

  std::optional<std::uint32_t> index_of(const SubsetVertex& s) const;
};

SubsetVertex delta_step(const NucleusAutomaton& a, const SubsetVertex& y, Letter x);

DeltaGraph build_delta(const NucleusAutomaton& a);

/// The nucleus elements strongly fixing w (g(w) = w, g|_w = e), computed as
/// w.{e} with (xv).Y = x.(v.Y).
SubsetVertex strong_fix_set(const NucleusAutomaton& a, const Word& w);

}  // namespace ssg
