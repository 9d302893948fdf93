#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssg/automaton.hpp"
#include "ssg/group.hpp"
#include "ssg/linalg.hpp"
#include "ssg/structure.hpp"

namespace ssg {

/// Stacked coset-indicator rows: for each minimal vertex Y (in the given
/// order) one row per left coset of H cap Y; columns follow g.elements.
IntMatrix coset_matrix(const GroupTable& g, const std::vector<SubsetVertex>& minimal);

struct IntMatrixAnalysis {
  std::size_t rational_rank = 0;
  std::vector<IntVector> rational_kernel;
  SnfResult snf;
  bool full_column_rank = false;
  /// Primes p for which the matrix loses rank mod p; only meaningful when
  /// the matrix has full column rank over Q (otherwise every field fails).
  std::vector<std::uint64_t> bad_primes;
  std::map<std::uint64_t, std::vector<std::vector<std::uint64_t>>> kernel_mod_p;
};

IntMatrixAnalysis analyze_matrix(const IntMatrix& m);

/// Coefficients over the elements of a GroupTable, in table order.
struct WitnessElement {
  IntVector coefficients;
};

struct Witness {
  std::size_t subgroup_index = 0;
  std::uint64_t characteristic = 0;  // 0 = rational
  WitnessElement element;
};

struct NonsimpleCharacteristics {
  bool all = false;
  std::vector<std::uint64_t> primes;  // ascending; empty when all is set
  bool empty() const noexcept { return !all && primes.empty(); }
  bool contains(std::uint64_t characteristic) const;
};

struct SimplicityVerdict {
  bool hausdorff = true;
  bool complex_simple = true;
  /// Always equal to complex_simple: the C*-algebra is simple exactly when
  /// the complex algebra is.
  bool cstar_simple = true;
  NonsimpleCharacteristics nonsimple;
  HausdorffReport hausdorff_report;
  std::vector<CyclicSubgroupWitness> maximal_subgroups;  // empty if Hausdorff
  std::vector<IntMatrixAnalysis> analyses;               // parallel to maximal_subgroups
  std::vector<Witness> witnesses;

  /// Simple over a field of the given characteristic (0 or a prime).
  bool simple_over(std::uint64_t characteristic) const;
};

struct AnalysisOptions {
  std::uint64_t subset_capacity = SubsetDigraph::kDefaultCapacity;
};

/// Runs the full decision procedure. Hausdorff inputs short-circuit to
/// "simple over every field" without building the subset digraph.
SimplicityVerdict decide_simplicity(const NucleusAutomaton& a, const AnalysisOptions& options = {});

/// True iff the witness is nonzero over the field of the given
/// characteristic and every coset sum for every minimal vertex vanishes there.
bool verify_witness(const NucleusAutomaton& a, const WitnessElement& w, const DeltaGraph& delta,
                    const GroupTable& h, std::uint64_t characteristic);

/// JSON object with fields hausdorff, complex_simple, cstar_simple,
/// nonsimple_characteristics, maximal_subgroups, witnesses (in this order),
/// terminated by a newline.
std::string to_json(const NucleusAutomaton& a, const SimplicityVerdict& v);

}  // namespace ssg
