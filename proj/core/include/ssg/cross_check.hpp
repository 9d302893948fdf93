#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssg/automaton.hpp"
#include "ssg/gamma.hpp"
#include "ssg/verdict.hpp"

namespace ssg {

struct Disagreement {
  std::uint64_t characteristic = 0;
  bool engine_simple = false;
  bool oracle_simple = false;
};

struct CrossCheckReport {
  std::vector<std::uint64_t> characteristics;  // 0 first, then ascending primes
  GammaVerdict oracle;
  std::vector<Disagreement> disagreements;
  bool agree() const noexcept { return disagreements.empty(); }
};

inline const std::vector<std::uint64_t> kSmokePrimes = {2, 3, 5, 7};

/// Runs the partition-digraph oracle and compares its answer with `v` for
/// characteristic 0, the smoke primes, `extra_primes` and every prime in
/// v.nonsimple. Also checks the class-of-e morphism onto the subset digraph
/// (throws MorphismViolation on failure).
CrossCheckReport cross_check(const NucleusAutomaton& a, const SimplicityVerdict& v,
                             const std::vector<std::uint64_t>& extra_primes = {});

}  // namespace ssg
