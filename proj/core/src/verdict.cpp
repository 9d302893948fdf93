#include "ssg/verdict.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "ssg/errors.hpp"

namespace ssg {

IntMatrix coset_matrix(const GroupTable& g, const std::vector<SubsetVertex>& minimal) {
  std::vector<std::vector<std::size_t>> rows;
  for (const SubsetVertex& y : minimal) {
    const CosetSystem cs = left_cosets(g, y);
    for (const auto& coset : cs.cosets) rows.push_back(coset);
  }
  IntMatrix m(rows.size(), g.order());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c : rows[r]) m.at(r, c) = 1;
  return m;
}

IntMatrixAnalysis analyze_matrix(const IntMatrix& m) {
  IntMatrixAnalysis out;
  out.rational_rank = rational_rank(m);
  out.rational_kernel = rational_kernel(m);
  out.snf = smith_normal_form(m);
  if (out.snf.rank != out.rational_rank)
    throw InternalInconsistency("Smith normal form rank disagrees with rational rank");
  out.full_column_rank = out.rational_rank == m.cols();
  if (out.full_column_rank && !out.snf.diagonal.empty()) {
    // With full column rank the last invariant factor d_k is nonzero and
    // every other factor divides it.
    out.bad_primes = prime_factors(out.snf.diagonal[out.snf.rank - 1]);
    for (std::uint64_t p : out.bad_primes) out.kernel_mod_p[p] = kernel_mod_p(m, p);
  }
  return out;
}

bool NonsimpleCharacteristics::contains(std::uint64_t characteristic) const {
  if (all) return true;
  return std::binary_search(primes.begin(), primes.end(), characteristic);
}

bool SimplicityVerdict::simple_over(std::uint64_t characteristic) const {
  if (characteristic == 0) return complex_simple;
  return !nonsimple.contains(characteristic);
}

SimplicityVerdict decide_simplicity(const NucleusAutomaton& a, const AnalysisOptions& options) {
  SimplicityVerdict v;
  const StrongFixGraph h = build_strongfix(a);
  v.hausdorff_report = is_hausdorff(h);
  v.hausdorff = v.hausdorff_report.hausdorff;
  if (v.hausdorff) return v;

  v.maximal_subgroups = maximal_cyclic_subgroups(a, h, options.subset_capacity);
  const DeltaGraph delta = build_delta(a);

  std::set<std::uint64_t> primes;
  for (std::size_t i = 0; i < v.maximal_subgroups.size(); ++i) {
    const GroupTable& group = v.maximal_subgroups[i].group;
    IntMatrixAnalysis an = analyze_matrix(coset_matrix(group, delta.minimal));
    if (!an.full_column_rank) {
      v.complex_simple = false;
      v.nonsimple.all = true;
      v.witnesses.push_back({i, 0, {an.rational_kernel.front()}});
    } else {
      for (std::uint64_t p : an.bad_primes) {
        primes.insert(p);
        IntVector coeffs;
        for (std::uint64_t c : an.kernel_mod_p.at(p).front()) coeffs.emplace_back(c);
        v.witnesses.push_back({i, p, {std::move(coeffs)}});
      }
    }
    v.analyses.push_back(std::move(an));
  }
  if (!v.nonsimple.all) v.nonsimple.primes.assign(primes.begin(), primes.end());
  v.cstar_simple = v.complex_simple;

  for (const Witness& w : v.witnesses)
    if (!verify_witness(a, w.element, delta, v.maximal_subgroups[w.subgroup_index].group,
                        w.characteristic))
      throw InternalInconsistency("emitted witness fails verification");
  std::sort(v.witnesses.begin(), v.witnesses.end(), [](const Witness& l, const Witness& r) {
    return std::tie(l.subgroup_index, l.characteristic) < std::tie(r.subgroup_index, r.characteristic);
  });
  return v;
}

bool verify_witness(const NucleusAutomaton& /*a*/, const WitnessElement& w, const DeltaGraph& delta,
                    const GroupTable& h, std::uint64_t characteristic) {
  if (w.coefficients.size() != h.order()) return false;
  if (characteristic != 0 && !is_prime(characteristic)) throw NotPrime(characteristic);
  auto vanishes = [&](const BigInt& x) {
    if (characteristic == 0) return sgn(x) == 0;
    return mpz_divisible_ui_p(x.get_mpz_t(), characteristic) != 0;
  };
  if (std::all_of(w.coefficients.begin(), w.coefficients.end(), vanishes)) return false;
  for (const SubsetVertex& y : delta.minimal) {
    const CosetSystem cs = left_cosets(h, y);
    for (const auto& coset : cs.cosets) {
      BigInt sum = 0;
      for (std::size_t i : coset) sum += w.coefficients[i];
      if (!vanishes(sum)) return false;
    }
  }
  return true;
}

}  // namespace ssg
