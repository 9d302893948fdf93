#include "ssg/bisimulation.hpp"

#include <deque>
#include <set>
#include <utility>

namespace ssg {

bool bisimilar(const NucleusAutomaton& a, const FormalProduct& p,
               const FormalProduct& q) {
  using Pair = std::pair<std::vector<Factor>, std::vector<Factor>>;
  std::set<Pair> seen;
  std::deque<std::pair<FormalProduct, FormalProduct>> work;

  auto push = [&](FormalProduct lhs, FormalProduct rhs) {
    if (lhs == rhs) return;  // syntactically equal products act equally
    if (seen.emplace(lhs.factors, rhs.factors).second)
      work.emplace_back(std::move(lhs), std::move(rhs));
  };
  push(canonicalize(a, p), canonicalize(a, q));

  while (!work.empty()) {
    auto [lhs, rhs] = std::move(work.front());
    work.pop_front();
    for (std::uint32_t x = 0; x < a.alphabet_size(); ++x) {
      auto [y1, r1] = act_letter(a, lhs, Letter{x});
      auto [y2, r2] = act_letter(a, rhs, Letter{x});
      if (y1 != y2) return false;
      push(std::move(r1), std::move(r2));
    }
  }
  return true;
}

std::optional<StateId> identify_in_nucleus(const NucleusAutomaton& a,
                                           const FormalProduct& p) {
  const FormalProduct canon = canonicalize(a, p);
  if (canon.factors.empty()) return a.identity();
  if (canon.factors.size() == 1 && !canon.factors[0].inverse)
    return canon.factors[0].state;
  for (StateId g : a.all_states())
    if (bisimilar(a, canon, FormalProduct::of(g))) return g;
  return std::nullopt;
}

}  // namespace ssg
