#include "ssg/group.hpp"

#include <algorithm>
#include <set>

#include "ssg/bisimulation.hpp"
#include "ssg/errors.hpp"

namespace ssg {

std::size_t GroupTable::index_of(StateId g) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || *it != g) return elements.size();
  return static_cast<std::size_t>(it - elements.begin());
}

GroupTable group_table(const NucleusAutomaton& a, const std::vector<StateId>& elems) {
  GroupTable t;
  t.elements = elems;
  std::sort(t.elements.begin(), t.elements.end());
  t.elements.erase(std::unique(t.elements.begin(), t.elements.end()), t.elements.end());
  const std::size_t n = t.order();
  t.identity = t.index_of(a.identity());
  if (t.identity == n) throw NotClosed("candidate subgroup lacks the identity");

  t.mul.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const FormalProduct p = FormalProduct::of(t.elements[i]) * FormalProduct::of(t.elements[j]);
      const auto g = identify_in_nucleus(a, p);
      if (!g)
        throw InternalInconsistency("product " + to_string(a, p) +
                                    " of subgroup elements is not in the nucleus");
      const std::size_t k = t.index_of(*g);
      if (k == n)
        throw NotClosed("product " + to_string(a, p) + " = " + a.name(*g) +
                        " leaves the candidate subgroup");
      t.mul[i][j] = k;
    }
  }

  t.inv.assign(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (t.mul[i][j] == t.identity && t.mul[j][i] == t.identity) t.inv[i] = j;

  for (std::size_t i = 0; i < n; ++i) {
    if (t.mul[t.identity][i] != i || t.mul[i][t.identity] != i)
      throw InternalInconsistency("identity law fails in group table");
    if (t.inv[i] == n) throw InternalInconsistency("element without inverse in group table");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t.mul[t.mul[i][j]][k] != t.mul[i][t.mul[j][k]])
          throw InternalInconsistency("associativity fails in group table");
  }
  return t;
}

CosetSystem left_cosets(const GroupTable& g, const std::vector<StateId>& members) {
  const std::set<StateId> in(members.begin(), members.end());
  CosetSystem cs;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (in.count(g.elements[i])) cs.subgroup.push_back(i);

  const std::set<std::size_t> sub(cs.subgroup.begin(), cs.subgroup.end());
  if (!sub.count(g.identity)) throw InternalInconsistency("intersection misses the identity");
  for (std::size_t i : cs.subgroup) {
    if (!sub.count(g.inv[i])) throw InternalInconsistency("intersection is not inverse-closed");
    for (std::size_t j : cs.subgroup)
      if (!sub.count(g.mul[i][j])) throw InternalInconsistency("intersection is not a subgroup");
  }

  std::vector<bool> covered(g.order(), false);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (covered[i]) continue;
    std::vector<std::size_t> coset;
    for (std::size_t s : cs.subgroup) coset.push_back(g.mul[i][s]);
    std::sort(coset.begin(), coset.end());
    for (std::size_t c : coset) covered[c] = true;
    cs.cosets.push_back(std::move(coset));
  }
  return cs;
}

}  // namespace ssg
