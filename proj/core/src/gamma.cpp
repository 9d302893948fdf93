#include "ssg/gamma.hpp"

#include <deque>
#include <set>

#include "ssg/errors.hpp"
#include "ssg/linalg.hpp"

namespace ssg {

NucleusPartition equality_partition(const NucleusAutomaton& a) {
  NucleusPartition p(a.state_count());
  for (std::uint32_t g = 0; g < p.size(); ++g) p[g] = g;
  return p;
}

NucleusPartition gamma_step(const NucleusAutomaton& a, const NucleusPartition& part, Letter x) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ids;
  NucleusPartition out(part.size());
  for (StateId g : a.all_states()) {
    auto [y, r] = act_letter(a, g, x);
    auto [it, inserted] =
        ids.try_emplace({y.value, part[r.value]}, static_cast<std::uint32_t>(ids.size()));
    out[g.value] = it->second;
  }
  return out;
}

SubsetVertex block_of(const NucleusPartition& part, StateId g) {
  SubsetVertex out;
  for (std::uint32_t h = 0; h < part.size(); ++h)
    if (part[h] == part[g.value]) out.push_back(StateId{h});
  return out;
}

GammaGraph build_gamma(const NucleusAutomaton& a) {
  GammaGraph g;
  g.alphabet_size = a.alphabet_size();
  std::map<NucleusPartition, std::uint32_t> index;
  g.vertices.push_back(equality_partition(a));
  index[g.vertices[0]] = 0;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    std::vector<std::uint32_t> succ;
    for (std::uint32_t x = 0; x < g.alphabet_size; ++x) {
      NucleusPartition next = gamma_step(a, g.vertices[v], Letter{x});
      auto [it, inserted] = index.try_emplace(next, static_cast<std::uint32_t>(g.vertices.size()));
      if (inserted) g.vertices.push_back(std::move(next));
      succ.push_back(it->second);
    }
    g.successor.push_back(std::move(succ));
  }
  g.scc = strongly_connected_components(g.successor);

  const auto n = static_cast<std::uint32_t>(g.vertices.size());
  g.is_essential.assign(n, false);
  std::deque<std::uint32_t> work;
  for (std::uint32_t v = 0; v < n; ++v)
    if (g.scc.on_cycle[v]) {
      g.is_essential[v] = true;
      work.push_back(v);
    }
  while (!work.empty()) {
    const std::uint32_t v = work.front();
    work.pop_front();
    for (std::uint32_t w : g.successor[v])
      if (!g.is_essential[w]) {
        g.is_essential[w] = true;
        work.push_back(w);
      }
  }

  g.is_minimal.assign(n, false);
  std::set<std::uint32_t> minimal_components;
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::uint32_t c = g.scc.component[v];
    if (!g.scc.has_exit[c]) {
      g.is_minimal[v] = true;
      minimal_components.insert(c);
    }
  }
  if (minimal_components.size() != 1)
    throw InternalInconsistency("partition digraph has " +
                                std::to_string(minimal_components.size()) +
                                " minimal components, expected exactly one");
  return g;
}

namespace {

IntMatrix equations(const GammaGraph& gamma, const std::vector<bool>& select, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t v = 0; v < gamma.vertices.size(); ++v) {
    if (!select[v]) continue;
    const auto& part = gamma.vertices[v];
    std::uint32_t blocks = 0;
    for (auto b : part) blocks = std::max(blocks, b + 1);
    for (std::uint32_t b = 0; b < blocks; ++b) {
      std::vector<std::uint32_t> row(n, 0);
      for (std::size_t g = 0; g < n; ++g)
        if (part[g] == b) row[g] = 1;
      rows.push_back(std::move(row));
    }
  }
  IntMatrix m(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rows[r][c];
  return m;
}

}  // namespace

GammaVerdict gamma_verdict(const NucleusAutomaton& a, const GammaGraph& gamma,
                           const std::vector<std::uint64_t>& primes) {
  const IntMatrix minimal = equations(gamma, gamma.is_minimal, a.state_count());
  const IntMatrix essential = equations(gamma, gamma.is_essential, a.state_count());
  GammaVerdict out;
  out.minimal_rank_q = rational_rank(minimal);
  out.essential_rank_q = rational_rank(essential);
  out.simple_char0 = out.minimal_rank_q == out.essential_rank_q;
  for (std::uint64_t p : primes) {
    const std::size_t rm = rank_mod_p(minimal, p);
    const std::size_t re = rank_mod_p(essential, p);
    out.ranks_mod_p[p] = {rm, re};
    out.simple_mod_p[p] = rm == re;
  }
  return out;
}

GammaVerdict gamma_verdict(const NucleusAutomaton& a, const std::vector<std::uint64_t>& primes) {
  return gamma_verdict(a, build_gamma(a), primes);
}

std::vector<std::uint32_t> phi_morphism(const NucleusAutomaton& a, const GammaGraph& gamma,
                                        const DeltaGraph& delta) {
  std::vector<std::uint32_t> phi;
  phi.reserve(gamma.vertices.size());
  for (const auto& part : gamma.vertices) {
    const auto idx = delta.index_of(block_of(part, a.identity()));
    if (!idx) throw MorphismViolation("class of e is not a vertex of the subset digraph");
    phi.push_back(*idx);
  }
  std::vector<bool> hit(delta.vertices.size(), false);
  for (std::size_t v = 0; v < gamma.vertices.size(); ++v) {
    hit[phi[v]] = true;
    for (std::uint32_t x = 0; x < gamma.alphabet_size; ++x)
      if (phi[gamma.successor[v][x]] != delta.successor[phi[v]][x])
        throw MorphismViolation("class-of-e map does not preserve edge labels");
  }
  for (bool h : hit)
    if (!h) throw MorphismViolation("class-of-e map is not surjective");
  return phi;
}

}  // namespace ssg
