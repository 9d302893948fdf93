#include "ssg/structure.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "ssg/errors.hpp"

namespace ssg {

SubsetVertex make_subset(std::vector<StateId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

StrongFixGraph build_strongfix(const NucleusAutomaton& a) {
  StrongFixGraph h;
  h.state_count = a.state_count();
  h.alphabet_size = a.alphabet_size();
  h.identity = a.identity();
  h.successor.assign(h.state_count, std::vector<std::uint32_t>(h.alphabet_size, kNoVertex));
  for (StateId g : a.all_states()) {
    for (std::uint32_t x = 0; x < h.alphabet_size; ++x) {
      auto [y, r] = act_letter(a, g, Letter{x});
      if (y.value != x) continue;
      h.edges.push_back({g, Letter{x}, r});
      h.successor[g.value][x] = r.value;
    }
  }
  const SccResult scc = strongly_connected_components(
      h.state_count, [&](std::uint32_t) { return h.alphabet_size; },
      [&](std::uint32_t v, std::uint32_t x) { return h.successor[v][x]; });
  h.is_cyclic = scc.on_cycle;
  for (std::uint32_t g = 0; g < h.state_count; ++g)
    if (h.is_cyclic[g]) h.cyclic.push_back(StateId{g});
  return h;
}

HausdorffReport is_hausdorff(const StrongFixGraph& h) {
  // Backward reachability to e.
  std::vector<std::vector<std::uint32_t>> pred(h.state_count);
  for (const auto& e : h.edges) pred[e.to.value].push_back(e.from.value);
  std::vector<bool> reaches(h.state_count, false);
  std::deque<std::uint32_t> work{h.identity.value};
  reaches[h.identity.value] = true;
  while (!work.empty()) {
    const std::uint32_t v = work.front();
    work.pop_front();
    for (std::uint32_t u : pred[v])
      if (!reaches[u]) {
        reaches[u] = true;
        work.push_back(u);
      }
  }

  HausdorffReport report;
  for (StateId g : h.cyclic) {
    if (g == h.identity || !reaches[g.value]) continue;
    report.hausdorff = false;
    report.witness_state = g;
    // Shortest path g -> e, letters in order.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> parent(h.state_count, {kNoVertex, 0});
    std::vector<bool> seen(h.state_count, false);
    std::deque<std::uint32_t> bfs{g.value};
    seen[g.value] = true;
    while (!bfs.empty() && !seen[h.identity.value]) {
      const std::uint32_t v = bfs.front();
      bfs.pop_front();
      for (std::uint32_t x = 0; x < h.alphabet_size; ++x) {
        const std::uint32_t w = h.successor[v][x];
        if (w == kNoVertex || seen[w]) continue;
        seen[w] = true;
        parent[w] = {v, x};
        bfs.push_back(w);
      }
    }
    for (std::uint32_t v = h.identity.value; v != g.value; v = parent[v].first)
      report.witness_word.push_back(Letter{parent[v].second});
    std::reverse(report.witness_word.begin(), report.witness_word.end());
    break;
  }
  return report;
}

SubsetDigraph SubsetDigraph::build(const StrongFixGraph& h, std::uint64_t capacity) {
  SubsetDigraph d;
  d.alphabet_size_ = h.alphabet_size;
  d.identity_ = h.identity;
  for (StateId g : h.cyclic)
    if (g != h.identity) d.others_.push_back(g);
  const std::size_t m = d.others_.size();
  const std::uint64_t required = m >= 63 ? ~std::uint64_t{0} : std::uint64_t{1} << m;
  if (m >= 32 || required > capacity) throw CapacityExceeded(required, capacity);
  d.vertex_count_ = static_cast<std::uint32_t>(required);

  constexpr std::uint32_t kBad = kNoVertex;
  std::vector<std::uint32_t> bit_of(h.state_count, kBad);
  for (std::uint32_t b = 0; b < m; ++b) bit_of[d.others_[b].value] = b;

  // target_bit[b][x]: bit of the x-target of others_[b], or kBad when the
  // target is missing, not cyclic, or e (which would collide with e's own
  // image).
  std::vector<std::uint32_t> target_bit(m * d.alphabet_size_, kBad);
  for (std::uint32_t b = 0; b < m; ++b)
    for (std::uint32_t x = 0; x < d.alphabet_size_; ++x) {
      const std::uint32_t t = h.successor[d.others_[b].value][x];
      if (t != kNoVertex) target_bit[b * d.alphabet_size_ + x] = bit_of[t];
    }

  const std::uint32_t k = d.alphabet_size_;
  d.succ_.assign(std::size_t{d.vertex_count_} * k, kNoVertex);
  for (std::uint32_t x = 0; x < k; ++x) d.succ_[x] = 0;
  for (std::uint32_t mask = 1; mask < d.vertex_count_; ++mask) {
    const auto low = static_cast<std::uint32_t>(std::countr_zero(mask));
    const std::uint32_t rest = mask & (mask - 1);
    for (std::uint32_t x = 0; x < k; ++x) {
      const std::uint32_t r = d.succ_[std::size_t{rest} * k + x];
      const std::uint32_t t = target_bit[low * k + x];
      if (r == kNoVertex || t == kBad || (r >> t) & 1u) continue;
      d.succ_[std::size_t{mask} * k + x] = r | (1u << t);
    }
  }

  d.scc_ = strongly_connected_components(
      d.vertex_count_, [k](std::uint32_t) { return k; },
      [&d](std::uint32_t v, std::uint32_t x) { return d.successor(v, x); });
  return d;
}

SubsetVertex SubsetDigraph::members(std::uint32_t mask) const {
  std::vector<StateId> out{identity_};
  for (std::uint32_t b = 0; b < others_.size(); ++b)
    if ((mask >> b) & 1u) out.push_back(others_[b]);
  return make_subset(std::move(out));
}

std::uint32_t SubsetDigraph::mask_of(const SubsetVertex& s) const {
  std::uint32_t mask = 0;
  for (StateId g : s) {
    if (g == identity_) continue;
    auto it = std::find(others_.begin(), others_.end(), g);
    if (it == others_.end()) throw std::invalid_argument("state is not cyclic");
    mask |= 1u << (it - others_.begin());
  }
  return mask;
}

std::vector<std::uint32_t> SubsetDigraph::cycle_masks() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < vertex_count_; ++mask)
    if (scc_.on_cycle[mask]) out.push_back(mask);
  return out;
}

std::vector<std::uint32_t> SubsetDigraph::maximal_cycle_masks() const {
  // Cycle subsets are closed under taking subsets (each lies in some H_u on
  // which the path label u acts trivially), so checking one-element
  // extensions is enough.
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < vertex_count_; ++mask) {
    if (!scc_.on_cycle[mask]) continue;
    bool maximal = true;
    for (std::uint32_t b = 0; b < others_.size() && maximal; ++b)
      if (!((mask >> b) & 1u) && scc_.on_cycle[mask | (1u << b)]) maximal = false;
    if (maximal) out.push_back(mask);
  }
  return out;
}

Word SubsetDigraph::cycle_word(std::uint32_t mask) const {
  if (!scc_.on_cycle[mask]) return {};
  const std::uint32_t comp = scc_.component[mask];
  std::unordered_map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> parent;
  std::deque<std::uint32_t> bfs{mask};
  auto path_to = [&](std::uint32_t v) {
    Word w;
    while (v != mask) {
      auto [u, x] = parent.at(v);
      w.push_back(Letter{x});
      v = u;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };
  while (!bfs.empty()) {
    const std::uint32_t u = bfs.front();
    bfs.pop_front();
    for (std::uint32_t x = 0; x < alphabet_size_; ++x) {
      const std::uint32_t v = successor(u, x);
      if (v == kNoVertex || scc_.component[v] != comp) continue;
      if (v == mask) {
        Word w = path_to(u);
        w.push_back(Letter{x});
        return w;
      }
      if (parent.try_emplace(v, u, x).second) bfs.push_back(v);
    }
  }
  throw InternalInconsistency("no closed path through a cycle subset");
}

std::vector<SubsetVertex> cyclic_subsets(const StrongFixGraph& h, std::uint64_t capacity) {
  const SubsetDigraph d = SubsetDigraph::build(h, capacity);
  std::vector<SubsetVertex> out;
  for (std::uint32_t mask : d.cycle_masks()) out.push_back(d.members(mask));
  std::sort(out.begin(), out.end());
  return out;
}

SubsetVertex fixed_subgroup(const NucleusAutomaton& a, const Word& w) {
  SubsetVertex out;
  for (StateId g : a.all_states()) {
    auto [image, rest] = act_word(a, g, w);
    if (image == w && rest == g) out.push_back(g);
  }
  return out;
}

std::vector<CyclicSubgroupWitness> maximal_cyclic_subgroups(const NucleusAutomaton& a,
                                                            const StrongFixGraph& h,
                                                            std::uint64_t capacity) {
  const SubsetDigraph d = SubsetDigraph::build(h, capacity);
  std::vector<CyclicSubgroupWitness> out;
  for (std::uint32_t mask : d.maximal_cycle_masks()) {
    CyclicSubgroupWitness wit;
    wit.elements = d.members(mask);
    const Word base = d.cycle_word(mask);

    // The base word permutes the subset; its order r gives Y = H_{base^r}.
    std::map<StateId, StateId> perm;
    for (StateId g : wit.elements) {
      auto [image, rest] = act_word(a, g, base);
      if (image != base || !std::binary_search(wit.elements.begin(), wit.elements.end(), rest))
        throw InternalInconsistency("cycle label does not permute its subset");
      perm[g] = rest;
    }
    std::uint64_t order = 1;
    std::map<StateId, bool> visited;
    for (StateId g : wit.elements) {
      if (visited[g]) continue;
      std::uint64_t len = 0;
      for (StateId v = g; !visited[v]; v = perm[v]) {
        visited[v] = true;
        ++len;
      }
      order = std::lcm(order, len);
    }
    for (std::uint64_t i = 0; i < order; ++i) wit.word.insert(wit.word.end(), base.begin(), base.end());

    if (fixed_subgroup(a, wit.word) != wit.elements)
      throw InternalInconsistency("maximal cycle subset differs from H_w for its word " +
                                  a.format_word(wit.word));
    try {
      wit.group = group_table(a, wit.elements);
    } catch (const NotClosed& e) {
      throw InternalInconsistency(std::string("maximal cycle subset is not a subgroup: ") + e.what());
    }
    out.push_back(std::move(wit));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& l, const auto& r) { return l.elements < r.elements; });
  return out;
}

std::optional<std::uint32_t> DeltaGraph::index_of(const SubsetVertex& s) const {
  auto it = std::find(vertices.begin(), vertices.end(), s);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - vertices.begin());
}

SubsetVertex delta_step(const NucleusAutomaton& a, const SubsetVertex& y, Letter x) {
  SubsetVertex out;
  for (StateId g : a.all_states()) {
    auto [image, rest] = act_letter(a, g, x);
    if (image == x && std::binary_search(y.begin(), y.end(), rest)) out.push_back(g);
  }
  return out;
}

DeltaGraph build_delta(const NucleusAutomaton& a) {
  DeltaGraph d;
  d.alphabet_size = a.alphabet_size();
  std::map<SubsetVertex, std::uint32_t> index;
  d.vertices.push_back({a.identity()});
  index[d.vertices[0]] = 0;
  for (std::size_t v = 0; v < d.vertices.size(); ++v) {
    std::vector<std::uint32_t> succ;
    for (std::uint32_t x = 0; x < d.alphabet_size; ++x) {
      SubsetVertex next = delta_step(a, d.vertices[v], Letter{x});
      auto [it, inserted] = index.try_emplace(next, static_cast<std::uint32_t>(d.vertices.size()));
      if (inserted) d.vertices.push_back(std::move(next));
      succ.push_back(it->second);
    }
    d.successor.push_back(std::move(succ));
  }
  d.scc = strongly_connected_components(d.successor);
  d.is_minimal.assign(d.vertices.size(), false);
  for (std::uint32_t v = 0; v < d.vertices.size(); ++v) {
    d.is_minimal[v] = !d.scc.has_exit[d.scc.component[v]];
    if (d.is_minimal[v]) d.minimal.push_back(d.vertices[v]);
  }
  std::sort(d.minimal.begin(), d.minimal.end());
  return d;
}

SubsetVertex strong_fix_set(const NucleusAutomaton& a, const Word& w) {
  SubsetVertex y{a.identity()};
  for (auto it = w.rbegin(); it != w.rend(); ++it) y = delta_step(a, y, *it);
  return y;
}

}  // namespace ssg
