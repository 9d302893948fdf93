#include "ssg/closure.hpp"

#include <deque>
#include <map>
#include <set>

#include "moore.hpp"
#include "ssg/errors.hpp"
#include "ssg/scc.hpp"

namespace ssg {
namespace {

constexpr std::uint32_t kDropped = kNoVertex;

// Explicit transducer whose states are group elements, each with a formal
// product naming it. After compact() no two states are equal.
struct Pool {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::vector<std::uint32_t>> rest;
  std::vector<FormalProduct> rep;

  std::uint32_t size() const { return static_cast<std::uint32_t>(out.size()); }

  std::uint32_t add(std::vector<std::uint32_t> o, std::vector<std::uint32_t> r, FormalProduct p) {
    out.push_back(std::move(o));
    rest.push_back(std::move(r));
    rep.push_back(std::move(p));
    return size() - 1;
  }

  /// Merges equal states and keeps only those in `keep` (which must be
  /// closed under restriction), in the order given. Returns old id -> new id,
  /// with kDropped for discarded states.
  std::vector<std::uint32_t> compact(const std::vector<std::uint32_t>& keep) {
    const std::vector<std::uint32_t> cls = detail::moore_classes(out, rest);
    std::map<std::uint32_t, std::uint32_t> class_to_new;
    std::vector<std::uint32_t> first;  // representative old id per new id
    for (std::uint32_t g : keep)
      if (class_to_new.try_emplace(cls[g], static_cast<std::uint32_t>(first.size())).second)
        first.push_back(g);
    std::vector<std::uint32_t> remap(size(), kDropped);
    for (std::uint32_t g = 0; g < size(); ++g) {
      auto it = class_to_new.find(cls[g]);
      if (it != class_to_new.end()) remap[g] = it->second;
    }
    Pool next;
    for (std::uint32_t g : first) {
      std::vector<std::uint32_t> r;
      for (std::uint32_t t : rest[g]) r.push_back(remap[t]);
      next.add(out[g], std::move(r), rep[g]);
    }
    *this = std::move(next);
    return remap;
  }
};

// Members of the restriction closure of `roots` reachable from a cycle of
// the restriction graph, in breadth-first order from the roots.
std::vector<std::uint32_t> recurrent_closure(const Pool& pool,
                                             const std::vector<std::uint32_t>& roots) {
  std::vector<std::uint32_t> order;
  std::map<std::uint32_t, std::uint32_t> local;
  for (std::uint32_t r : roots)
    if (local.try_emplace(r, static_cast<std::uint32_t>(order.size())).second) order.push_back(r);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::uint32_t t : pool.rest[order[i]])
      if (local.try_emplace(t, static_cast<std::uint32_t>(order.size())).second) order.push_back(t);

  std::vector<std::vector<std::uint32_t>> adj(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::uint32_t t : pool.rest[order[i]]) adj[i].push_back(local.at(t));
  const SccResult scc = strongly_connected_components(adj);
  std::vector<bool> keep(order.size(), false);
  std::deque<std::uint32_t> work;
  for (std::uint32_t i = 0; i < order.size(); ++i)
    if (scc.on_cycle[i]) {
      keep[i] = true;
      work.push_back(i);
    }
  while (!work.empty()) {
    const std::uint32_t i = work.front();
    work.pop_front();
    for (std::uint32_t j : adj[i])
      if (!keep[j]) {
        keep[j] = true;
        work.push_back(j);
      }
  }
  std::vector<std::uint32_t> result;
  for (std::uint32_t i = 0; i < order.size(); ++i)
    if (keep[i]) result.push_back(order[i]);
  return result;
}

// Adds the product automaton states reachable from g*h; returns the id of g*h.
std::uint32_t add_product(const NucleusAutomaton& a, Pool& pool,
                          std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t>& pairs,
                          std::uint32_t g, std::uint32_t h) {
  const std::uint32_t k = a.alphabet_size();
  std::deque<std::pair<std::uint32_t, std::uint32_t>> work;
  auto intern = [&](std::uint32_t u, std::uint32_t v) {
    auto [it, inserted] = pairs.try_emplace({u, v}, 0);
    if (inserted) {
      it->second = pool.add({}, {}, canonicalize(a, pool.rep[u] * pool.rep[v]));
      work.emplace_back(u, v);
    }
    return it->second;
  };
  const std::uint32_t root = intern(g, h);
  while (!work.empty()) {
    const auto [u, v] = work.front();
    work.pop_front();
    const std::uint32_t id = pairs.at({u, v});
    std::vector<std::uint32_t> o(k), r(k);
    for (std::uint32_t x = 0; x < k; ++x) {
      const std::uint32_t y = pool.out[v][x];
      o[x] = pool.out[u][y];
      r[x] = intern(pool.rest[u][y], pool.rest[v][x]);
    }
    pool.out[id] = std::move(o);
    pool.rest[id] = std::move(r);
  }
  return root;
}

void remap_all(std::vector<std::uint32_t>& ids, const std::vector<std::uint32_t>& remap) {
  for (auto& id : ids) id = id == kDropped ? kDropped : remap[id];
}

}  // namespace

NucleusAutomaton nucleus_closure(const NucleusAutomaton& a,
                                 const std::vector<StateId>& generators,
                                 const ClosureOptions& options) {
  if (options.depth_bound < 1) throw std::invalid_argument("depth bound must be >= 1");
  const std::uint32_t n = a.state_count();
  const std::uint32_t k = a.alphabet_size();

  // States of a, then their inverses at n + g.
  Pool pool;
  for (StateId g : a.all_states()) {
    std::vector<std::uint32_t> o, r;
    for (std::uint32_t x = 0; x < k; ++x) {
      o.push_back(a.output(g, Letter{x}).value);
      r.push_back(a.restriction(g, Letter{x}).value);
    }
    pool.add(std::move(o), std::move(r),
             g == a.identity() ? FormalProduct{} : FormalProduct::of(g));
  }
  for (StateId g : a.all_states()) {
    std::vector<std::uint32_t> o(k), r(k);
    for (std::uint32_t x = 0; x < k; ++x) {
      const Letter y = a.preimage(g, Letter{x});
      o[x] = y.value;
      r[x] = n + a.restriction(g, y).value;
    }
    pool.add(std::move(o), std::move(r),
             g == a.identity() ? FormalProduct{} : FormalProduct::inverse_of(g));
  }

  std::vector<std::uint32_t> tracked{a.identity().value};  // identity, then generators
  std::vector<std::uint32_t> seeds{a.identity().value};
  for (StateId g : generators) {
    tracked.push_back(g.value);
    seeds.push_back(g.value);
    seeds.push_back(n + g.value);
  }
  std::vector<std::uint32_t> nucleus = recurrent_closure(pool, seeds);
  {
    const auto remap = pool.compact(nucleus);
    remap_all(nucleus, remap);
    remap_all(tracked, remap);
    std::vector<std::uint32_t> unique;
    std::set<std::uint32_t> seen;
    for (std::uint32_t g : nucleus)
      if (seen.insert(g).second) unique.push_back(g);
    nucleus = std::move(unique);
  }

  bool stable = false;
  for (std::size_t round = 1; round <= options.depth_bound; ++round) {
    const std::vector<std::uint32_t> snapshot = nucleus;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> pairs;
    std::vector<std::uint32_t> products;
    for (std::uint32_t g : snapshot)
      for (std::uint32_t h : snapshot) {
        products.push_back(add_product(a, pool, pairs, g, h));
        if (pool.size() > options.max_elements) throw NotContractedWithinBound(round, nucleus.size());
      }

    const auto remap = pool.compact([&] {
      std::vector<std::uint32_t> keep = snapshot;
      for (std::uint32_t g : recurrent_closure(pool, products)) keep.push_back(g);
      return keep;
    }());
    std::vector<std::uint32_t> grown;
    std::set<std::uint32_t> seen;
    for (std::uint32_t g : snapshot) grown.push_back(remap[g]);
    for (std::uint32_t g : grown) seen.insert(g);
    const std::size_t old_size = seen.size();
    for (std::uint32_t g = 0; g < pool.size(); ++g)
      if (seen.insert(g).second) grown.push_back(g);
    remap_all(tracked, remap);
    nucleus = std::move(grown);
    if (seen.size() == old_size) {
      stable = true;
      break;
    }
  }
  if (!stable) throw NotContractedWithinBound(options.depth_bound, nucleus.size());

  // Identity first, then generators that survived, then discovery order.
  std::vector<std::uint32_t> order;
  std::set<std::uint32_t> placed;
  for (std::uint32_t id : tracked)
    if (id != kDropped && placed.insert(id).second) order.push_back(id);
  for (std::uint32_t id : nucleus)
    if (placed.insert(id).second) order.push_back(id);

  std::vector<std::uint32_t> new_id(pool.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) new_id[order[i]] = i;

  std::set<std::string> used;
  std::vector<StateSpec> specs;
  for (std::uint32_t id : order) {
    StateSpec s;
    s.name = pool.rep[id].factors.empty() ? a.name(a.identity()) : to_string(a, pool.rep[id]);
    while (!used.insert(s.name).second) s.name += "'";
    for (std::uint32_t x = 0; x < k; ++x) {
      s.output.push_back(Letter{pool.out[id][x]});
      s.restriction.push_back(StateId{new_id[pool.rest[id][x]]});
    }
    specs.push_back(std::move(s));
  }
  return NucleusAutomaton::create(a.alphabet(), std::move(specs), StateId{0});
}

}  // namespace ssg
