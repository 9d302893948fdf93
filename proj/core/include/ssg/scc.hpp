#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace ssg {

inline constexpr std::uint32_t kNoVertex = std::numeric_limits<std::uint32_t>::max();

struct SccResult {
  /// Component id per vertex. Ids follow completion order, so every edge
  /// between distinct components goes from a higher id to a lower one.
  std::vector<std::uint32_t> component;
  std::uint32_t count = 0;
  std::vector<std::uint32_t> size;
  /// Vertex lies on a nonempty directed cycle (component of size >= 2, or
  /// a self-loop).
  std::vector<bool> on_cycle;
  /// Component has an edge leaving it.
  std::vector<bool> has_exit;
};

/// Strongly connected components of a digraph given by `degree(v)` and
/// `successor(v, i)` (which may return kNoVertex for an absent edge).
///
/// Iterative variant of Pearce's space-efficient Tarjan: one word per vertex
/// plus explicit stacks, so deep graphs do not recurse.
template <class Degree, class Successor>
SccResult strongly_connected_components(std::uint32_t n, Degree&& degree,
                                        Successor&& successor) {
  std::vector<std::uint32_t> rindex(n, 0);
  std::vector<bool> root(n, false);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> call;  // (vertex, next edge)
  std::vector<std::uint32_t> stack;
  std::uint32_t index = 1;
  std::uint32_t c = n == 0 ? 0 : n - 1;

  auto begin_visit = [&](std::uint32_t v) {
    call.emplace_back(v, 0);
    root[v] = true;
    rindex[v] = index++;
  };
  auto finish_edge = [&](std::uint32_t v, std::uint32_t w) {
    if (rindex[w] < rindex[v]) {
      rindex[v] = rindex[w];
      root[v] = false;
    }
  };

  for (std::uint32_t start = 0; start < n; ++start) {
    if (rindex[start] != 0) continue;
    begin_visit(start);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < degree(v)) {
        const std::uint32_t w = successor(v, next++);
        if (w == kNoVertex) continue;
        if (rindex[w] == 0) {
          begin_visit(w);
        } else {
          finish_edge(v, w);
        }
        continue;
      }
      const std::uint32_t done = v;
      call.pop_back();
      if (root[done]) {
        --index;
        while (!stack.empty() && rindex[done] <= rindex[stack.back()]) {
          rindex[stack.back()] = c;
          stack.pop_back();
          --index;
        }
        rindex[done] = c;
        --c;
      } else {
        stack.push_back(done);
      }
      if (!call.empty()) finish_edge(call.back().first, done);
    }
  }

  SccResult out;
  out.component.resize(n);
  std::uint32_t max_id = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    out.component[v] = (n - 1) - rindex[v];
    max_id = std::max(max_id, out.component[v] + 1);
  }
  out.count = n == 0 ? 0 : max_id;
  out.size.assign(out.count, 0);
  out.has_exit.assign(out.count, false);
  for (std::uint32_t v = 0; v < n; ++v) ++out.size[out.component[v]];
  out.on_cycle.assign(n, false);
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::uint32_t cv = out.component[v];
    if (out.size[cv] >= 2) out.on_cycle[v] = true;
    const std::uint32_t d = degree(v);
    for (std::uint32_t i = 0; i < d; ++i) {
      const std::uint32_t w = successor(v, i);
      if (w == kNoVertex) continue;
      if (w == v) out.on_cycle[v] = true;
      if (out.component[w] != cv) out.has_exit[cv] = true;
    }
  }
  return out;
}

/// Convenience overload for adjacency lists.
inline SccResult strongly_connected_components(
    const std::vector<std::vector<std::uint32_t>>& adj) {
  return strongly_connected_components(
      static_cast<std::uint32_t>(adj.size()),
      [&](std::uint32_t v) { return static_cast<std::uint32_t>(adj[v].size()); },
      [&](std::uint32_t v, std::uint32_t i) { return adj[v][i]; });
}

}  // namespace ssg
