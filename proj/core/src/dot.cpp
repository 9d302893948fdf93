#include "ssg/dot.hpp"

#include <algorithm>
#include <sstream>

namespace ssg {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string subset_label(const NucleusAutomaton& a, const SubsetVertex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += a.name(s[i]);
  }
  return out + "}";
}

void vertex(std::ostringstream& os, std::size_t id, const std::string& label, bool doubled) {
  os << "  v" << id << " [label=" << quote(label);
  if (doubled) os << ", peripheries=2";
  os << "];\n";
}

void edge(std::ostringstream& os, std::size_t from, std::size_t to, const std::string& label) {
  os << "  v" << from << " -> v" << to << " [label=" << quote(label) << "];\n";
}

}  // namespace

std::string strongfix_to_dot(const NucleusAutomaton& a, const StrongFixGraph& h) {
  std::ostringstream os;
  os << "digraph H {\n  node [shape=circle];\n";
  for (std::uint32_t g = 0; g < h.state_count; ++g) vertex(os, g, a.name(StateId{g}), h.is_cyclic[g]);
  for (const StrongFixEdge& e : h.edges) {
    const std::string x = a.letter_name(e.letter);
    edge(os, e.from.value, e.to.value, x + "|" + x);
  }
  os << "}\n";
  return os.str();
}

std::string delta_to_dot(const NucleusAutomaton& a, const DeltaGraph& d) {
  std::ostringstream os;
  os << "digraph Delta {\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < d.vertices.size(); ++v)
    vertex(os, v, subset_label(a, d.vertices[v]), d.is_minimal[v]);
  for (std::size_t v = 0; v < d.vertices.size(); ++v)
    for (std::uint32_t x = 0; x < d.alphabet_size; ++x)
      edge(os, v, d.successor[v][x], a.letter_name(Letter{x}));
  os << "}\n";
  return os.str();
}

std::string subset_digraph_to_dot(const NucleusAutomaton& a, const SubsetDigraph& s,
                                  std::uint32_t max_vertices) {
  const std::uint32_t shown = std::min(max_vertices, s.vertex_count());
  std::ostringstream os;
  os << "digraph Subsets {\n  node [shape=circle];\n";
  if (shown < s.vertex_count())
    os << "  // truncated: " << shown << " of " << s.vertex_count() << " vertices\n";
  for (std::uint32_t m = 0; m < shown; ++m) vertex(os, m, subset_label(a, s.members(m)), s.on_cycle(m));
  for (std::uint32_t m = 0; m < shown; ++m)
    for (std::uint32_t x = 0; x < s.alphabet_size(); ++x) {
      const std::uint32_t t = s.successor(m, x);
      if (t != kNoVertex && t < shown) edge(os, m, t, a.letter_name(Letter{x}));
    }
  os << "}\n";
  return os.str();
}

}  // namespace ssg
