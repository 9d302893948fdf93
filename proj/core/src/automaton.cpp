#include "ssg/automaton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "moore.hpp"
#include "ssg/errors.hpp"

namespace ssg {
namespace {

std::string describe_images(const std::vector<std::string>& alphabet,
                            const StateSpec& s) {
  std::string out;
  for (std::size_t x = 0; x < s.output.size(); ++x) {
    if (!out.empty()) out += ", ";
    out += alphabet[x] + "->";
    out += s.output[x].value < alphabet.size() ? alphabet[s.output[x].value]
                                               : std::to_string(s.output[x].value);
  }
  return out;
}

bool acts_trivially(const StateSpec& s, StateId self) {
  for (std::size_t x = 0; x < s.output.size(); ++x) {
    if (s.output[x].value != x || s.restriction[x] != self) return false;
  }
  return true;
}

std::vector<std::uint32_t> bisimulation_classes(const std::vector<StateSpec>& states,
                                                std::uint32_t k) {
  std::vector<std::vector<std::uint32_t>> out(states.size()), rest(states.size());
  for (std::size_t g = 0; g < states.size(); ++g)
    for (std::uint32_t x = 0; x < k; ++x) {
      out[g].push_back(states[g].output[x].value);
      rest[g].push_back(states[g].restriction[x].value);
    }
  return detail::moore_classes(out, rest);
}

}  // namespace

NucleusAutomaton NucleusAutomaton::create(std::vector<std::string> alphabet,
                                          std::vector<StateSpec> states,
                                          std::optional<StateId> identity) {
  const auto k = static_cast<std::uint32_t>(alphabet.size());
  if (k < 2) throw ValidationError("alphabet needs at least two letters");
  if (states.empty()) throw NoIdentity("automaton has no states");

  std::set<std::string> names;
  for (const auto& s : states) {
    if (s.name.empty()) throw ValidationError("state with empty name");
    if (!names.insert(s.name).second)
      throw ValidationError("duplicate state name '" + s.name + "'");
  }

  NucleusAutomaton a;
  a.alphabet_ = std::move(alphabet);
  for (const auto& s : states) {
    if (s.output.size() != k || s.restriction.size() != k)
      throw ValidationError("state '" + s.name + "' needs exactly " +
                            std::to_string(k) + " transitions");
    std::vector<bool> hit(k, false);
    for (Letter y : s.output) {
      if (y.value >= k || hit[y.value])
        throw NotAPermutation("state '" + s.name +
                              "' does not permute the alphabet: " +
                              describe_images(a.alphabet_, s));
      hit[y.value] = true;
    }
    for (StateId t : s.restriction) {
      if (t.value >= states.size())
        throw DanglingRestriction("state '" + s.name +
                                  "' restricts to unknown state #" +
                                  std::to_string(t.value));
    }
  }

  if (identity) {
    if (identity->value >= states.size())
      throw NoIdentity("declared identity is not a state");
    if (!acts_trivially(states[identity->value], *identity))
      throw NoIdentity("declared identity '" + states[identity->value].name +
                       "' does not act trivially");
    a.identity_ = *identity;
  } else {
    bool found = false;
    for (std::uint32_t g = 0; g < states.size(); ++g) {
      if (acts_trivially(states[g], StateId{g})) {
        a.identity_ = StateId{g};
        found = true;
        break;
      }
    }
    if (!found) throw NoIdentity("no state acts as the identity");
  }

  const auto cls = bisimulation_classes(states, k);
  std::map<std::uint32_t, std::uint32_t> first_in_class;
  for (std::uint32_t g = 0; g < states.size(); ++g) {
    auto [it, inserted] = first_in_class.try_emplace(cls[g], g);
    if (!inserted)
      throw DuplicateBisimilarStates("states '" + states[it->second].name +
                                     "' and '" + states[g].name +
                                     "' define the same transformation");
  }

  a.states_ = std::move(states);
  a.inverse_output_.assign(a.states_.size(), std::vector<Letter>(k));
  for (std::size_t g = 0; g < a.states_.size(); ++g)
    for (std::uint32_t x = 0; x < k; ++x)
      a.inverse_output_[g][a.states_[g].output[x].value] = Letter{x};
  return a;
}

std::optional<StateId> NucleusAutomaton::find(std::string_view name) const {
  for (std::uint32_t g = 0; g < states_.size(); ++g)
    if (states_[g].name == name) return StateId{g};
  return std::nullopt;
}

std::optional<Letter> NucleusAutomaton::find_letter(std::string_view token) const {
  for (std::uint32_t x = 0; x < alphabet_.size(); ++x)
    if (alphabet_[x] == token) return Letter{x};
  return std::nullopt;
}

std::string NucleusAutomaton::format_word(std::span<const Letter> w) const {
  const bool compact = std::all_of(alphabet_.begin(), alphabet_.end(),
                                   [](const std::string& t) { return t.size() == 1; });
  std::string out;
  for (Letter x : w) {
    if (!compact && !out.empty()) out += ' ';
    out += alphabet_[x.value];
  }
  return out;
}

std::vector<StateId> NucleusAutomaton::all_states() const {
  std::vector<StateId> ids(states_.size());
  for (std::uint32_t g = 0; g < ids.size(); ++g) ids[g] = StateId{g};
  return ids;
}

std::pair<Letter, StateId> act_letter(const NucleusAutomaton& a, StateId g,
                                      Letter x) {
  return {a.output(g, x), a.restriction(g, x)};
}

std::pair<Word, StateId> act_word(const NucleusAutomaton& a, StateId g,
                                  std::span<const Letter> w) {
  Word image;
  image.reserve(w.size());
  for (Letter x : w) {
    auto [y, next] = act_letter(a, g, x);
    image.push_back(y);
    g = next;
  }
  return {std::move(image), g};
}

FormalProduct FormalProduct::inverse() const {
  FormalProduct inv;
  inv.factors.reserve(factors.size());
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    inv.factors.push_back(Factor{it->state, !it->inverse});
  return inv;
}

FormalProduct operator*(const FormalProduct& lhs, const FormalProduct& rhs) {
  FormalProduct out = lhs;
  out.factors.insert(out.factors.end(), rhs.factors.begin(), rhs.factors.end());
  return out;
}

FormalProduct canonicalize(const NucleusAutomaton& a, FormalProduct p) {
  std::vector<Factor> reduced;
  reduced.reserve(p.factors.size());
  for (const Factor& f : p.factors) {
    if (f.state == a.identity()) continue;
    if (!reduced.empty() && reduced.back().state == f.state &&
        reduced.back().inverse != f.inverse) {
      reduced.pop_back();
      continue;
    }
    reduced.push_back(f);
  }
  p.factors = std::move(reduced);
  return p;
}

std::pair<Letter, FormalProduct> act_letter(const NucleusAutomaton& a,
                                            const FormalProduct& p, Letter x) {
  FormalProduct rest;
  rest.factors.resize(p.factors.size());
  for (std::size_t i = p.factors.size(); i-- > 0;) {
    const Factor& f = p.factors[i];
    if (!f.inverse) {
      rest.factors[i] = Factor{a.restriction(f.state, x), false};
      x = a.output(f.state, x);
    } else {
      // g^-1(x) = y with g(y) = x, and g^-1|_x = (g|_y)^-1.
      const Letter y = a.preimage(f.state, x);
      rest.factors[i] = Factor{a.restriction(f.state, y), true};
      x = y;
    }
  }
  return {x, canonicalize(a, std::move(rest))};
}

std::string to_string(const NucleusAutomaton& a, const FormalProduct& p) {
  if (p.factors.empty()) return a.name(a.identity());
  std::string out;
  for (const Factor& f : p.factors) {
    if (!out.empty()) out += '*';
    out += a.name(f.state);
    if (f.inverse) out += "^-1";
  }
  return out;
}

}  // namespace ssg
