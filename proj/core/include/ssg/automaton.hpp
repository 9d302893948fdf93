#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ssg {

struct Letter {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

struct StateId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(StateId, StateId) = default;
};

using Word = std::vector<Letter>;

/// One row of the state table: output permutation and restriction per letter.
struct StateSpec {
  std::string name;
  std::vector<Letter> output;
  std::vector<StateId> restriction;
};

/// The nucleus of a contracting self-similar group, presented as an
/// invertible Mealy automaton with a designated identity state.
///
/// Instances are validated on construction and immutable afterwards:
/// outputs are permutations, restriction targets exist, the identity state
/// acts trivially and no two states define the same transformation of X^w.
class NucleusAutomaton {
 public:
  /// Validates and builds an automaton. If `identity` is empty the identity
  /// state is inferred. Throws a ValidationError subclass on failure.
  static NucleusAutomaton create(std::vector<std::string> alphabet,
                                 std::vector<StateSpec> states,
                                 std::optional<StateId> identity = {});

  std::uint32_t alphabet_size() const noexcept {
    return static_cast<std::uint32_t>(alphabet_.size());
  }
  std::uint32_t state_count() const noexcept {
    return static_cast<std::uint32_t>(states_.size());
  }
  StateId identity() const noexcept { return identity_; }

  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::string& letter_name(Letter x) const { return alphabet_.at(x.value); }
  const std::string& name(StateId g) const { return states_.at(g.value).name; }
  const std::vector<StateSpec>& states() const noexcept { return states_; }

  Letter output(StateId g, Letter x) const {
    return states_[g.value].output[x.value];
  }
  StateId restriction(StateId g, Letter x) const {
    return states_[g.value].restriction[x.value];
  }
  /// The letter y with output(g, y) == x.
  Letter preimage(StateId g, Letter x) const {
    return inverse_output_[g.value][x.value];
  }

  std::optional<StateId> find(std::string_view name) const;
  std::optional<Letter> find_letter(std::string_view token) const;

  /// Renders a word with the alphabet's tokens: concatenated when every token
  /// is one character long, space separated otherwise.
  std::string format_word(std::span<const Letter> w) const;

  std::vector<StateId> all_states() const;

 private:
  NucleusAutomaton() = default;

  std::vector<std::string> alphabet_;
  std::vector<StateSpec> states_;
  std::vector<std::vector<Letter>> inverse_output_;
  StateId identity_{};
};

/// Returns (g(x), g|_x).
std::pair<Letter, StateId> act_letter(const NucleusAutomaton& a, StateId g,
                                      Letter x);

/// Returns (g(w), g|_w), folding act_letter along w.
std::pair<Word, StateId> act_word(const NucleusAutomaton& a, StateId g,
                                  std::span<const Letter> w);

/// A group word over nucleus states. Factors act right to left:
/// (gh)(x) = g(h(x)) and (gh)|_x = g|_{h(x)} h|_x.
struct Factor {
  StateId state;
  bool inverse = false;
  friend constexpr auto operator<=>(Factor, Factor) = default;
};

struct FormalProduct {
  std::vector<Factor> factors;

  static FormalProduct of(StateId g) { return {{Factor{g, false}}}; }
  static FormalProduct inverse_of(StateId g) { return {{Factor{g, true}}}; }

  FormalProduct inverse() const;
  friend FormalProduct operator*(const FormalProduct& lhs,
                                 const FormalProduct& rhs);
  friend bool operator==(const FormalProduct&, const FormalProduct&) = default;
};

/// Drops identity factors and cancels adjacent g g^-1 pairs. The result
/// denotes the same group element; the empty product is the identity.
FormalProduct canonicalize(const NucleusAutomaton& a, FormalProduct p);

/// One step of the product action: (p(x), p|_x) with p|_x canonicalized.
std::pair<Letter, FormalProduct> act_letter(const NucleusAutomaton& a,
                                            const FormalProduct& p, Letter x);

std::string to_string(const NucleusAutomaton& a, const FormalProduct& p);

}  // namespace ssg
