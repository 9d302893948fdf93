#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ssg/automaton.hpp"
#include "ssg/linalg.hpp"
#include "ssg/structure.hpp"

namespace ssg::test {

std::string data_path(const std::string& file);
std::string read_text(const std::string& path);
NucleusAutomaton load(const std::string& file);

/// The bundled nuclei, by file name.
const std::vector<std::string>& bundled_nuclei();

Word word_of(const NucleusAutomaton& a, const std::string& letters);
SubsetVertex states_of(const NucleusAutomaton& a, const std::vector<std::string>& names);

/// A nucleus with at most `max_states` states over 2..max_alphabet letters,
/// obtained by closing a random generating set; nullopt when the closure
/// fails or is too large.
std::optional<NucleusAutomaton> random_nucleus(std::mt19937& rng, std::uint32_t max_states,
                                               std::uint32_t max_alphabet);

Word random_word(std::mt19937& rng, std::uint32_t k, std::size_t max_len);
FormalProduct random_product(std::mt19937& rng, const NucleusAutomaton& a, std::size_t max_len);

/// Binary-alphabet group with a = (01) and one directed state b_v for each
/// nonzero v in GF(2)^degree: b_v = (a^{v_top}, b_{xv}), multiplication by x
/// taken modulo the polynomial whose low coefficients are `poly_low`
/// (bit i = coefficient of x^i). Closed into its nucleus before returning.
/// A primitive polynomial puts every b_v on one cycle, so |C| = 2^degree.
NucleusAutomaton polynomial_nucleus(std::uint32_t degree, std::uint32_t poly_low);

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, long lo, long hi);

/// Brute-force references. None of these call into the library beyond the
/// raw transition table and plain data accessors.
namespace oracle {

/// Image and section of a state on a word, walking the table letter by letter.
std::pair<Word, StateId> apply(const NucleusAutomaton& a, StateId g, const Word& w);

/// Image of a word under a formal product, inverses found by letter search.
Word apply(const NucleusAutomaton& a, const FormalProduct& p, const Word& w);

/// All words of length exactly n, in lexicographic order.
std::vector<Word> words_of_length(std::uint32_t k, std::size_t n);

/// p and q agree on every word of length <= n.
bool agree_up_to(const NucleusAutomaton& a, const FormalProduct& p, const FormalProduct& q,
                 std::size_t n);

/// {g : g(w) = w and g|_w = e}.
SubsetVertex strong_fix(const NucleusAutomaton& a, const Word& w);

/// {g : g(w) = w and g|_w = g}.
SubsetVertex fixed_by_section(const NucleusAutomaton& a, const Word& w);

std::size_t rank_q(const IntMatrix& m);
std::size_t rank_p(const IntMatrix& m, std::uint64_t p);
/// Invariant factors from gcds of k x k minors.
std::vector<BigInt> invariant_factors(const IntMatrix& m);

/// Vertices reachable from `v` (including v) in an adjacency-list digraph.
std::vector<bool> reachable(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t v);

}  // namespace oracle

}  // namespace ssg::test
