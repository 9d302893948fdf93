#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ssg/closure.hpp"
#include "ssg/errors.hpp"
#include "ssg/presentation.hpp"

namespace ssg::test {

std::string data_path(const std::string& file) { return std::string(SSG_DATA_DIR) + "/" + file; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NucleusAutomaton load(const std::string& file) {
  return parse_presentation(read_text(data_path(file))).automaton;
}

const std::vector<std::string>& bundled_nuclei() {
  static const std::vector<std::string> files = {
      "trivial.ssg", "adding-machine.ssg", "infinite-dihedral.ssg", "grigorchuk.ssg",
      "grigorchuk-erschler.ssg"};
  return files;
}

Word word_of(const NucleusAutomaton& a, const std::string& letters) {
  Word w;
  for (char c : letters) w.push_back(a.find_letter(std::string(1, c)).value());
  return w;
}

SubsetVertex states_of(const NucleusAutomaton& a, const std::vector<std::string>& names) {
  std::vector<StateId> out;
  for (const auto& n : names) out.push_back(a.find(n).value());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<NucleusAutomaton> random_nucleus(std::mt19937& rng, std::uint32_t max_states,
                                               std::uint32_t max_alphabet) {
  const std::uint32_t k = std::uniform_int_distribution<std::uint32_t>(2, max_alphabet)(rng);
  const std::uint32_t n = std::uniform_int_distribution<std::uint32_t>(2, max_states)(rng);
  std::vector<std::string> alphabet;
  for (std::uint32_t x = 0; x < k; ++x) alphabet.push_back(std::to_string(x));

  std::vector<StateSpec> states;
  states.push_back({"e", {}, {}});
  for (std::uint32_t x = 0; x < k; ++x) {
    states[0].output.push_back(Letter{x});
    states[0].restriction.push_back(StateId{0});
  }
  // Half the states fix every letter (directed), the rest permute letters
  // and mostly restrict to e (active); mixing both yields non-Hausdorff
  // nuclei reasonably often.
  std::uniform_int_distribution<std::uint32_t> pick_state(0, n - 1);
  std::bernoulli_distribution directed(0.7), to_identity(0.5);
  for (std::uint32_t g = 1; g < n; ++g) {
    StateSpec s{std::string(1, static_cast<char>('a' + g - 1)), {}, {}};
    std::vector<std::uint32_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0u);
    const bool fixes = directed(rng);
    if (!fixes) std::shuffle(perm.begin(), perm.end(), rng);
    for (std::uint32_t x = 0; x < k; ++x) {
      s.output.push_back(Letter{perm[x]});
      s.restriction.push_back(StateId{!fixes && to_identity(rng) ? 0 : pick_state(rng)});
    }
    states.push_back(std::move(s));
  }

  try {
    const NucleusAutomaton gens = NucleusAutomaton::create(alphabet, states, StateId{0});
    std::vector<StateId> generators;
    for (std::uint32_t g = 1; g < n; ++g) generators.push_back(StateId{g});
    ClosureOptions opts;
    opts.depth_bound = 6;
    opts.max_elements = 2000;
    NucleusAutomaton nucleus = nucleus_closure(gens, generators, opts);
    if (nucleus.state_count() < 2 || nucleus.state_count() > max_states) return std::nullopt;
    return nucleus;
  } catch (const Error&) {
    return std::nullopt;
  }
}

Word random_word(std::mt19937& rng, std::uint32_t k, std::size_t max_len) {
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  std::uniform_int_distribution<std::uint32_t> letter(0, k - 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(Letter{letter(rng)});
  return w;
}

FormalProduct random_product(std::mt19937& rng, const NucleusAutomaton& a, std::size_t max_len) {
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  std::uniform_int_distribution<std::uint32_t> state(0, a.state_count() - 1);
  std::bernoulli_distribution inv(0.5);
  FormalProduct p;
  for (std::size_t i = 0; i < len; ++i) p.factors.push_back({StateId{state(rng)}, inv(rng)});
  return p;
}

NucleusAutomaton polynomial_nucleus(std::uint32_t degree, std::uint32_t poly_low) {
  const std::uint32_t size = 1u << degree;
  const std::uint32_t top = size >> 1;
  auto times_x = [&](std::uint32_t v) { return ((v << 1) & (size - 1)) ^ ((v & top) ? poly_low : 0); };
  // States: e = 0, a = 1, b_v = v + 1 (v >= 1).
  std::vector<StateSpec> states;
  states.push_back({"e", {Letter{0}, Letter{1}}, {StateId{0}, StateId{0}}});
  states.push_back({"a", {Letter{1}, Letter{0}}, {StateId{0}, StateId{0}}});
  auto id_of = [](std::uint32_t v) { return StateId{v == 0 ? 0 : v + 1}; };
  std::vector<StateId> generators{StateId{1}};
  for (std::uint32_t v = 1; v < size; ++v) {
    states.push_back({"b" + std::to_string(v), {Letter{0}, Letter{1}},
                      {StateId{(v & top) ? 1u : 0u}, id_of(times_x(v))}});
    generators.push_back(id_of(v));
  }
  const auto gens = NucleusAutomaton::create({"0", "1"}, states, StateId{0});
  return nucleus_closure(gens, generators);
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, long lo, long hi) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<long> entry(lo, hi);
  std::bernoulli_distribution sparse(0.3);
  const std::size_t r = dim(rng), c = dim(rng);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = sparse(rng) ? 0 : entry(rng);
  return m;
}

namespace oracle {

std::pair<Word, StateId> apply(const NucleusAutomaton& a, StateId g, const Word& w) {
  Word out;
  for (Letter x : w) {
    const StateSpec& s = a.states()[g.value];
    out.push_back(s.output[x.value]);
    g = s.restriction[x.value];
  }
  return {out, g};
}

namespace {

Word apply_inverse(const NucleusAutomaton& a, StateId g, const Word& w) {
  Word out;
  for (Letter x : w) {
    const StateSpec& s = a.states()[g.value];
    std::uint32_t y = 0;
    while (s.output[y] != x) ++y;
    out.push_back(Letter{y});
    g = s.restriction[y];
  }
  return out;
}

}  // namespace

Word apply(const NucleusAutomaton& a, const FormalProduct& p, const Word& w) {
  Word cur = w;
  for (auto it = p.factors.rbegin(); it != p.factors.rend(); ++it)
    cur = it->inverse ? apply_inverse(a, it->state, cur) : apply(a, it->state, cur).first;
  return cur;
}

std::vector<Word> words_of_length(std::uint32_t k, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (std::uint32_t x = 0; x < k; ++x) {
        Word v = w;
        v.push_back(Letter{x});
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

bool agree_up_to(const NucleusAutomaton& a, const FormalProduct& p, const FormalProduct& q,
                 std::size_t n) {
  // Agreement on all words of length n implies agreement on their prefixes.
  for (const Word& w : words_of_length(a.alphabet_size(), n))
    if (apply(a, p, w) != apply(a, q, w)) return false;
  return true;
}

SubsetVertex strong_fix(const NucleusAutomaton& a, const Word& w) {
  SubsetVertex out;
  for (std::uint32_t g = 0; g < a.state_count(); ++g) {
    auto [img, sec] = apply(a, StateId{g}, w);
    if (img == w && sec == a.identity()) out.push_back(StateId{g});
  }
  return out;
}

SubsetVertex fixed_by_section(const NucleusAutomaton& a, const Word& w) {
  SubsetVertex out;
  for (std::uint32_t g = 0; g < a.state_count(); ++g) {
    auto [img, sec] = apply(a, StateId{g}, w);
    if (img == w && sec == StateId{g}) out.push_back(StateId{g});
  }
  return out;
}

std::size_t rank_q(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> r(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m.at(i, j);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && r[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(r[p], r[rank]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || r[i][c] == 0) continue;
      const mpq_class f = r[i][c] / r[rank][c];
      for (std::size_t j = c; j < m.cols(); ++j) r[i][j] -= f * r[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_p(const IntMatrix& m, std::uint64_t p) {
  const long q = static_cast<long>(p);
  std::vector<std::vector<long>> r(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_class v = m.at(i, j) % q;
      if (v < 0) v += q;
      r[i][j] = v.get_si();
    }
  auto inverse = [&](long x) {
    for (long y = 1; y < q; ++y)
      if (x * y % q == 1) return y;
    throw std::logic_error("no inverse");
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && r[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(r[piv], r[rank]);
    const long inv = inverse(r[rank][c]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      const long f = r[i][c] * inv % q;
      for (std::size_t j = c; j < m.cols(); ++j) r[i][j] = ((r[i][j] - f * r[rank][j]) % q + q) % q;
    }
    ++rank;
  }
  return rank;
}

namespace {

mpq_class determinant(std::vector<std::vector<mpq_class>> d) {
  const std::size_t n = d.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && d[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(d[p], d[c]);
      det = -det;
    }
    det *= d[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const mpq_class f = d[i][c] / d[c][c];
      for (std::size_t j = c; j < n; ++j) d[i][j] -= f * d[c][j];
    }
  }
  return det;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<BigInt> invariant_factors(const IntMatrix& m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    subsets(m.rows(), k, rows);
    subsets(m.cols(), k, cols);
    BigInt g = 0;
    for (const auto& rs : rows)
      for (const auto& cs : cols) {
        std::vector<std::vector<mpq_class>> d(k, std::vector<mpq_class>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) d[i][j] = m.at(rs[i], cs[j]);
        const mpq_class det = determinant(std::move(d));
        g = gcd(g, BigInt(det.get_num()));
      }
    if (g == 0) {
      out.resize(n, 0);
      return out;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

std::vector<bool> reachable(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t v) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::uint32_t> stack{v};
  seen[v] = true;
  while (!stack.empty()) {
    const std::uint32_t u = stack.back();
    stack.pop_back();
    for (std::uint32_t w : adj[u])
      if (w < adj.size() && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return seen;
}

}  // namespace oracle

}  // namespace ssg::test
