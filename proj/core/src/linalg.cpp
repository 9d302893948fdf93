#include "ssg/linalg.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ssg/errors.hpp"

namespace ssg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::parse(std::string_view text) {
  std::vector<std::vector<BigInt>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<BigInt> row;
    std::string tok;
    while (ls >> tok) row.emplace_back(tok);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix text");
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
  IntVector out(rows_, BigInt(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn(at(i, k)) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += at(i, k) * rhs.at(k, j);
    }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c);
    os << '\n';
  }
  return os;
}

std::size_t rational_rank(const IntMatrix& input) {
  IntMatrix m = input;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m.at(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) swap(m.at(p, j), m.at(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        BigInt t = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = std::move(t);
      }
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<mpq_class>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const mpq_class lead = a[r][c];
    for (auto& v : a[r]) v /= lead;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void normalize_integer_vector(IntVector& v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return;
  auto lead = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return sgn(x) != 0; });
  if (sgn(*lead) < 0) g = -g;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::vector<std::vector<std::uint64_t>> reduce_mod(const IntMatrix& m, std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(p);
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  BigInt modulus;
  mpz_set_ui(modulus.get_mpz_t(), p);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      BigInt v;
      mpz_fdiv_r(v.get_mpz_t(), m.at(r, c).get_mpz_t(), modulus.get_mpz_t());
      a[r][c] = mpz_get_ui(v.get_mpz_t());
    }
  return a;
}

std::vector<std::size_t> rref_mod(std::vector<std::vector<std::uint64_t>>& a, std::size_t cols,
                                  std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const std::uint64_t inv = inverse_mod(a[r][c], p);
    for (auto& v : a[r]) v = mulmod(v, inv, p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[r][j], p)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<IntVector> rational_kernel(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c);
  const auto pivots = rref(a, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(m.cols(), mpq_class(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    BigInt denom_lcm = 1;
    for (const auto& q : v) denom_lcm = lcm(denom_lcm, BigInt(q.get_den()));
    IntVector iv;
    for (const auto& q : v) iv.push_back(BigInt(q.get_num() * (denom_lcm / q.get_den())));
    normalize_integer_vector(iv);
    basis.push_back(std::move(iv));
  }
  return basis;
}

SnfResult smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t n = std::min(rows, cols);
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i != j)
      for (std::size_t c = 0; c < cols; ++c) swap(a.at(i, c), a.at(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i != j)
      for (std::size_t r = 0; r < rows; ++r) swap(a.at(r, i), a.at(r, j));
  };

  SnfResult res;
  std::size_t t = 0;
  for (; t < n; ++t) {
    bool found_any = true;
    while (true) {
      // Smallest nonzero |entry| in the trailing block, first in row-major order.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (sgn(a.at(i, j)) != 0 && (pi == rows || mpz_cmpabs(a.at(i, j).get_mpz_t(), a.at(pi, pj).get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == rows) {
        found_any = false;
        break;
      }
      swap_rows(t, pi);
      swap_cols(t, pj);
      const BigInt pivot = a.at(t, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a.at(i, t)) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) a.at(i, c) -= q * a.at(t, c);
        if (sgn(a.at(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a.at(t, j)) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) a.at(r, j) -= q * a.at(r, t);
        if (sgn(a.at(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a.at(i, j).get_mpz_t(), pivot.get_mpz_t())) {
            for (std::size_t c = t; c < cols; ++c) a.at(t, c) += a.at(i, c);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (!found_any) break;
    res.diagonal.push_back(abs(a.at(t, t)));
  }
  res.rank = res.diagonal.size();
  while (res.diagonal.size() < n) res.diagonal.emplace_back(0);
  return res;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  BigInt v;
  mpz_import(v.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  return mpz_probab_prime_p(v.get_mpz_t(), 40) > 0;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  auto a = reduce_mod(m, p);
  return rref_mod(a, m.cols(), p).size();
}

std::vector<std::vector<std::uint64_t>> kernel_mod_p(const IntMatrix& m, std::uint64_t p) {
  auto a = reduce_mod(m, p);
  const auto pivots = rref_mod(a, m.cols(), p);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - a[i][f]) % p;
    auto lead = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
    const std::uint64_t inv = inverse_mod(*lead, p);
    for (auto& x : v) x = mulmod(x, inv, p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::uint64_t> prime_factors(const BigInt& value) {
  BigInt n = abs(value);
  if (n == 0) throw std::invalid_argument("prime_factors of zero");
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; BigInt(d) * d <= n; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      out.push_back(d);
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
    }
  }
  if (n > 1) {
    if (!n.fits_ulong_p()) throw std::overflow_error("prime factor exceeds 64 bits");
    out.push_back(n.get_ui());
  }
  return out;
}

}  // namespace ssg
