#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace ssg {

using BigInt = mpz_class;
using IntVector = std::vector<BigInt>;

/// Dense integer matrix, row-major, with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  /// Parses rows of whitespace-separated integers, one row per line.
  static IntMatrix parse(std::string_view text);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector apply(const IntVector& v) const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

struct SnfResult {
  /// min(rows, cols) invariant factors d_1 | d_2 | ..., nonnegative; zeros last.
  std::vector<BigInt> diagonal;
  std::size_t rank = 0;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rational_rank(const IntMatrix& m);

/// Basis of the right kernel over Q, one vector per free column of the
/// reduced echelon form (ascending). Each vector is scaled to integers with
/// content 1 and a positive first nonzero entry.
std::vector<IntVector> rational_kernel(const IntMatrix& m);

/// Invariant factors under unimodular row and column operations. Pivots are
/// chosen as the smallest nonzero absolute value, ties by row-major position.
SnfResult smith_normal_form(const IntMatrix& m);

bool is_prime(std::uint64_t p);

/// Rank over the field with p elements. Throws NotPrime.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// Kernel basis over the field with p elements, one vector per free column
/// (ascending), scaled so the first nonzero entry is 1; entries in [0, p).
/// Throws NotPrime.
std::vector<std::vector<std::uint64_t>> kernel_mod_p(const IntMatrix& m, std::uint64_t p);

/// Prime divisors of |n| in ascending order (n != 0).
std::vector<std::uint64_t> prime_factors(const BigInt& n);

}  // namespace ssg
