#pragma once

// Exact integer and rational linear algebra. Everything here is fraction-free
// or uses GMP rationals; there is no floating point anywhere in this module.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace m0n {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;

/// Rational vector; GMP keeps every entry in lowest terms with a positive
/// denominator.
struct RatVector {
  std::vector<Rational> entries;

  RatVector() = default;
  explicit RatVector(std::size_t dim) : entries(dim) {}
  explicit RatVector(std::vector<Rational> e) : entries(std::move(e)) {}

  std::size_t dim() const { return entries.size(); }
  Rational &operator[](std::size_t i) { return entries[i]; }
  const Rational &operator[](std::size_t i) const { return entries[i]; }

  friend bool operator==(const RatVector &, const RatVector &) = default;
};

/// Dense row-major matrix of arbitrary precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  /// Builds from nested rows; all rows must have the same length.
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>> &rows);
  static IntMatrix from_rows(const std::vector<IntVector> &rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer &operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Integer> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  const std::vector<Integer> &entries() const { return entries_; }

  IntMatrix transposed() const;
  IntVector column(std::size_t c) const;

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntVector multiply(const IntMatrix &m, std::span<const Integer> x);

IntVector to_int_vector(std::span<const std::int64_t> v);
std::vector<std::int64_t> to_int64(std::span<const Integer> v);

/// Rank over Q by Bareiss elimination. Pivot = first nonzero entry in
/// row-major order of the remaining submatrix.
std::size_t rank(const IntMatrix &m);

/// Determinant of a square matrix by Bareiss elimination.
Integer determinant(const IntMatrix &m);

/// Result of the column Hermite reduction M·U = [L | 0].
struct ColumnEchelon {
  IntMatrix reduced;     // L padded with zero columns, same shape as M
  IntMatrix transform;   // unimodular U (cols × cols)
  std::vector<std::size_t> pivot_rows;  // pivot row of each nonzero column
};

/// Unimodular column reduction; columns 0..rank-1 of `reduced` are in
/// echelon form with positive pivots, remaining columns are zero.
ColumnEchelon column_echelon(const IntMatrix &m);

/// Row Hermite normal form of a list of integer vectors (all of length
/// `cols`). Zero rows are dropped; pivots are positive and entries above a
/// pivot are reduced into [0, pivot).
std::vector<IntVector> row_hermite(std::vector<IntVector> rows, std::size_t cols);

/// Lattice basis of {v ∈ Z^cols : M·v = 0}, returned in row Hermite normal
/// form, so the result is canonical for the lattice. Every vector is
/// primitive.
std::vector<IntVector> kernel_lattice_basis(const IntMatrix &m);

/// One integer solution of M·x = b, or nullopt if none exists. The solution
/// is reduced modulo the kernel lattice so the output is canonical.
std::optional<IntVector> solve_particular(const IntMatrix &m, std::span<const Integer> b);

Integer gcd_of(std::span<const Integer> v);

/// Floor and ceiling of an exact rational.
Integer floor_of(const Rational &q);
Integer ceil_of(const Rational &q);

}  // namespace m0n
