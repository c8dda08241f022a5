#include "m0n/exact.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace m0n {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>> &rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector> &rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntVector multiply(const IntMatrix &m, std::span<const Integer> x) {
  if (x.size() != m.cols()) throw std::invalid_argument("multiply: dimension mismatch");
  IntVector y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && !x[c].is_zero()) acc += m(r, c) * x[c];
    y[r] = std::move(acc);
  }
  return y;
}

IntVector to_int_vector(std::span<const std::int64_t> v) {
  return IntVector(v.begin(), v.end());
}

std::vector<std::int64_t> to_int64(std::span<const Integer> v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto &x : v) {
    if (x > std::numeric_limits<std::int64_t>::max() ||
        x < std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("integer does not fit in 64 bits");
    out.push_back(x.convert_to<std::int64_t>());
  }
  return out;
}

namespace {

// Fraction-free forward elimination; returns rank and the sign of the row
// permutation. The matrix is left in Bareiss echelon form.
std::pair<std::size_t, int> bareiss(IntMatrix &a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        a(i, j) = v / prev;  // exact by Sylvester's identity
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return {r, sign};
}

void swap_columns(IntMatrix &a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, c1), a(r, c2));
}

// col[dst] -= q * col[src]
void sub_column(IntMatrix &a, std::size_t dst, std::size_t src, const Integer &q) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (!a(r, src).is_zero()) a(r, dst) -= q * a(r, src);
}

void negate_column(IntMatrix &a, std::size_t c) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, c) = -a(r, c);
}

Integer floor_div(const Integer &a, const Integer &b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::size_t rank(const IntMatrix &m) {
  IntMatrix a = m;
  return bareiss(a).first;
}

Integer determinant(const IntMatrix &m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix a = m;
  auto [r, sign] = bareiss(a);
  if (r < m.rows()) return 0;
  Integer d = a(m.rows() - 1, m.cols() - 1);
  return sign < 0 ? Integer(-d) : d;
}

ColumnEchelon column_echelon(const IntMatrix &m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  std::vector<std::size_t> pivot_rows;
  std::size_t piv = 0;
  for (std::size_t r = 0; r < a.rows() && piv < a.cols(); ++r) {
    for (;;) {
      // Smallest nonzero magnitude among the active columns goes to `piv`.
      std::size_t best = a.cols();
      for (std::size_t c = piv; c < a.cols(); ++c) {
        if (a(r, c).is_zero()) continue;
        if (best == a.cols() || abs(a(r, c)) < abs(a(r, best))) best = c;
      }
      if (best == a.cols()) break;
      swap_columns(a, piv, best);
      swap_columns(u, piv, best);
      bool done = true;
      for (std::size_t c = piv + 1; c < a.cols(); ++c) {
        if (a(r, c).is_zero()) continue;
        Integer q = floor_div(a(r, c), a(r, piv));
        sub_column(a, c, piv, q);
        sub_column(u, c, piv, q);
        if (!a(r, c).is_zero()) done = false;
      }
      if (done) break;
    }
    if (a(r, piv).is_zero()) continue;
    if (a(r, piv) < 0) {
      negate_column(a, piv);
      negate_column(u, piv);
    }
    pivot_rows.push_back(r);
    ++piv;
  }
  return {std::move(a), std::move(u), std::move(pivot_rows)};
}

std::vector<IntVector> row_hermite(std::vector<IntVector> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c].is_zero()) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c].is_zero()) continue;
        Integer q = floor_div(rows[i][c], rows[r][c]);
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (!rows[i][c].is_zero()) done = false;
      }
      if (done) break;
    }
    if (rows[r][c].is_zero()) continue;
    if (rows[r][c] < 0)
      for (auto &x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(rows[i][c], rows[r][c]);
      if (q.is_zero()) continue;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<IntVector> kernel_lattice_basis(const IntMatrix &m) {
  ColumnEchelon ech = column_echelon(m);
  const std::size_t k = ech.pivot_rows.size();
  std::vector<IntVector> basis;
  for (std::size_t c = k; c < m.cols(); ++c) basis.push_back(ech.transform.column(c));
  return row_hermite(std::move(basis), m.cols());
}

std::optional<IntVector> solve_particular(const IntMatrix &m, std::span<const Integer> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_particular: dimension mismatch");
  ColumnEchelon ech = column_echelon(m);
  const std::size_t k = ech.pivot_rows.size();
  const IntMatrix &l = ech.reduced;
  IntVector y(k);
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t p = ech.pivot_rows[j];
    Integer s = b[p];
    for (std::size_t i = 0; i < j; ++i) s -= l(p, i) * y[i];
    if (s % l(p, j) != 0) return std::nullopt;
    y[j] = s / l(p, j);
  }
  // Non-pivot rows must be consistent as well.
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer s = 0;
    for (std::size_t i = 0; i < k; ++i) s += l(r, i) * y[i];
    if (s != b[r]) return std::nullopt;
  }
  IntVector x(m.cols());
  for (std::size_t r = 0; r < m.cols(); ++r)
    for (std::size_t i = 0; i < k; ++i) x[r] += ech.transform(r, i) * y[i];

  std::vector<IntVector> kernel;
  for (std::size_t c = k; c < m.cols(); ++c) kernel.push_back(ech.transform.column(c));
  kernel = row_hermite(std::move(kernel), m.cols());
  for (const auto &row : kernel) {
    std::size_t c = 0;
    while (row[c].is_zero()) ++c;
    Integer q = floor_div(x[c], row[c]);
    if (q.is_zero()) continue;
    for (std::size_t j = c; j < x.size(); ++j) x[j] -= q * row[j];
  }
  return x;
}

Integer gcd_of(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto &x : v) {
    if (x.is_zero()) continue;
    g = gcd(g, abs(x));
    if (g == 1) break;
  }
  return g;
}

Integer floor_of(const Rational &q) {
  return floor_div(numerator(q), denominator(q));
}

Integer ceil_of(const Rational &q) {
  return -floor_div(-numerator(q), denominator(q));
}

}  // namespace m0n
