#include "m0n/lp.hpp"

#include <stdexcept>

namespace m0n {

namespace {

using Dense = std::vector<Rational>;

class Tableau {
public:
  // rows: constraint rows with rhs in the last column; basis: basic column per row.
  std::vector<Dense> rows;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;  // structural columns, rhs excluded

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = rows[r][c];
    for (auto &v : rows[r]) v /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Maximizes cost·y over columns allowed[c]; returns false if unbounded.
  bool optimize(const Dense &cost, const std::vector<bool> &allowed) {
    for (;;) {
      // Reduced cost of column c: cost_c - Σ_r cost_{basis r} · rows[r][c].
      std::size_t enter = cols;
      for (std::size_t c = 0; c < cols && enter == cols; ++c) {
        if (!allowed[c]) continue;
        Rational reduced = cost[c];
        for (std::size_t r = 0; r < rows.size(); ++r)
          if (!rows[r][c].is_zero()) reduced -= cost[basis[r]] * rows[r][c];
        if (reduced > 0) enter = c;
      }
      if (enter == cols) return true;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][enter] <= 0) continue;
        const Rational ratio = rows[r][cols] / rows[r][enter];
        if (leave == rows.size() || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }

  Rational value(const Dense &cost) const {
    Rational v;
    for (std::size_t r = 0; r < rows.size(); ++r) v += cost[basis[r]] * rows[r][cols];
    return v;
  }
};

}  // namespace

LpResult maximize_standard_form(const std::vector<IntVector> &m, const IntVector &q, const IntVector &obj) {
  const std::size_t nr = m.size();
  const std::size_t nc = obj.size();
  if (q.size() != nr) throw std::invalid_argument("LP: right-hand side length mismatch");

  // Columns: structural 0..nc-1, artificial nc..nc+nr-1.
  Tableau t;
  t.cols = nc + nr;
  t.rows.assign(nr, Dense(t.cols + 1));
  t.basis.resize(nr);
  for (std::size_t r = 0; r < nr; ++r) {
    if (m[r].size() != nc) throw std::invalid_argument("LP: row length mismatch");
    const bool flip = q[r] < 0;
    for (std::size_t c = 0; c < nc; ++c) t.rows[r][c] = flip ? Rational(-m[r][c]) : Rational(m[r][c]);
    t.rows[r][nc + r] = 1;
    t.rows[r][t.cols] = flip ? Rational(-q[r]) : Rational(q[r]);
    t.basis[r] = nc + r;
  }

  Dense phase1(t.cols);
  for (std::size_t r = 0; r < nr; ++r) phase1[nc + r] = -1;
  std::vector<bool> all(t.cols, true);
  t.optimize(phase1, all);
  if (t.value(phase1) < 0) return {LpStatus::Infeasible, {}};

  // Drive artificials out of the basis; rows where that fails are redundant.
  for (std::size_t r = 0; r < t.rows.size();) {
    if (t.basis[r] < nc) {
      ++r;
      continue;
    }
    std::size_t c = 0;
    while (c < nc && t.rows[r][c].is_zero()) ++c;
    if (c < nc) {
      t.pivot(r, c);
      ++r;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(r));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
    }
  }

  Dense cost(t.cols);
  for (std::size_t c = 0; c < nc; ++c) cost[c] = obj[c];
  std::vector<bool> structural(t.cols, false);
  for (std::size_t c = 0; c < nc; ++c) structural[c] = true;
  if (!t.optimize(cost, structural)) return {LpStatus::Unbounded, {}};
  return {LpStatus::Optimal, t.value(cost)};
}

// Farkas: A·x >= b is infeasible iff some y >= 0 has Aᵀy = 0 and b·y = 1.
bool rationally_feasible(const std::vector<IntVector> &a, const IntVector &b) {
  if (a.empty()) return true;
  const std::size_t d = a.front().size();
  std::vector<IntVector> m(d + 1, IntVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t c = 0; c < d; ++c) m[c][i] = a[i][c];
    m[d][i] = b[i];
  }
  IntVector q(d + 1);
  q[d] = 1;
  return maximize_standard_form(m, q, IntVector(a.size())).status == LpStatus::Infeasible;
}

// min row·x over A·x >= b equals max b·y over Aᵀy = row, y >= 0.
bool implied_by(const std::vector<IntVector> &a, const IntVector &b, const IntVector &row, const Integer &rhs) {
  const std::size_t d = row.size();
  std::vector<IntVector> m(d, IntVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t c = 0; c < d; ++c) m[c][i] = a[i][c];
  const LpResult r = maximize_standard_form(m, row, b);
  return r.status == LpStatus::Optimal && r.value >= rhs;
}

}  // namespace m0n
