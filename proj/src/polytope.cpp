#include "m0n/polytope.hpp"

#include <algorithm>
#include <exception>
#include <map>

#include <omp.h>

#include "m0n/lp.hpp"
#include "m0n/permutohedral.hpp"

namespace m0n {

HalfspaceSystem::HalfspaceSystem(IntMatrix a_, IntVector b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.rows() != b.size()) throw std::invalid_argument("half-space system: row count mismatch");
}

bool HalfspaceSystem::satisfied_by(std::span<const Integer> x) const {
  IntVector ax = multiply(a, x);
  for (std::size_t r = 0; r < ax.size(); ++r)
    if (ax[r] < b[r]) return false;
  return true;
}

namespace {

struct WorkRow {
  IntVector coeffs;
  Integer rhs;
};

enum class Normalized { Row, Trivial, Contradiction };

// Divide by the coefficient gcd and round the right-hand side up.
Normalized normalize(WorkRow &row) {
  Integer g = gcd_of(row.coeffs);
  if (g.is_zero()) return row.rhs > 0 ? Normalized::Contradiction : Normalized::Trivial;
  if (g != 1) {
    for (auto &c : row.coeffs) c /= g;
    row.rhs = ceil_of(Rational(row.rhs, g));
  }
  return Normalized::Row;
}

// Keeps the tightest right-hand side per coefficient vector.
class RowSet {
public:
  void add(WorkRow row) {
    auto [it, inserted] = index_.try_emplace(row.coeffs, rows_.size());
    if (inserted) {
      rows_.push_back(std::move(row));
      return;
    }
    WorkRow &old = rows_[it->second];
    if (row.rhs > old.rhs) old = std::move(row);
  }
  std::vector<WorkRow> take() { return std::move(rows_); }

private:
  std::map<IntVector, std::size_t> index_;
  std::vector<WorkRow> rows_;
};

// Drops rows implied by the remaining ones, restricted to the active columns.
// Returns false when the rows have no rational solution.
bool prune_redundant(std::vector<WorkRow> &rows, const std::vector<bool> &active) {
  auto project = [&active](const IntVector &v) {
    IntVector out;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (active[c]) out.push_back(v[c]);
    return out;
  };
  std::vector<IntVector> a;
  IntVector b;
  for (const auto &row : rows) {
    a.push_back(project(row.coeffs));
    b.push_back(row.rhs);
  }
  if (!rationally_feasible(a, b)) return false;
  std::vector<bool> keep(rows.size(), true);
  for (std::size_t i = rows.size(); i-- > 0;) {
    std::vector<IntVector> others;
    IntVector rhs;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == i || !keep[j]) continue;
      others.push_back(a[j]);
      rhs.push_back(b[j]);
    }
    if (implied_by(others, rhs, a[i], b[i])) keep[i] = false;
  }
  std::vector<WorkRow> kept;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (keep[i]) kept.push_back(std::move(rows[i]));
  rows = std::move(kept);
  return true;
}

void enumerate_from(const ProjectionChain &chain, std::size_t k, IntVector &prefix,
                    std::vector<IntVector> &out) {
  if (k > chain.dim()) {
    IntVector x(prefix.size());
    for (std::size_t p = 0; p < prefix.size(); ++p) x[chain.order()[p]] = prefix[p];
    out.push_back(std::move(x));
    return;
  }
  Integer lo, hi;
  if (!chain.slice_bounds(k, prefix, lo, hi)) return;
  for (Integer x = lo; x <= hi; ++x) {
    prefix.push_back(x);
    enumerate_from(chain, k + 1, prefix, out);
    prefix.pop_back();
  }
}

std::vector<IntVector> zero_dimensional(const HalfspaceSystem &system) {
  for (const auto &rhs : system.b)
    if (rhs > 0) return {};
  return {IntVector{}};
}

}  // namespace

ProjectionChain::ProjectionChain(const HalfspaceSystem &system) : dim_(system.dim()) {
  levels_.resize(dim_ + 1);
  order_.assign(dim_, 0);

  RowSet initial;
  for (std::size_t r = 0; r < system.a.rows(); ++r) {
    WorkRow row;
    row.coeffs.assign(system.a.row(r).begin(), system.a.row(r).end());
    row.rhs = system.b[r];
    switch (normalize(row)) {
      case Normalized::Contradiction: infeasible_ = true; return;
      case Normalized::Trivial: break;
      case Normalized::Row: initial.add(std::move(row)); break;
    }
  }
  std::vector<WorkRow> current = initial.take();

  // Rows keep all dim_ columns while eliminating; eliminated columns are zero.
  std::vector<bool> active(dim_, true);
  if (!prune_redundant(current, active)) {
    infeasible_ = true;
    return;
  }
  std::vector<std::vector<WorkRow>> full_levels(dim_ + 1);
  for (std::size_t k = dim_; k >= 1; --k) {
    // Eliminate the variable producing the fewest combined rows.
    std::size_t var = dim_;
    std::size_t best = 0;
    for (std::size_t v = 0; v < dim_; ++v) {
      if (!active[v]) continue;
      std::size_t np = 0, nn = 0;
      for (const auto &row : current) {
        if (row.coeffs[v] > 0) ++np;
        else if (row.coeffs[v] < 0) ++nn;
      }
      const std::size_t cost = np * nn;
      if (var == dim_ || cost < best) var = v, best = cost;
    }
    order_[k - 1] = var;
    active[var] = false;
    full_levels[k] = current;
    if (k == 1) break;

    RowSet next;
    std::vector<const WorkRow *> pos, neg;
    for (const auto &row : current) {
      if (row.coeffs[var].is_zero()) {
        WorkRow kept = row;
        switch (normalize(kept)) {
          case Normalized::Contradiction: infeasible_ = true; return;
          case Normalized::Trivial: break;
          case Normalized::Row: next.add(std::move(kept)); break;
        }
      } else if (row.coeffs[var] > 0) {
        pos.push_back(&row);
      } else {
        neg.push_back(&row);
      }
    }
    for (const WorkRow *p : pos) {
      for (const WorkRow *q : neg) {
        const Integer wp = -q->coeffs[var];
        const Integer wq = p->coeffs[var];
        WorkRow combined;
        combined.coeffs.resize(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
          combined.coeffs[i] = wp * p->coeffs[i] + wq * q->coeffs[i];
        combined.rhs = wp * p->rhs + wq * q->rhs;
        switch (normalize(combined)) {
          case Normalized::Contradiction: infeasible_ = true; return;
          case Normalized::Trivial: break;
          case Normalized::Row: next.add(std::move(combined)); break;
        }
      }
    }
    current = next.take();
    if (!prune_redundant(current, active)) {
      infeasible_ = true;
      return;
    }
  }

  // Level k in enumeration coordinates y_p = x_{order_[p]}, p < k.
  for (std::size_t k = 1; k <= dim_; ++k) {
    for (const auto &row : full_levels[k]) {
      Row r{IntVector(k), row.rhs};
      for (std::size_t p = 0; p < k; ++p) r.coeffs[p] = row.coeffs[order_[p]];
      levels_[k].push_back(std::move(r));
    }
  }
}

bool ProjectionChain::slice_bounds(std::size_t k, std::span<const Integer> prefix, Integer &lo,
                                   Integer &hi) const {
  bool has_lo = false, has_hi = false;
  const std::size_t var = k - 1;
  for (const Row &row : levels_[k]) {
    Integer s = row.rhs;
    for (std::size_t i = 0; i < var; ++i)
      if (!row.coeffs[i].is_zero()) s -= row.coeffs[i] * prefix[i];
    const Integer &a = row.coeffs[var];
    if (a.is_zero()) {
      if (s > 0) return false;
      continue;
    }
    const Rational bound(s, a);
    if (a > 0) {
      Integer l = ceil_of(bound);
      if (!has_lo || l > lo) lo = l;
      has_lo = true;
    } else {
      Integer h = floor_of(bound);
      if (!has_hi || h < hi) hi = h;
      has_hi = true;
    }
  }
  if (has_lo && has_hi && lo > hi) return false;
  if (!has_lo || !has_hi)
    throw UnboundedPolyhedronError("polyhedron is unbounded in coordinate " + std::to_string(var));
  return true;
}

std::vector<IntVector> integer_points_serial(const HalfspaceSystem &system) {
  if (system.dim() == 0) return zero_dimensional(system);
  ProjectionChain chain(system);
  std::vector<IntVector> out;
  if (chain.infeasible()) return out;
  IntVector prefix;
  enumerate_from(chain, 1, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> integer_points(const HalfspaceSystem &system) {
  if (system.dim() == 0) return zero_dimensional(system);
  ProjectionChain chain(system);
  if (chain.infeasible()) return {};
  Integer lo, hi;
  if (!chain.slice_bounds(1, {}, lo, hi)) return {};

  const auto count = (hi - lo + 1).convert_to<std::int64_t>();
  std::vector<std::vector<IntVector>> slices(static_cast<std::size_t>(count));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      IntVector prefix{lo + i};
      enumerate_from(chain, 2, prefix, slices[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<IntVector> out;
  for (auto &s : slices)
    for (auto &p : s) out.push_back(std::move(p));
  std::sort(out.begin(), out.end());
  return out;
}

HalfspaceSystem section_polytope(const LabeledFan &fan, const std::vector<std::int64_t> &divisor) {
  if (divisor.size() != fan.fan.rays.size())
    throw std::invalid_argument("divisor length does not match ray count");
  if (!validate(fan.fan).complete)
    throw std::invalid_argument("section polytope requires a complete fan");
  const auto d = static_cast<std::size_t>(fan.fan.dim);
  IntMatrix a(fan.fan.rays.size(), d);
  IntVector b(fan.fan.rays.size());
  for (std::size_t r = 0; r < fan.fan.rays.size(); ++r) {
    for (std::size_t c = 0; c < d; ++c) a(r, c) = fan.fan.rays[r][c];
    b[r] = -divisor[r];
  }
  return {std::move(a), std::move(b)};
}

std::int64_t h0_toric(const LabeledFan &fan, const KapranovClassL &c) {
  const auto points = integer_points(section_polytope(fan, divisor_from_class(fan, c)));
  return static_cast<std::int64_t>(points.size());
}

}  // namespace m0n
