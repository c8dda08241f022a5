#pragma once

// Exact enumeration of the integer points of a rational polyhedron
// {x : A·x >= b}, and toric section counts built on it.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "m0n/exact.hpp"
#include "m0n/kapranov.hpp"

namespace m0n {

struct LabeledFan;

struct HalfspaceSystem {
  IntMatrix a;  // one row per half-space
  IntVector b;

  HalfspaceSystem() = default;
  HalfspaceSystem(IntMatrix a_, IntVector b_);

  std::size_t dim() const { return a.cols(); }
  bool satisfied_by(std::span<const Integer> x) const;
};

class UnboundedPolyhedronError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Fourier-Motzkin projections of a system. Variables are eliminated greedily
/// (fewest combined rows first); order()[p] is the original coordinate of
/// enumeration coordinate y_p, and level k constrains y_0, ..., y_{k-1}.
/// Built once, shared by every slice.
/// After every step, rows implied by the others (an exact LP test) are dropped
/// and only the tightest right-hand side per normalized coefficient vector is
/// kept; right-hand sides are rounded up after dividing out the coefficient
/// gcd, which keeps every integer point.
class ProjectionChain {
public:
  explicit ProjectionChain(const HalfspaceSystem &system);

  std::size_t dim() const { return dim_; }
  const std::vector<std::size_t> &order() const { return order_; }
  /// True when elimination produced a contradiction 0 >= c > 0.
  bool infeasible() const { return infeasible_; }

  struct Row {
    IntVector coeffs;  // length = level
    Integer rhs;
  };
  const std::vector<Row> &level(std::size_t k) const { return levels_[k]; }

  /// Integer range of y_{k-1} over the slice fixed by `prefix` (length k-1).
  /// Returns false when the slice is empty; throws UnboundedPolyhedronError
  /// when a bound is missing.
  bool slice_bounds(std::size_t k, std::span<const Integer> prefix, Integer &lo, Integer &hi) const;

private:
  std::size_t dim_ = 0;
  bool infeasible_ = false;
  std::vector<std::vector<Row>> levels_;  // levels_[k], k = 0..dim
  std::vector<std::size_t> order_;
};

/// All integer points in lexicographic order. The outermost coordinate is
/// split across OpenMP threads; output order does not depend on scheduling.
std::vector<IntVector> integer_points(const HalfspaceSystem &system);

/// Single-threaded reference for integer_points.
std::vector<IntVector> integer_points_serial(const HalfspaceSystem &system);

/// P_D = {m : <m, u_ρ> >= -a_ρ}; rejects incomplete fans.
HalfspaceSystem section_polytope(const LabeledFan &fan, const std::vector<std::int64_t> &divisor);

/// h^0 of the class on L_{n-2}, as the lattice-point count of its section
/// polytope.
std::int64_t h0_toric(const LabeledFan &fan, const KapranovClassL &c);

}  // namespace m0n
