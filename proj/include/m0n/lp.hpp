#pragma once

// Exact linear programming in standard form, used to prune redundant
// inequalities during Fourier-Motzkin elimination.

#include <vector>

#include "m0n/exact.hpp"

namespace m0n {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;  // meaningful when Optimal
};

/// max obj·y subject to M·y = q, y >= 0. Two-phase tableau simplex with
/// Bland's rule over the rationals.
LpResult maximize_standard_form(const std::vector<IntVector> &m, const IntVector &q, const IntVector &obj);

/// Is A·x >= b solvable over the rationals?
bool rationally_feasible(const std::vector<IntVector> &a, const IntVector &b);

/// Is the inequality row·x >= rhs implied by A·x >= b? The system must be
/// rationally feasible.
bool implied_by(const std::vector<IntVector> &a, const IntVector &b, const IntVector &row, const Integer &rhs);

}  // namespace m0n
