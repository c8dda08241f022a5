#pragma once

// The labeled fan of the Losev-Manin space L_{n-2}, built two independent ways,
// and its divisor-class calculus in the Kapranov basis H', E'_J.
//
// Coordinate convention: N = Z^{n-3}, u_i = e_i for i <= n-3 and
// u_{n-2} = -(e_1 + ... + e_{n-3}). The ray labeled J is -Σ_{i∈J} u_i, so the
// ray labeled {1..n-2}∖{i} is u_i.

#include <cstdint>
#include <vector>

#include "m0n/fan.hpp"
#include "m0n/kapranov.hpp"
#include "m0n/subset.hpp"

namespace m0n {

struct LabeledFan {
  int n = 0;  // marking count; the fan lives in dimension n-3
  Fan fan;
  std::vector<LabelSet> labels;  // parallel to fan.rays

  std::size_t ray_of(LabelSet label) const;
};

/// Kapranov order: start from P^{n-3} and star-subdivide at the cones of the
/// coordinate subspaces l_J, |J| = 1, 2, ..., n-4, lexicographic within a size.
LabeledFan build_losev_manin(int n);

/// Closed form: rays for all 1 <= |J| <= n-3, maximal cones = maximal chains.
LabeledFan flag_fan(int n);

/// Fan equality plus agreement of labels on every ray.
bool labeled_fans_equal(const LabeledFan &a, const LabeledFan &b);

/// Class of the torus-invariant divisor of the ray labeled J.
KapranovClassL class_of_ray_divisor(int n, LabelSet j);

/// Class of an arbitrary torus-invariant divisor (coefficients per ray).
KapranovClassL class_of_divisor(const LabeledFan &fan, const std::vector<std::int64_t> &divisor);

/// A torus-invariant divisor whose class is `c`: h copies of the ray divisor
/// labeled {1, ..., n-3} plus exceptional corrections.
std::vector<std::int64_t> divisor_from_class(const LabeledFan &fan, const KapranovClassL &c);

/// 2^{n-2} - n + 1.
std::int64_t picard_rank_L(int n);

/// Σ_ρ <m, u_ρ> D_ρ for a character m ∈ M = Z^{n-3}.
std::vector<std::int64_t> principal_divisor(const Fan &fan, const std::vector<std::int64_t> &m);

/// The hyperplane class minus Σ_{∅≠T⊆J} E'_T, for J ⊆ {1..n-2}, |J| <= n-4.
KapranovClassL forgetful_hyperplane_class_L(int n, LabelSet j);

}  // namespace m0n
