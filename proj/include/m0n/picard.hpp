#pragma once

// Boundary-divisor calculus on the moduli space of n-pointed stable rational
// curves, in the Kapranov basis H, E_J with n as the moving point.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "m0n/exact.hpp"
#include "m0n/kapranov.hpp"
#include "m0n/subset.hpp"

namespace m0n {

/// Boundary divisor Δ_T = Δ_{T^c}, stored as the side not containing n.
class BoundaryIndex {
public:
  /// Canonicalizes T; requires 2 <= |T| <= n-2 and T ⊆ {1..n}.
  BoundaryIndex(int n, LabelSet t);

  int n() const { return n_; }
  LabelSet side() const { return side_; }
  /// The side containing n.
  LabelSet complement() const { return LabelSet::range(n_) - side_; }

  friend bool operator==(const BoundaryIndex &, const BoundaryIndex &) = default;

private:
  int n_;
  LabelSet side_;
};

/// All boundary indices for n, sorted lexicographically by canonical side.
/// This order indexes the columns of the class map and BoundarySum vectors.
const std::vector<BoundaryIndex> &boundary_indices(int n);
std::size_t boundary_position(const BoundaryIndex &t);

/// Nonnegative integer combination of boundary divisors (a Cox monomial in
/// the boundary variables).
class BoundarySum {
public:
  explicit BoundarySum(int n);
  BoundarySum(int n, std::vector<std::int64_t> coeffs);

  int n() const { return n_; }
  const std::vector<std::int64_t> &coeffs() const { return coeffs_; }
  std::int64_t coefficient(const BoundaryIndex &t) const { return coeffs_[boundary_position(t)]; }
  void add(const BoundaryIndex &t, std::int64_t k = 1);
  std::int64_t degree() const;

  BoundarySum &operator+=(const BoundarySum &o);
  friend BoundarySum operator+(BoundarySum a, const BoundarySum &b) { return a += b; }

  friend bool operator==(const BoundarySum &, const BoundarySum &) = default;
  friend auto operator<=>(const BoundarySum &a, const BoundarySum &b) {
    return a.coeffs_ <=> b.coeffs_;
  }

private:
  int n_;
  std::vector<std::int64_t> coeffs_;
};

/// Dictionary: Δ_{J∪{n}} = E_J for 1 <= |J| <= n-4, and
/// Δ_{ab} = H - Σ_{∅≠J'⊊{a,b,n}^c} E_{J'}.
KapranovClassM class_of_boundary(const BoundaryIndex &t);

/// Class of a formal boundary sum; coefficients may be any integers.
KapranovClassM class_of_boundary_combination(int n, std::span<const std::int64_t> coeffs);

KapranovClassM cl(const BoundarySum &d);

/// Class map as a matrix: rows are Kapranov coordinates, columns boundary
/// indices.
const IntMatrix &cl_matrix(int n);
std::size_t cl_rank(int n);
std::size_t cl_kernel_dim(int n);

/// h_{ab} = Σ_{a,b ∈ T^c, n ∈ T} Δ_T, an effective representative of H.
BoundarySum hyperplane_representative(int n, int a, int b);

/// Identical coordinates, relabeled basis.
KapranovClassM pullback_from_L(const KapranovClassL &c);

/// Pull-back of ψ_n along the map forgetting J: H - Σ_{∅≠T⊆J} [Δ_{T∪{n}}].
KapranovClassM psi_pullback(int n, LabelSet j);

/// The same pull-back, computed one point at a time with
/// π_q^*ψ_n = ψ_n - Δ_{nq} and π_q^*Δ_T = Δ_T + Δ_{T∪{q}}; `order` lists
/// the points of J in the order they are pulled back.
KapranovClassM psi_pullback_by_steps(int n, std::span<const int> order);

/// F_{J,m}: pull-back of O(1) under forgetting J and then the Kapranov map
/// of the moving point m.
KapranovClassM f_class(int n, LabelSet j, int m);

/// All forgetful indices J ⊆ {1..n-1} with |J| <= n-4, in Kapranov basis
/// order (∅ first).
std::vector<LabelSet> f_indices(int n);

struct FBasisReport {
  std::size_t size = 0;
  bool triangular = false;  // upper triangular, diagonal (1, -1, ..., -1)
  Integer determinant;
  bool invertible = false;
};

/// Matrix whose columns are the F_{J,n} in Kapranov coordinates.
IntMatrix f_class_matrix(int n);
FBasisReport f_basis_check(int n);

/// Every nonnegative integer d with cl(d) = c, in lexicographic order of the
/// coefficient vectors. Throws UnboundedPolyhedronError if the fibre is
/// unbounded.
std::vector<BoundarySum> effective_boundary_reps(const KapranovClassM &c);

/// A permutation of {1..n}; image[i] = σ(i), image[0] unused.
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  int n() const { return static_cast<int>(image.size()) - 1; }
  int operator()(int i) const { return image[static_cast<std::size_t>(i)]; }
  LabelSet operator()(LabelSet s) const;
  /// (this ∘ other)(i) = this(other(i))
  Permutation compose(const Permutation &other) const;
  Permutation inverse() const;
  /// Transpositions τ_1, ..., τ_m with σ = τ_1 ∘ ... ∘ τ_m.
  std::vector<std::array<int, 2>> transpositions() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
};

/// Kapranov coordinates over Q.
struct PicClassVector {
  int n = 0;
  std::vector<Rational> coords;

  static PicClassVector from(const KapranovClassM &c);
  /// Throws if some coordinate is not an integer.
  KapranovClassM to_integral() const;

  friend bool operator==(const PicClassVector &, const PicClassVector &) = default;
};

/// Class of ψ_j for j != n in the basis with moving point n:
/// (n-3)H - Σ_{K⊆{j,n}^c, 1<=|K|<=n-4} (n-|K|-3) E_K.
KapranovClassM psi_class(int n, int j);

/// Action of σ on Pic induced by relabeling the marked points; σ·Δ_T = Δ_{σ(T)}
/// and σ·ψ_n = ψ_{σ(n)}. General σ acts through its transposition factors.
PicClassVector apply_permutation(const Permutation &sigma, const PicClassVector &c);
KapranovClassM apply_permutation(const Permutation &sigma, const KapranovClassM &c);

struct KeelVermeirePairing {
  std::array<int, 2> first;
  std::array<int, 2> second;

  /// Sorted within pairs and between pairs, so Q_{(ab)(cd)} = Q_{(cd)(ab)}.
  KeelVermeirePairing canonical() const;
  friend bool operator==(const KeelVermeirePairing &, const KeelVermeirePairing &) = default;
};

/// [Q_{(ab)(cd)}] = 2H - Σ_{i≤5} E_i - Σ_{x∈{a,b}, y∈{c,d}} E_{xy}; n = 6 only.
KapranovClassM keel_vermeire_class(const KeelVermeirePairing &pairing, int n);

/// The 15 pairings of two disjoint pairs in {1..5}, canonical form.
std::vector<KeelVermeirePairing> keel_vermeire_pairings();

/// Intersection with the proper transform of a generic line: the H coordinate.
std::int64_t line_pairing(const KapranovClassM &c);

}  // namespace m0n
