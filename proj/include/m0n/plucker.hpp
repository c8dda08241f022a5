#pragma once

// Plücker relations among boundary variables, Cox monomials in the degrees
// F_{J,m}, and the exact rank check that Plücker multiples span every
// relation in those degrees.

#include <array>
#include <cstdint>
#include <vector>

#include "m0n/exact.hpp"
#include "m0n/picard.hpp"
#include "m0n/subset.hpp"

namespace m0n {

/// p_I = Π_{i,j∈T; k,l∉T} x_T - Π_{i,k∈T; j,l∉T} x_T + Π_{i,l∈T; j,k∉T} x_T
/// for I = {i < j < k < l}.
struct PluckerRelation {
  int n = 0;
  std::array<int, 4> quad{};
  std::array<int, 3> signs{+1, -1, +1};
  std::array<BoundarySum, 3> terms{BoundarySum(5), BoundarySum(5), BoundarySum(5)};
};

PluckerRelation plucker_relation(int n, LabelSet quad);

/// All C(n,4) relations, quads in lexicographic order.
std::vector<PluckerRelation> plucker_relations(int n);

/// Common class of the three terms; throws std::logic_error if the terms are
/// not homogeneous.
KapranovClassM plucker_degree(const PluckerRelation &p);

/// Monomials in the boundary variables of the given degree.
std::vector<BoundarySum> monomials_in_degree(const KapranovClassM &c);

/// m_J(a,b) = Π_{a,b∈T^c, n∈T, T⊄J∪{n}} x_T, the monomial of F_{J,n} built on
/// the hyperplane representative h_ab.
BoundarySum f_monomial(int n, LabelSet j, int a, int b);

struct DegreeReport {
  int n = 0;
  LabelSet j;
  std::int64_t monomial_count = 0;
  std::int64_t h0 = 0;            // lattice count on L_{n-2}
  std::int64_t h0_formula = 0;    // n - |J| - 2
  std::int64_t relation_dim = 0;  // monomial_count - h0
  std::int64_t plucker_rank = 0;
  std::int64_t multiplied_relations = 0;
  bool verified = false;
};

/// Spans all products μ·p_I of degree F_{J,n} in the monomial basis and
/// reports their rank over Q. Only n = 6 and J ⊆ {1..4}, |J| <= 2.
DegreeReport plucker_span_rank(LabelSet j, int n = 6);

/// Σ sign_k · (cross product k) of point differences at the configuration t
/// (t[i-1] is the position of point i). The three cross products are
/// (t_i-t_j)(t_k-t_l), (t_i-t_k)(t_j-t_l), (t_i-t_l)(t_j-t_k).
Rational eval_identity(LabelSet quad, const std::vector<Rational> &t,
                       std::array<int, 3> signs = {+1, -1, +1});

}  // namespace m0n
