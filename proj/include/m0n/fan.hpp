#pragma once

// Simplicial rational polyhedral fans and toric blow-ups by star subdivision.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace m0n {

/// Primitive generator of a ray in N = Z^d.
using RayVector = std::vector<std::int64_t>;

/// A simplicial cone, stored as the sorted indices of its rays.
struct Cone {
  std::vector<std::size_t> ray_ids;

  Cone() = default;
  explicit Cone(std::vector<std::size_t> ids);

  std::size_t dim() const { return ray_ids.size(); }
  bool contains_ray(std::size_t id) const;
  /// True when every ray of `face` is a ray of this cone.
  bool contains_all(const Cone &face) const;

  friend bool operator==(const Cone &, const Cone &) = default;
  friend auto operator<=>(const Cone &, const Cone &) = default;
};

struct Fan {
  int dim = 0;
  std::vector<RayVector> rays;
  std::vector<Cone> max_cones;
};

class NotAConeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NotSmoothError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Fan of P^d: rays e_1, ..., e_d, -(e_1 + ... + e_d); all d-subsets as cones.
Fan projective_space_fan(int d);

/// Blow-up along the orbit closure V(sigma). The new ray (sum of the
/// generators of sigma, made primitive) is appended at index rays.size().
/// A one-dimensional sigma returns the input fan.
Fan star_subdivide(const Fan &fan, const Cone &sigma);

enum class TransformKind { PullBack, ProperTransform };

/// Transports a torus-invariant divisor (coefficients indexed by ray) across
/// star_subdivide(fan, sigma). PullBack gives the new ray the sum of the
/// coefficients over sigma's rays. ProperTransform additionally subtracts the
/// exceptional divisor once for each incidence of a component with the
/// center, which leaves the new ray with coefficient zero.
std::vector<std::int64_t> proper_transform_class(const Fan &fan, const Cone &sigma,
                                                 const std::vector<std::int64_t> &divisor,
                                                 TransformKind kind);

struct FanReport {
  bool smooth = false;
  bool complete = false;
  bool simplicial = false;

  friend bool operator==(const FanReport &, const FanReport &) = default;
};

/// Smoothness and simpliciality per maximal cone; completeness by facet
/// pairing, opposite-side orientation, adjacency connectivity and an exact
/// covering-degree count at a generic lattice point.
FanReport validate(const Fan &fan);

/// All k-dimensional cones, as faces of maximal cones, deduplicated and sorted.
std::vector<Cone> strata(const Fan &fan, int k);

/// Equal primitive ray sets and equal maximal cones (as sets of ray
/// coordinates); ray order is irrelevant.
bool fans_equal(const Fan &a, const Fan &b);

/// Index of the ray with the given primitive coordinates, or rays.size().
std::size_t find_ray(const Fan &fan, const RayVector &ray);

/// Sum over maximal cones of |det(generators)|; only meaningful for fans whose
/// maximal cones are full-dimensional.
std::int64_t total_covering_volume(const Fan &fan);

/// Number of maximal cones containing a generic point of N_R in their
/// interior; 1 for a complete fan.
std::size_t covering_degree(const Fan &fan);

/// True when the generators of the cone extend to a Z-basis of N.
bool is_unimodular(const Fan &fan, const Cone &cone);

}  // namespace m0n
