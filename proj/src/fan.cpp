#include "m0n/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "m0n/exact.hpp"

namespace m0n {

Cone::Cone(std::vector<std::size_t> ids) : ray_ids(std::move(ids)) {
  std::sort(ray_ids.begin(), ray_ids.end());
  ray_ids.erase(std::unique(ray_ids.begin(), ray_ids.end()), ray_ids.end());
}

bool Cone::contains_ray(std::size_t id) const {
  return std::binary_search(ray_ids.begin(), ray_ids.end(), id);
}

bool Cone::contains_all(const Cone &face) const {
  return std::includes(ray_ids.begin(), ray_ids.end(), face.ray_ids.begin(), face.ray_ids.end());
}

namespace {

IntMatrix generator_matrix(const Fan &fan, const Cone &cone) {
  // Columns are the generators.
  IntMatrix m(static_cast<std::size_t>(fan.dim), cone.dim());
  for (std::size_t j = 0; j < cone.dim(); ++j) {
    const RayVector &r = fan.rays[cone.ray_ids[j]];
    for (std::size_t i = 0; i < r.size(); ++i) m(i, j) = r[i];
  }
  return m;
}

void check_is_cone(const Fan &fan, const Cone &sigma) {
  for (std::size_t id : sigma.ray_ids)
    if (id >= fan.rays.size()) throw NotAConeError("cone references a ray that does not exist");
  const bool found = std::any_of(fan.max_cones.begin(), fan.max_cones.end(),
                                 [&](const Cone &c) { return c.contains_all(sigma); });
  if (!found) throw NotAConeError("rays do not span a cone of the fan");
}

void check_center(const Fan &fan, const Cone &sigma) {
  check_is_cone(fan, sigma);
  if (!is_unimodular(fan, sigma)) throw NotSmoothError("subdivision center is not a smooth cone");
}

RayVector primitive(RayVector v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto &x : v) x /= g;
  return v;
}

// Normal of the hyperplane spanned by d-1 vectors: n_i = det[v_1; ...; v_{d-1}; e_i].
IntVector facet_normal(const Fan &fan, const std::vector<std::size_t> &facet) {
  const auto d = static_cast<std::size_t>(fan.dim);
  IntVector normal(d);
  for (std::size_t i = 0; i < d; ++i) {
    IntMatrix m(d, d);
    for (std::size_t r = 0; r < facet.size(); ++r)
      for (std::size_t c = 0; c < d; ++c) m(r, c) = fan.rays[facet[r]][c];
    m(d - 1, i) = 1;
    normal[i] = determinant(m);
  }
  return normal;
}

Integer dot(const IntVector &a, const RayVector &b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int sign_of(const Integer &x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

// t is increased until (1, t, t^2, ...) avoids every cone wall.
std::size_t covering_degree(const Fan &fan) {
  const auto d = static_cast<std::size_t>(fan.dim);
  for (const Cone &cone : fan.max_cones)
    if (cone.dim() != d) throw std::invalid_argument("covering degree needs full-dimensional maximal cones");
  for (std::int64_t t = 2;; ++t) {
    IntVector v(d);
    Integer p = 1;
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = p;
      p *= t;
    }
    bool on_wall = false;
    std::size_t count = 0;
    for (const Cone &cone : fan.max_cones) {
      IntMatrix g = generator_matrix(fan, cone);
      const int s = sign_of(determinant(g));
      if (s == 0) throw std::invalid_argument("covering degree needs simplicial maximal cones");
      bool inside = true;
      for (std::size_t j = 0; j < d && !on_wall; ++j) {
        IntMatrix gj = g;
        for (std::size_t i = 0; i < d; ++i) gj(i, j) = v[i];
        const int sj = sign_of(determinant(gj)) * s;
        if (sj == 0) on_wall = true;
        if (sj < 0) inside = false;
      }
      if (on_wall) break;
      if (inside) ++count;
    }
    if (!on_wall) return count;
  }
}

bool is_unimodular(const Fan &fan, const Cone &cone) {
  const std::size_t k = cone.dim();
  const auto d = static_cast<std::size_t>(fan.dim);
  if (k == 0) return true;
  if (k > d) return false;
  // gcd of all k×k minors must be 1.
  Integer g = 0;
  std::vector<bool> pick(d, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    IntMatrix m(k, k);
    std::size_t r = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (!pick[i]) continue;
      for (std::size_t j = 0; j < k; ++j) m(r, j) = fan.rays[cone.ray_ids[j]][i];
      ++r;
    }
    g = gcd(g, abs(determinant(m)));
    if (g == 1) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

Fan projective_space_fan(int d) {
  if (d < 1) throw std::invalid_argument("projective space dimension must be at least 1");
  Fan fan;
  fan.dim = d;
  const auto n = static_cast<std::size_t>(d);
  for (std::size_t i = 0; i < n; ++i) {
    RayVector r(n, 0);
    r[i] = 1;
    fan.rays.push_back(r);
  }
  fan.rays.push_back(RayVector(n, -1));
  for (std::size_t skip = n + 1; skip-- > 0;) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) ids.push_back(i);
    fan.max_cones.emplace_back(ids);
  }
  std::sort(fan.max_cones.begin(), fan.max_cones.end());
  return fan;
}

Fan star_subdivide(const Fan &fan, const Cone &sigma) {
  check_center(fan, sigma);
  if (sigma.dim() <= 1) return fan;

  Fan out;
  out.dim = fan.dim;
  out.rays = fan.rays;
  RayVector u(static_cast<std::size_t>(fan.dim), 0);
  for (std::size_t id : sigma.ray_ids)
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += fan.rays[id][i];
  out.rays.push_back(primitive(std::move(u)));
  const std::size_t new_id = out.rays.size() - 1;

  for (const Cone &tau : fan.max_cones) {
    if (!tau.contains_all(sigma)) {
      out.max_cones.push_back(tau);
      continue;
    }
    // Maximal subsets of {u} ∪ tau not containing all of sigma.
    for (std::size_t drop : sigma.ray_ids) {
      std::vector<std::size_t> ids;
      for (std::size_t id : tau.ray_ids)
        if (id != drop) ids.push_back(id);
      ids.push_back(new_id);
      out.max_cones.emplace_back(std::move(ids));
    }
  }
  std::sort(out.max_cones.begin(), out.max_cones.end());
  return out;
}

std::vector<std::int64_t> proper_transform_class(const Fan &fan, const Cone &sigma,
                                                 const std::vector<std::int64_t> &divisor,
                                                 TransformKind kind) {
  check_center(fan, sigma);
  if (divisor.size() != fan.rays.size())
    throw std::invalid_argument("divisor length does not match ray count");
  if (sigma.dim() <= 1) return divisor;
  std::vector<std::int64_t> out = divisor;
  std::int64_t on_center = 0;
  for (std::size_t id : sigma.ray_ids) on_center += divisor[id];
  if (kind == TransformKind::ProperTransform) {
    // Each prime component D_rho with rho in sigma contains the center with
    // multiplicity one.
    for (std::size_t id : sigma.ray_ids) on_center -= divisor[id];
  }
  out.push_back(on_center);
  return out;
}

FanReport validate(const Fan &fan) {
  FanReport report;
  const auto d = static_cast<std::size_t>(fan.dim);

  report.simplicial = true;
  report.smooth = true;
  for (const Cone &cone : fan.max_cones) {
    if (cone.dim() > d || rank(generator_matrix(fan, cone)) != cone.dim()) {
      report.simplicial = false;
      report.smooth = false;
      continue;
    }
    if (!is_unimodular(fan, cone)) report.smooth = false;
  }

  // Completeness.
  bool complete = report.simplicial && !fan.max_cones.empty();
  for (const Cone &cone : fan.max_cones)
    if (cone.dim() != d) complete = false;
  if (complete) {
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> facet_owners;
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
      const auto &ids = fan.max_cones[c].ray_ids;
      for (std::size_t skip = 0; skip < ids.size(); ++skip) {
        std::vector<std::size_t> facet;
        for (std::size_t i = 0; i < ids.size(); ++i)
          if (i != skip) facet.push_back(ids[i]);
        facet_owners[facet].push_back(c);
      }
    }
    std::vector<std::vector<std::size_t>> adjacency(fan.max_cones.size());
    for (const auto &[facet, owners] : facet_owners) {
      if (owners.size() != 2) {
        complete = false;
        break;
      }
      // The two cones must lie on opposite sides of the shared wall.
      const IntVector normal = facet_normal(fan, facet);
      int sides[2];
      for (int k = 0; k < 2; ++k) {
        const Cone &cone = fan.max_cones[owners[static_cast<std::size_t>(k)]];
        for (std::size_t id : cone.ray_ids)
          if (!std::binary_search(facet.begin(), facet.end(), id))
            sides[k] = sign_of(dot(normal, fan.rays[id]));
      }
      if (sides[0] * sides[1] != -1) {
        complete = false;
        break;
      }
      adjacency[owners[0]].push_back(owners[1]);
      adjacency[owners[1]].push_back(owners[0]);
    }
    if (complete) {
      std::vector<bool> seen(fan.max_cones.size(), false);
      std::vector<std::size_t> stack{0};
      seen[0] = true;
      std::size_t reached = 1;
      while (!stack.empty()) {
        std::size_t c = stack.back();
        stack.pop_back();
        for (std::size_t nb : adjacency[c])
          if (!seen[nb]) {
            seen[nb] = true;
            ++reached;
            stack.push_back(nb);
          }
      }
      complete = reached == fan.max_cones.size() && covering_degree(fan) == 1;
    }
  }
  report.complete = complete;
  return report;
}

std::vector<Cone> strata(const Fan &fan, int k) {
  if (k < 0 || k > fan.dim) throw std::invalid_argument("codimension out of range");
  std::set<Cone> faces;
  const auto kk = static_cast<std::size_t>(k);
  for (const Cone &cone : fan.max_cones) {
    const std::size_t m = cone.dim();
    if (m < kk) continue;
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(kk), true);
    do {
      std::vector<std::size_t> ids;
      for (std::size_t i = 0; i < m; ++i)
        if (pick[i]) ids.push_back(cone.ray_ids[i]);
      faces.insert(Cone(std::move(ids)));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {faces.begin(), faces.end()};
}

std::size_t find_ray(const Fan &fan, const RayVector &ray) {
  auto it = std::find(fan.rays.begin(), fan.rays.end(), ray);
  return static_cast<std::size_t>(it - fan.rays.begin());
}

bool fans_equal(const Fan &a, const Fan &b) {
  if (a.dim != b.dim) return false;
  std::set<RayVector> ra(a.rays.begin(), a.rays.end()), rb(b.rays.begin(), b.rays.end());
  if (ra != rb || ra.size() != a.rays.size() || rb.size() != b.rays.size()) return false;
  auto cone_sets = [](const Fan &f) {
    std::set<std::set<RayVector>> out;
    for (const Cone &c : f.max_cones) {
      std::set<RayVector> rays;
      for (std::size_t id : c.ray_ids) rays.insert(f.rays[id]);
      out.insert(std::move(rays));
    }
    return out;
  };
  return cone_sets(a) == cone_sets(b) && a.max_cones.size() == b.max_cones.size();
}

std::int64_t total_covering_volume(const Fan &fan) {
  Integer total = 0;
  for (const Cone &cone : fan.max_cones) {
    IntMatrix g = generator_matrix(fan, cone);
    if (g.rows() != g.cols()) continue;
    total += abs(determinant(g));
  }
  return total.convert_to<std::int64_t>();
}

}  // namespace m0n
