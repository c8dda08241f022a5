#include "m0n/permutohedral.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace m0n {

namespace {

void require_marking_count(int n) {
  if (n < 4) throw std::invalid_argument("Losev-Manin fans need n >= 4, got " + std::to_string(n));
  if (n > 31) throw std::invalid_argument("marking count too large");
}

// u_1, ..., u_{n-2} in N = Z^{n-3}.
std::vector<RayVector> simplex_generators(int n) {
  const auto d = static_cast<std::size_t>(n - 3);
  std::vector<RayVector> u;
  for (std::size_t i = 0; i < d; ++i) {
    RayVector r(d, 0);
    r[i] = 1;
    u.push_back(r);
  }
  u.push_back(RayVector(d, -1));
  return u;
}

RayVector make_primitive(RayVector v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto &x : v) x /= g;
  return v;
}

}  // namespace

std::size_t LabeledFan::ray_of(LabelSet label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("no ray labeled " + label.str());
  return static_cast<std::size_t>(it - labels.begin());
}

LabeledFan build_losev_manin(int n) {
  require_marking_count(n);
  const LabelSet all = LabelSet::range(n - 2);
  LabeledFan out;
  out.n = n;
  out.fan = projective_space_fan(n - 3);
  // Ray i-1 of the projective fan is u_i, the divisor {x_i = 0}.
  for (int i = 1; i <= n - 2; ++i) out.labels.push_back(all.without(i));

  for (int size = 1; size <= n - 4; ++size) {
    for (LabelSet j : subsets_of(all, size, size)) {
      // l_J is cut out by x_i = 0 for i ∉ J.
      std::vector<std::size_t> ids;
      for (int i = 1; i <= n - 2; ++i)
        if (!j.contains(i)) ids.push_back(static_cast<std::size_t>(i - 1));
      out.fan = star_subdivide(out.fan, Cone(std::move(ids)));
      out.labels.push_back(j);
    }
  }
  return out;
}

LabeledFan flag_fan(int n) {
  require_marking_count(n);
  const LabelSet all = LabelSet::range(n - 2);
  const auto u = simplex_generators(n);
  const auto d = static_cast<std::size_t>(n - 3);

  LabeledFan out;
  out.n = n;
  out.fan.dim = n - 3;
  std::map<std::uint32_t, std::size_t> index;
  for (LabelSet j : subsets_of(all, 1, n - 3)) {
    RayVector r(d, 0);
    for (int i : j.members())
      for (std::size_t k = 0; k < d; ++k) r[k] -= u[static_cast<std::size_t>(i - 1)][k];
    index[j.bits()] = out.fan.rays.size();
    out.fan.rays.push_back(make_primitive(std::move(r)));
    out.labels.push_back(j);
  }

  std::vector<int> order(static_cast<std::size_t>(n - 2));
  std::iota(order.begin(), order.end(), 1);
  do {
    std::vector<std::size_t> ids;
    LabelSet chain;
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      chain = chain.with(order[k]);
      ids.push_back(index.at(chain.bits()));
    }
    out.fan.max_cones.emplace_back(std::move(ids));
  } while (std::next_permutation(order.begin(), order.end()));
  std::sort(out.fan.max_cones.begin(), out.fan.max_cones.end());
  return out;
}

bool labeled_fans_equal(const LabeledFan &a, const LabeledFan &b) {
  if (a.n != b.n || !fans_equal(a.fan, b.fan)) return false;
  for (std::size_t i = 0; i < a.fan.rays.size(); ++i) {
    const std::size_t k = find_ray(b.fan, a.fan.rays[i]);
    if (k == b.fan.rays.size() || b.labels[k] != a.labels[i]) return false;
  }
  return true;
}

KapranovClassL class_of_ray_divisor(int n, LabelSet j) {
  require_marking_count(n);
  if (j.size() < 1 || j.size() > n - 3 || !j.subset_of(LabelSet::range(n - 2)))
    throw std::invalid_argument("ray label " + j.str() + " out of range for n = " + std::to_string(n));
  if (j.size() <= n - 4) return KapranovClassL::exceptional(n, j);
  KapranovClassL c = KapranovClassL::hyperplane(n);
  for (LabelSet t : subsets_of(j, 1, j.size() - 1)) c.add_e(t, -1);
  return c;
}

KapranovClassL class_of_divisor(const LabeledFan &fan, const std::vector<std::int64_t> &divisor) {
  if (divisor.size() != fan.labels.size())
    throw std::invalid_argument("divisor length does not match ray count");
  KapranovClassL c(fan.n);
  for (std::size_t i = 0; i < divisor.size(); ++i)
    if (divisor[i] != 0) c += divisor[i] * class_of_ray_divisor(fan.n, fan.labels[i]);
  return c;
}

std::vector<std::int64_t> divisor_from_class(const LabeledFan &fan, const KapranovClassL &c) {
  if (c.n() != fan.n) throw std::invalid_argument("class and fan have different n");
  std::vector<std::int64_t> d(fan.labels.size(), 0);
  const LabelSet top = LabelSet::range(fan.n - 3);
  d[fan.ray_of(top)] += c.h();
  const auto &basis = c.basis();
  for (std::size_t idx = 1; idx < basis.size(); ++idx) {
    const LabelSet j = basis.label_at(idx);
    std::int64_t coeff = c.coords()[idx];
    if (j.proper_subset_of(top)) coeff += c.h();
    d[fan.ray_of(j)] += coeff;
  }
  return d;
}

std::int64_t picard_rank_L(int n) {
  require_marking_count(n);
  return (std::int64_t{1} << (n - 2)) - n + 1;
}

std::vector<std::int64_t> principal_divisor(const Fan &fan, const std::vector<std::int64_t> &m) {
  if (m.size() != static_cast<std::size_t>(fan.dim))
    throw std::invalid_argument("character has the wrong dimension");
  std::vector<std::int64_t> d;
  d.reserve(fan.rays.size());
  for (const RayVector &r : fan.rays) d.push_back(std::inner_product(m.begin(), m.end(), r.begin(), std::int64_t{0}));
  return d;
}

KapranovClassL forgetful_hyperplane_class_L(int n, LabelSet j) {
  require_marking_count(n);
  if (!j.subset_of(LabelSet::range(n - 2)) || j.size() > n - 4)
    throw std::invalid_argument("forgetful index " + j.str() + " out of range for n = " + std::to_string(n));
  KapranovClassL c = KapranovClassL::hyperplane(n);
  for (LabelSet t : subsets_of(j, 1, j.size())) c.add_e(t, -1);
  return c;
}

}  // namespace m0n
