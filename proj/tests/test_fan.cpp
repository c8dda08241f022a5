#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "m0n/fan.hpp"
#include "m0n/permutohedral.hpp"

using namespace m0n;

namespace {

// P^2 with the three torus-fixed points blown up.
Fan blown_up_plane() {
  Fan f = projective_space_fan(2);
  f = star_subdivide(f, Cone({0, 1}));
  f = star_subdivide(f, Cone({0, 2}));
  f = star_subdivide(f, Cone({1, 2}));
  return f;
}

std::vector<std::int64_t> pair(const Fan &f, const std::vector<std::int64_t> &m) {
  return principal_divisor(f, m);
}

}  // namespace

TEST_CASE("projective space fans") {
  const Fan p2 = projective_space_fan(2);
  CHECK(p2.rays.size() == 3);
  CHECK(p2.max_cones.size() == 3);
  CHECK(p2.rays == std::vector<RayVector>{{1, 0}, {0, 1}, {-1, -1}});
  const Fan p3 = projective_space_fan(3);
  CHECK(p3.rays.size() == 4);
  CHECK(p3.max_cones.size() == 4);
  CHECK_THROWS_AS(projective_space_fan(0), std::invalid_argument);
}

TEST_CASE("star subdivision of P^2") {
  const Fan p2 = projective_space_fan(2);
  const Fan one = star_subdivide(p2, Cone({0, 1}));
  CHECK(one.rays.size() == 4);
  CHECK(one.rays.back() == RayVector{1, 1});
  CHECK(one.max_cones.size() == 4);

  const Fan three = blown_up_plane();
  CHECK(three.rays.size() == 6);
  CHECK(three.max_cones.size() == 6);
  CHECK(fans_equal(three, flag_fan(5).fan));

  // A ray adds nothing.
  const Fan same = star_subdivide(p2, Cone({2}));
  CHECK(same.rays == p2.rays);
  CHECK(same.max_cones == p2.max_cones);
}

TEST_CASE("star subdivision errors are distinct") {
  const Fan one = star_subdivide(projective_space_fan(2), Cone({0, 1}));
  CHECK_THROWS_AS(star_subdivide(one, Cone({0, 1})), NotAConeError);

  Fan skew;
  skew.dim = 2;
  skew.rays = {{1, 0}, {1, 2}, {-1, -1}};
  skew.max_cones = {Cone({0, 1}), Cone({1, 2}), Cone({0, 2})};
  CHECK_THROWS_AS(star_subdivide(skew, Cone({0, 1})), NotSmoothError);
  CHECK_FALSE(validate(skew).smooth);
}

TEST_CASE("proper transforms and pull-backs") {
  const Fan p2 = projective_space_fan(2);
  const Cone sigma({0, 1});
  CHECK(proper_transform_class(p2, sigma, {1, 0, 0}, TransformKind::ProperTransform) ==
        std::vector<std::int64_t>{1, 0, 0, 0});
  CHECK(proper_transform_class(p2, sigma, {1, 0, 0}, TransformKind::PullBack) ==
        std::vector<std::int64_t>{1, 0, 0, 1});
  CHECK(proper_transform_class(p2, sigma, {0, 0, 0}, TransformKind::PullBack) ==
        std::vector<std::int64_t>{0, 0, 0, 0});
  CHECK(proper_transform_class(p2, sigma, {0, 0, 0}, TransformKind::ProperTransform) ==
        std::vector<std::int64_t>{0, 0, 0, 0});
  CHECK(proper_transform_class(p2, sigma, {1, 1, 0}, TransformKind::PullBack) ==
        std::vector<std::int64_t>{1, 1, 0, 2});
  CHECK_THROWS_AS(proper_transform_class(p2, sigma, {1, 0}, TransformKind::PullBack), std::invalid_argument);
}

TEST_CASE("pull-back maps principal divisors to principal divisors") {
  Fan f = projective_space_fan(3);
  const std::vector<Cone> centers{Cone({0, 1, 2}), Cone({0, 1}), Cone({2, 3})};
  for (const Cone &sigma : centers) {
    for (const auto &m : std::vector<std::vector<std::int64_t>>{{1, 0, 0}, {0, -2, 1}, {3, 1, -1}}) {
      const auto up = proper_transform_class(f, sigma, pair(f, m), TransformKind::PullBack);
      const Fan g = star_subdivide(f, sigma);
      CHECK(up == pair(g, m));
    }
    f = star_subdivide(f, sigma);
  }
}

TEST_CASE("validation") {
  CHECK(validate(projective_space_fan(2)) == FanReport{true, true, true});

  Fan orthant;
  orthant.dim = 2;
  orthant.rays = {{1, 0}, {0, 1}};
  orthant.max_cones = {Cone({0, 1})};
  const FanReport r = validate(orthant);
  CHECK(r.smooth);
  CHECK(r.simplicial);
  CHECK_FALSE(r.complete);

  CHECK(validate(blown_up_plane()) == FanReport{true, true, true});

  // In dimension 1 the shared wall is the origin; the two rays must point
  // to opposite sides of it.
  Fan line;
  line.dim = 1;
  line.rays = {{1}, {-1}};
  line.max_cones = {Cone({0}), Cone({1})};
  CHECK(validate(line).complete);
  Fan one_sided;
  one_sided.dim = 1;
  one_sided.rays = {{1}, {2}};
  one_sided.max_cones = {Cone({0}), Cone({1})};
  CHECK_FALSE(validate(one_sided).complete);

  // Winds twice around the origin: facets pair up with opposite sides, yet
  // every point is covered twice.
  Fan twice;
  twice.dim = 2;
  twice.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::size_t i = 0; i < 8; ++i) {
    std::vector<std::size_t> ids{i, (i + 1) % 8};
    std::sort(ids.begin(), ids.end());
    twice.max_cones.emplace_back(ids);
  }
  CHECK(covering_degree(twice) == 2);
  CHECK_FALSE(validate(twice).complete);
}

TEST_CASE("strata") {
  const Fan l3 = blown_up_plane();
  CHECK(strata(l3, 1).size() == 6);
  CHECK(strata(l3, 2).size() == 6);
  const auto zero = strata(l3, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].ray_ids.empty());
  CHECK_THROWS_AS(strata(l3, 3), std::invalid_argument);
  CHECK(strata(l3, 2) == [&] {
    auto c = l3.max_cones;
    std::sort(c.begin(), c.end());
    return c;
  }());
}

TEST_CASE("property: subdivision keeps fans smooth and complete") {
  Fan f = projective_space_fan(3);
  std::int64_t cones = static_cast<std::int64_t>(f.max_cones.size());
  CHECK(total_covering_volume(f) == cones);
  for (int step = 0; step < 6; ++step) {
    // Subdivide the first 2-dimensional stratum found in a maximal cone.
    const auto faces = strata(f, 2 + step % 2);
    const Cone sigma = faces[static_cast<std::size_t>(step) % faces.size()];
    std::int64_t containing = 0;
    for (const Cone &c : f.max_cones) containing += c.contains_all(sigma);
    const Fan g = star_subdivide(f, sigma);
    CHECK(g.rays.size() == f.rays.size() + 1);
    CHECK(validate(g) == FanReport{true, true, true});
    CHECK(covering_degree(g) == 1);
    // Each of the `containing` cones splits into dim(sigma) unimodular cones.
    const std::int64_t expected = cones + containing * (static_cast<std::int64_t>(sigma.dim()) - 1);
    CHECK(static_cast<std::int64_t>(g.max_cones.size()) == expected);
    CHECK(total_covering_volume(g) == expected);
    f = g;
    cones = expected;
  }
}

TEST_CASE("fan equality ignores ray order") {
  const Fan a = projective_space_fan(2);
  Fan b;
  b.dim = 2;
  b.rays = {{-1, -1}, {1, 0}, {0, 1}};
  b.max_cones = {Cone({0, 1}), Cone({1, 2}), Cone({0, 2})};
  CHECK(fans_equal(a, b));
  b.rays[0] = {-1, -2};
  CHECK_FALSE(fans_equal(a, b));
  CHECK(find_ray(a, {0, 1}) == 1);
  CHECK(find_ray(a, {5, 5}) == a.rays.size());
}
