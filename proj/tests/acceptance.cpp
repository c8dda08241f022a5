// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "m0n/permutohedral.hpp"
#include "m0n/picard.hpp"
#include "m0n/plucker.hpp"
#include "m0n/polytope.hpp"

using namespace m0n;

namespace {

// Wall-clock limits in seconds.
constexpr double kFanLimit = 10.0;
constexpr double kH0Limit = 60.0;
constexpr double kRepsLimit = 300.0;
constexpr double kPluckerLimit = 120.0;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string &why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome fans() {
  Outcome o;
  const std::size_t rays[] = {2, 6, 14, 30, 62};
  const std::size_t cones[] = {2, 6, 24, 120, 720};
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 4; n <= 8; ++n) {
    const LabeledFan lm = build_losev_manin(n);
    if (!labeled_fans_equal(lm, flag_fan(n))) o.fail("fans differ at n=" + std::to_string(n));
    if (lm.fan.rays.size() != rays[n - 4] || lm.fan.max_cones.size() != cones[n - 4])
      o.fail("wrong counts at n=" + std::to_string(n));
  }
  const double s = seconds_since(t0);
  if (s >= kFanLimit) o.fail("took " + std::to_string(s) + " s");
  if (o.ok) o.detail = "n=4..8 equal, " + std::to_string(s) + " s";
  return o;
}

Outcome picard_ranks() {
  Outcome o;
  for (int n = 4; n <= 8; ++n) {
    const LabeledFan f = build_losev_manin(n);
    const std::int64_t expected = (std::int64_t{1} << (n - 2)) - n + 1;
    const auto ray_matrix = IntMatrix::from_rows(
        [&] {
          std::vector<IntVector> rows;
          for (const auto &r : f.fan.rays) rows.push_back(IntVector(r.begin(), r.end()));
          return rows;
        }(),
        static_cast<std::size_t>(n - 3));
    const std::int64_t pic = static_cast<std::int64_t>(f.fan.rays.size() - rank(ray_matrix));
    if (picard_rank_L(n) != expected || pic != expected) o.fail("L-side rank at n=" + std::to_string(n));
  }
  for (int n = 5; n <= 7; ++n) {
    if (cl_rank(n) != static_cast<std::size_t>((1 << (n - 1)) - binomial(n, 2) - 1))
      o.fail("cl rank at n=" + std::to_string(n));
    if (cl_kernel_dim(n) != static_cast<std::size_t>(binomial(n, 2) - n))
      o.fail("cl kernel at n=" + std::to_string(n));
  }
  if (o.ok) o.detail = "L ranks n=4..8, cl rank/kernel n=5..7";
  return o;
}

Outcome h0_counts() {
  Outcome o;
  double n7 = 0;
  int checked = 0;
  for (int n = 5; n <= 7; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const LabeledFan f = build_losev_manin(n);
    for (LabelSet j : subsets_of(LabelSet::range(n - 2), 0, n - 4)) {
      ++checked;
      if (h0_toric(f, forgetful_hyperplane_class_L(n, j)) != n - static_cast<std::int64_t>(j.size()) - 2)
        o.fail("h0 mismatch at n=" + std::to_string(n) + " J=" + j.str());
    }
    if (n == 7) n7 = seconds_since(t0);
  }
  if (n7 >= kH0Limit) o.fail("n=7 took " + std::to_string(n7) + " s");
  if (o.ok) o.detail = std::to_string(checked) + " indices, n=7 in " + std::to_string(n7) + " s";
  return o;
}

Outcome rep_counts() {
  Outcome o;
  double n7 = 0;
  for (int n = 5; n <= 7; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    for (LabelSet j : f_indices(n)) {
      const auto reps = effective_boundary_reps(f_class(n, j, n));
      if (static_cast<std::int64_t>(reps.size()) != binomial(n - j.size() - 1, 2))
        o.fail("count at n=" + std::to_string(n) + " J=" + j.str());
      std::set<std::vector<std::int64_t>> expected, got;
      const auto free = (LabelSet::range(n) - j.with(n)).members();
      for (std::size_t a = 0; a < free.size(); ++a)
        for (std::size_t b = a + 1; b < free.size(); ++b) {
          auto v = hyperplane_representative(n, free[a], free[b]).coeffs();
          for (LabelSet t : subsets_of(j, 1, j.size())) --v[boundary_position(BoundaryIndex(n, t.with(n)))];
          expected.insert(v);
        }
      for (const auto &d : reps) got.insert(d.coeffs());
      if (got != expected) o.fail("coset structure at n=" + std::to_string(n) + " J=" + j.str());
    }
    if (n == 7) n7 = seconds_since(t0);
  }
  if (n7 >= kRepsLimit) o.fail("n=7 took " + std::to_string(n7) + " s");
  if (o.ok) o.detail = "all J, n=5..7, n=7 in " + std::to_string(n7) + " s";
  return o;
}

Outcome f_basis() {
  Outcome o;
  const std::size_t sizes[] = {5, 16, 42};
  for (int n = 5; n <= 7; ++n) {
    const FBasisReport r = f_basis_check(n);
    if (r.size != sizes[n - 5] || !r.invertible || abs(r.determinant) != 1)
      o.fail("n=" + std::to_string(n));
  }
  if (o.ok) o.detail = "sizes 5/16/42, det ±1";
  return o;
}

Outcome plucker_generation() {
  Outcome o;
  const std::int64_t want[3][4] = {{10, 4, 6, 6}, {6, 3, 3, 3}, {3, 2, 1, 1}};
  const auto t0 = std::chrono::steady_clock::now();
  int k = 0;
  for (LabelSet j : {LabelSet{}, LabelSet{1}, LabelSet{1, 2}}) {
    const DegreeReport r = plucker_span_rank(j, 6);
    const std::int64_t got[4] = {r.monomial_count, r.h0, r.relation_dim, r.plucker_rank};
    if (!std::equal(got, got + 4, want[k]) || !r.verified) o.fail("|J|=" + std::to_string(k));
    ++k;
  }
  const double s = seconds_since(t0);
  if (s >= kPluckerLimit) o.fail("took " + std::to_string(s) + " s");
  if (o.ok) o.detail = "(10,4,6,6) (6,3,3,3) (3,2,1,1), " + std::to_string(s) + " s";
  return o;
}

Outcome scalar_identity() {
  Outcome o;
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 97);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> t;
    while (t.size() < 6) {
      const Rational x(num(rng), den(rng));
      if (std::find(t.begin(), t.end(), x) == t.end()) t.push_back(x);
    }
    for (LabelSet q : subsets_of(LabelSet::range(6), 4, 4)) {
      if (eval_identity(q, t) != 0) o.fail("nonzero at trial " + std::to_string(trial));
      if (eval_identity(q, t, {1, 1, 1}) == 0) o.fail("perturbed relation vanished");
    }
  }
  if (o.ok) o.detail = "100 configurations x 15 quads";
  return o;
}

Outcome symmetric_action() {
  Outcome o;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      const Permutation tau = Permutation::transposition(6, i, j);
      for (const BoundaryIndex &t : boundary_indices(6)) {
        const KapranovClassM c = class_of_boundary(t);
        const KapranovClassM image = apply_permutation(tau, c);
        if (image != class_of_boundary(BoundaryIndex(6, tau(t.side())))) o.fail("image of " + t.side().str());
        if (apply_permutation(tau, image) != c) o.fail("not an involution");
      }
    }
  if (o.ok) o.detail = "10 transpositions x 25 indices";
  return o;
}

Outcome keel_vermeire() {
  Outcome o;
  for (int n = 5; n <= 7; ++n)
    for (LabelSet j : f_indices(n))
      if (line_pairing(f_class(n, j, n)) != 1) o.fail("F-class pairing at n=" + std::to_string(n));
  const auto pairings = keel_vermeire_pairings();
  if (pairings.size() != 15) o.fail("expected 15 classes");
  for (const auto &p : pairings)
    if (line_pairing(keel_vermeire_class(p, 6)) != 2) o.fail("KV pairing");
  if (o.ok) o.detail = "F pairs to 1, 15 KV classes pair to 2";
  return o;
}

Outcome telescoping() {
  Outcome o;
  int orders = 0;
  for (int n = 5; n <= 6; ++n)
    for (LabelSet j : f_indices(n)) {
      std::vector<int> order = j.members();
      do {
        ++orders;
        if (psi_pullback_by_steps(n, order) != psi_pullback(n, j)) o.fail("n=" + std::to_string(n) + " J=" + j.str());
      } while (std::next_permutation(order.begin(), order.end()));
    }
  if (o.ok) o.detail = std::to_string(orders) + " orders";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char *, std::function<Outcome()>> criteria[] = {
      {"fan oracle equivalence", fans},
      {"Picard ranks", picard_ranks},
      {"lattice-point h0", h0_counts},
      {"effective representation counts", rep_counts},
      {"F-basis", f_basis},
      {"Plücker generation n=6", plucker_generation},
      {"scalar Plücker identity", scalar_identity},
      {"symmetric group action", symmetric_action},
      {"Keel-Vermeire exclusion", keel_vermeire},
      {"pull-back telescoping", telescoping},
  };
  int failed = 0;
  int k = 0;
  for (const auto &[name, run] : criteria) {
    ++k;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %2d %s: %s\n", o.ok ? "PASS" : "FAIL", k, name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
