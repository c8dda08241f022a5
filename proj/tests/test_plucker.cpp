#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "m0n/plucker.hpp"

using namespace m0n;

namespace {

BoundarySum product(int n, std::vector<LabelSet> sides) {
  BoundarySum m(n);
  for (LabelSet s : sides) m.add(BoundaryIndex(n, s));
  return m;
}

}  // namespace

TEST_CASE("relation terms") {
  const PluckerRelation p = plucker_relation(5, {1, 2, 3, 4});
  CHECK(p.quad == std::array<int, 4>{1, 2, 3, 4});
  CHECK(p.signs == std::array<int, 3>{1, -1, 1});
  CHECK(p.terms[0] == product(5, {{1, 2}, {3, 4}}));
  CHECK(p.terms[1] == product(5, {{1, 3}, {2, 4}}));
  CHECK(p.terms[2] == product(5, {{1, 4}, {2, 3}}));

  // T ⊇ {1,2}, T ∩ {3,4} = ∅: T = 12, 125, 126, 1256.
  const PluckerRelation q = plucker_relation(6, {1, 2, 3, 4});
  CHECK(q.terms[0] == product(6, {{1, 2}, {1, 2, 5}, {3, 4, 5}, {3, 4}}));
  for (const auto &t : q.terms) CHECK(t.degree() == 4);

  CHECK_THROWS_AS(plucker_relation(4, {1, 2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(plucker_relation(6, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(plucker_relation(6, {1, 2, 3, 7}), std::invalid_argument);
}

TEST_CASE("relations are homogeneous of degree F_{I^c,m}") {
  CHECK(plucker_relations(5).size() == 5);
  CHECK(plucker_relations(6).size() == 15);
  CHECK(plucker_relations(7).size() == 35);
  for (int n = 5; n <= 7; ++n)
    for (const PluckerRelation &p : plucker_relations(n)) {
      const KapranovClassM d = plucker_degree(p);
      LabelSet quad;
      for (int x : p.quad) quad = quad.with(x);
      const LabelSet rest = LabelSet::range(n) - quad;
      for (int m : p.quad) CHECK(f_class(n, rest, m) == d);
      for (const auto &t : p.terms) CHECK(t.degree() == (1 << (n - 4)));
    }
  CHECK(plucker_degree(plucker_relation(5, {1, 2, 3, 4})) ==
        KapranovClassM(5, {2, -1, -1, -1, -1}));
}

TEST_CASE("inhomogeneous relation is rejected") {
  PluckerRelation p = plucker_relation(5, {1, 2, 3, 4});
  p.terms[1].add(BoundaryIndex(5, {1, 5}));
  CHECK_THROWS_AS(plucker_degree(p), std::logic_error);
}

TEST_CASE("F-monomials") {
  // m_∅(1,2) on n = 6: the seven x_T with 1,2 ∉ T and 6 ∈ T.
  const BoundarySum m = f_monomial(6, {}, 1, 2);
  CHECK(m.degree() == 7);
  CHECK(m == hyperplane_representative(6, 1, 2));
  CHECK(f_monomial(6, {3}, 1, 2).degree() == 6);
  for (int n = 5; n <= 6; ++n)
    for (LabelSet j : f_indices(n)) {
      std::set<std::vector<std::int64_t>> built, listed;
      const auto free = (LabelSet::range(n) - j.with(n)).members();
      for (std::size_t a = 0; a < free.size(); ++a)
        for (std::size_t b = a + 1; b < free.size(); ++b) {
          const BoundarySum mono = f_monomial(n, j, free[a], free[b]);
          CHECK(cl(mono) == f_class(n, j, n));
          built.insert(mono.coeffs());
        }
      for (const auto &mono : monomials_in_degree(f_class(n, j, n))) listed.insert(mono.coeffs());
      CHECK(built == listed);
    }
}

TEST_CASE("monomials in the degree of a five-point relation") {
  const auto monos = monomials_in_degree(plucker_degree(plucker_relation(5, {1, 2, 3, 4})));
  CHECK(monos.size() == 3);
  const auto h = monomials_in_degree(KapranovClassM::hyperplane(5));
  CHECK(h.size() == 6);
  for (const auto &m : h) CHECK(m.degree() == 3);
}

TEST_CASE("Plücker multiples span the relations in each F-degree") {
  const std::int64_t monos[] = {10, 6, 3};
  const std::int64_t ranks[] = {6, 3, 1};
  const std::int64_t h0s[] = {4, 3, 2};
  int k = 0;
  for (LabelSet j : {LabelSet{}, LabelSet{1}, LabelSet{1, 2}}) {
    const DegreeReport r = plucker_span_rank(j, 6);
    CHECK(r.monomial_count == monos[k]);
    CHECK(r.h0 == h0s[k]);
    CHECK(r.h0 == r.h0_formula);
    CHECK(r.relation_dim == ranks[k]);
    CHECK(r.plucker_rank == ranks[k]);
    CHECK(r.multiplied_relations >= r.plucker_rank);
    CHECK(r.verified);
    ++k;
  }
  CHECK(plucker_span_rank({2, 4}, 6).verified);
  CHECK_THROWS_AS(plucker_span_rank({}, 5), std::invalid_argument);
  CHECK_THROWS_AS(plucker_span_rank({1, 5}, 6), std::invalid_argument);
  CHECK_THROWS_AS(plucker_span_rank({1, 2, 3}, 6), std::invalid_argument);
}

TEST_CASE("five points: one relation per forgotten pair of degree F_{i,5}") {
  for (int i = 1; i <= 4; ++i) {
    const auto monos = monomials_in_degree(f_class(5, {i}, 5));
    CHECK(monos.size() == 3);
    int relations = 0;
    for (const PluckerRelation &p : plucker_relations(5))
      if (plucker_degree(p) == f_class(5, {i}, 5)) {
        ++relations;
        std::set<std::vector<std::int64_t>> terms, listed;
        for (const auto &t : p.terms) terms.insert(t.coeffs());
        for (const auto &m : monos) listed.insert(m.coeffs());
        CHECK(terms == listed);
      }
    CHECK(relations == 1);
  }
}

TEST_CASE("the three-term identity holds on configurations") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> t;
    while (t.size() < 6) {
      const Rational x(num(rng), den(rng));
      if (std::find(t.begin(), t.end(), x) == t.end()) t.push_back(x);
    }
    for (LabelSet q : subsets_of(LabelSet::range(6), 4, 4)) {
      CHECK(eval_identity(q, t) == 0);
      CHECK(eval_identity(q, t, {1, 1, 1}) != 0);
    }
  }
  const std::vector<Rational> repeated{Rational(0), Rational(1), Rational(1), Rational(3)};
  CHECK_THROWS_AS(eval_identity({1, 2, 3, 4}, repeated), std::invalid_argument);
  CHECK_THROWS_AS(eval_identity({1, 2, 3, 5}, std::vector<Rational>(4)), std::invalid_argument);
}
