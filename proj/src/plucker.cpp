#include "m0n/plucker.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "m0n/permutohedral.hpp"
#include "m0n/polytope.hpp"

namespace m0n {

namespace {

// Π x_T over all T ⊆ {1..n} with `in` ⊆ T and `out` ∩ T = ∅.
BoundarySum split_product(int n, LabelSet in, LabelSet out) {
  BoundarySum m(n);
  const LabelSet free = LabelSet::range(n) - in - out;
  for (LabelSet extra : all_subsets_of(free)) m.add(BoundaryIndex(n, in | extra));
  return m;
}

}  // namespace

PluckerRelation plucker_relation(int n, LabelSet quad) {
  if (n < 5) throw std::invalid_argument("Plücker relations need n >= 5");
  if (quad.size() != 4 || !quad.subset_of(LabelSet::range(n)))
    throw std::invalid_argument("Plücker index " + quad.str() + " is not a 4-subset of {1..n}");
  const auto q = quad.members();
  const int i = q[0], j = q[1], k = q[2], l = q[3];
  PluckerRelation p;
  p.n = n;
  p.quad = {i, j, k, l};
  p.terms = {split_product(n, {i, j}, {k, l}), split_product(n, {i, k}, {j, l}),
             split_product(n, {i, l}, {j, k})};
  return p;
}

std::vector<PluckerRelation> plucker_relations(int n) {
  std::vector<PluckerRelation> out;
  auto quads = subsets_of(LabelSet::range(n), 4, 4);
  for (LabelSet q : quads) out.push_back(plucker_relation(n, q));
  return out;
}

KapranovClassM plucker_degree(const PluckerRelation &p) {
  const KapranovClassM d = cl(p.terms[0]);
  for (std::size_t t = 1; t < 3; ++t)
    if (cl(p.terms[t]) != d) throw std::logic_error("Plücker relation is not homogeneous");
  return d;
}

std::vector<BoundarySum> monomials_in_degree(const KapranovClassM &c) {
  return effective_boundary_reps(c);
}

BoundarySum f_monomial(int n, LabelSet j, int a, int b) {
  const LabelSet forgotten = j.with(n);
  BoundarySum m(n);
  for (const BoundaryIndex &t : boundary_indices(n)) {
    // The canonical side is T^c (it never contains n).
    if (!t.side().contains(a) || !t.side().contains(b)) continue;
    if (t.complement().subset_of(forgotten)) continue;
    m.add(t);
  }
  return m;
}

DegreeReport plucker_span_rank(LabelSet j, int n) {
  if (n != 6) throw std::invalid_argument("Plücker generation is only checked for n = 6");
  if (!j.subset_of(LabelSet::range(4)) || j.size() > 2)
    throw std::invalid_argument("forgetful index must satisfy J ⊆ {1..4}, |J| <= 2");

  DegreeReport report;
  report.n = n;
  report.j = j;
  const KapranovClassM degree = f_class(n, j, n);
  const auto basis = monomials_in_degree(degree);
  report.monomial_count = static_cast<std::int64_t>(basis.size());
  std::map<std::vector<std::int64_t>, std::size_t> position;
  for (std::size_t i = 0; i < basis.size(); ++i) position.emplace(basis[i].coeffs(), i);

  std::vector<IntVector> rows;
  for (const PluckerRelation &p : plucker_relations(n)) {
    const KapranovClassM diff = degree - plucker_degree(p);
    for (const BoundarySum &mu : effective_boundary_reps(diff)) {
      IntVector row(basis.size());
      for (std::size_t t = 0; t < 3; ++t) {
        const auto it = position.find((mu + p.terms[t]).coeffs());
        if (it == position.end()) throw std::logic_error("multiplied Plücker term left the monomial basis");
        row[it->second] += p.signs[t];
      }
      rows.push_back(std::move(row));
    }
  }
  report.multiplied_relations = static_cast<std::int64_t>(rows.size());
  report.plucker_rank =
      rows.empty() ? 0 : static_cast<std::int64_t>(rank(IntMatrix::from_rows(rows, basis.size())));

  const LabeledFan fan = build_losev_manin(n);
  report.h0 = h0_toric(fan, forgetful_hyperplane_class_L(n, j));
  report.h0_formula = n - j.size() - 2;
  report.relation_dim = report.monomial_count - report.h0;

  // Boundary variables suffice in this degree: it pairs to 1 with a generic
  // line while every Keel-Vermeire class pairs to 2.
  bool boundary_only = line_pairing(degree) == 1;
  for (const auto &kv : keel_vermeire_pairings())
    if (line_pairing(keel_vermeire_class(kv, n)) < 2) boundary_only = false;

  const std::int64_t free = n - j.size();
  report.verified = boundary_only && report.h0 == report.h0_formula &&
                    report.monomial_count == binomial(free - 1, 2) &&
                    report.relation_dim == binomial(free - 2, 2) &&
                    report.plucker_rank == report.relation_dim;
  return report;
}

Rational eval_identity(LabelSet quad, const std::vector<Rational> &t, std::array<int, 3> signs) {
  if (quad.size() != 4 || quad.max_label() > static_cast<int>(t.size()))
    throw std::invalid_argument("quad must be a 4-subset of the configuration's labels");
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b)
      if (t[a] == t[b]) throw std::invalid_argument("configuration points must be distinct");
  const auto q = quad.members();
  auto at = [&t](int label) -> const Rational & { return t[static_cast<std::size_t>(label - 1)]; };
  const Rational &ti = at(q[0]), &tj = at(q[1]), &tk = at(q[2]), &tl = at(q[3]);
  const Rational c1 = (ti - tj) * (tk - tl);
  const Rational c2 = (ti - tk) * (tj - tl);
  const Rational c3 = (ti - tl) * (tj - tk);
  return Rational(signs[0]) * c1 + Rational(signs[1]) * c2 + Rational(signs[2]) * c3;
}

}  // namespace m0n
