#include "m0n/picard.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>

#include "m0n/polytope.hpp"

namespace m0n {

namespace {

void require_moduli_n(int n) {
  if (n < 5 || n > 31)
    throw std::invalid_argument("boundary calculus needs 5 <= n, got " + std::to_string(n));
}

struct BoundaryCatalog {
  std::vector<BoundaryIndex> indices;
  std::unordered_map<std::uint32_t, std::size_t> position;
};

const BoundaryCatalog &catalog(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<BoundaryCatalog>> cache;
  std::lock_guard lock(mu);
  auto &slot = cache[n];
  if (!slot) {
    require_moduli_n(n);
    auto cat = std::make_unique<BoundaryCatalog>();
    std::vector<LabelSet> sides = subsets_of(LabelSet::range(n - 1), 2, n - 2);
    std::sort(sides.begin(), sides.end(),
              [](LabelSet a, LabelSet b) { return LabelSet::lex_compare(a, b) < 0; });
    for (LabelSet s : sides) {
      cat->position.emplace(s.bits(), cat->indices.size());
      cat->indices.emplace_back(n, s);
    }
    slot = std::move(cat);
  }
  return *slot;
}

// Class map and its kernel lattice, computed once per n. `fibre_kernel` is a
// second lattice basis of the same kernel, in Hermite form after moving the
// densest columns of the class map to the front: its pivots then sit on
// boundary coefficients that are free in the fibre, so the fibre polytope
// gets one simple bound per kernel coordinate.
struct ClassMapData {
  IntMatrix matrix;
  std::vector<IntVector> kernel;
  std::vector<IntVector> fibre_kernel;
  std::size_t rank = 0;
};

std::vector<IntVector> dense_first_kernel(const IntMatrix &m) {
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto support = [&m](std::size_t c) {
    std::size_t s = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) s += !m(r, c).is_zero();
    return s;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return support(a) > support(b); });
  IntMatrix permuted(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) permuted(r, c) = m(r, order[c]);
  std::vector<IntVector> out;
  for (const IntVector &v : kernel_lattice_basis(permuted)) {
    IntVector w(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) w[order[c]] = v[c];
    out.push_back(std::move(w));
  }
  return out;
}

const ClassMapData &class_map_data(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ClassMapData>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto data = std::make_unique<ClassMapData>();
  const auto &idx = boundary_indices(n);
  const auto &basis = kapranov_basis<ModuliTag>(n);
  data->matrix = IntMatrix(basis.size(), idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const KapranovClassM k = class_of_boundary(idx[c]);
    for (std::size_t r = 0; r < basis.size(); ++r) data->matrix(r, c) = k.coords()[r];
  }
  data->kernel = kernel_lattice_basis(data->matrix);
  data->fibre_kernel = dense_first_kernel(data->matrix);
  data->rank = rank(data->matrix);
  std::lock_guard lock(mu);
  auto &slot = cache[n];
  if (!slot) slot = std::move(data);
  return *slot;
}

}  // namespace

BoundaryIndex::BoundaryIndex(int n, LabelSet t) : n_(n) {
  if (!t.subset_of(LabelSet::range(n)) || t.size() < 2 || t.size() > n - 2)
    throw std::invalid_argument("invalid boundary index " + t.str() + " for n = " + std::to_string(n));
  side_ = t.contains(n) ? LabelSet::range(n) - t : t;
}

const std::vector<BoundaryIndex> &boundary_indices(int n) { return catalog(n).indices; }

std::size_t boundary_position(const BoundaryIndex &t) {
  return catalog(t.n()).position.at(t.side().bits());
}

BoundarySum::BoundarySum(int n) : n_(n), coeffs_(boundary_indices(n).size(), 0) {}

BoundarySum::BoundarySum(int n, std::vector<std::int64_t> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != boundary_indices(n).size())
    throw std::invalid_argument("boundary sum has the wrong length");
  for (auto c : coeffs_)
    if (c < 0) throw std::invalid_argument("boundary sums are effective: negative coefficient");
}

void BoundarySum::add(const BoundaryIndex &t, std::int64_t k) {
  auto &c = coeffs_[boundary_position(t)];
  if (c + k < 0) throw std::invalid_argument("boundary sums are effective: negative coefficient");
  c += k;
}

std::int64_t BoundarySum::degree() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t{0});
}

BoundarySum &BoundarySum::operator+=(const BoundarySum &o) {
  if (o.n_ != n_) throw std::invalid_argument("boundary sums on different spaces");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

KapranovClassM class_of_boundary(const BoundaryIndex &t) {
  const int n = t.n();
  const LabelSet j = t.complement().without(n);  // T = J ∪ {n}
  if (j.size() <= n - 4) return KapranovClassM::exceptional(n, j);
  KapranovClassM c = KapranovClassM::hyperplane(n);
  for (LabelSet sub : subsets_of(j, 1, j.size() - 1)) c.add_e(sub, -1);
  return c;
}

KapranovClassM class_of_boundary_combination(int n, std::span<const std::int64_t> coeffs) {
  const auto &idx = boundary_indices(n);
  if (coeffs.size() != idx.size()) throw std::invalid_argument("boundary combination has the wrong length");
  const IntMatrix &m = cl_matrix(n);
  std::vector<std::int64_t> out(m.rows(), 0);
  for (std::size_t c = 0; c < idx.size(); ++c) {
    if (coeffs[c] == 0) continue;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) out[r] += coeffs[c] * m(r, c).convert_to<std::int64_t>();
  }
  return KapranovClassM(n, std::move(out));
}

KapranovClassM cl(const BoundarySum &d) { return class_of_boundary_combination(d.n(), d.coeffs()); }

const IntMatrix &cl_matrix(int n) { return class_map_data(n).matrix; }
std::size_t cl_rank(int n) { return class_map_data(n).rank; }
std::size_t cl_kernel_dim(int n) { return class_map_data(n).kernel.size(); }

BoundarySum hyperplane_representative(int n, int a, int b) {
  require_moduli_n(n);
  if (a == b || a < 1 || b < 1 || a >= n || b >= n)
    throw std::invalid_argument("h_ab needs distinct a, b in {1..n-1}");
  BoundarySum h(n);
  for (const BoundaryIndex &t : boundary_indices(n))
    if (t.side().contains(a) && t.side().contains(b)) h.add(t);
  return h;
}

KapranovClassM pullback_from_L(const KapranovClassL &c) {
  KapranovClassM out = KapranovClassM::hyperplane(c.n());
  out.set_h(c.h());
  const auto &basis = c.basis();
  for (std::size_t i = 1; i < basis.size(); ++i) out.set_e(basis.label_at(i), c.coords()[i]);
  return out;
}

KapranovClassM psi_pullback(int n, LabelSet j) {
  require_moduli_n(n);
  if (!j.subset_of(LabelSet::range(n - 1)) || j.size() > n - 4)
    throw std::invalid_argument("forgetful index " + j.str() + " needs J ⊆ {1..n-1}, |J| <= n-4");
  KapranovClassM c = KapranovClassM::hyperplane(n);
  for (LabelSet t : subsets_of(j, 1, j.size())) c -= class_of_boundary(BoundaryIndex(n, t.with(n)));
  return c;
}

KapranovClassM psi_pullback_by_steps(int n, std::span<const int> order) {
  require_moduli_n(n);
  LabelSet j;
  for (int q : order) {
    if (q < 1 || q >= n || j.contains(q)) throw std::invalid_argument("invalid forgetting order");
    j = j.with(q);
  }
  if (j.size() > n - 4) throw std::invalid_argument("forgetful index too large");

  // A divisor on M_{0,P}: coefficient of ψ_n plus boundary terms keyed by the
  // side not containing n.
  LabelSet points = LabelSet::range(n) - j;
  std::int64_t psi = 1;
  std::map<std::uint32_t, std::int64_t> delta;
  for (int q : order) {
    const LabelSet bigger = points.with(q);
    std::map<std::uint32_t, std::int64_t> next;
    for (auto [side, c] : delta) {
      next[side] += c;
      next[LabelSet(side).with(q).bits()] += c;
    }
    // Δ_{nq} on M_{0,P∪{q}}, written by its side without n.
    next[(bigger - LabelSet{n, q}).bits()] -= psi;
    delta = std::move(next);
    points = bigger;
  }
  KapranovClassM c = static_cast<std::int64_t>(psi) * KapranovClassM::hyperplane(n);
  for (auto [side, k] : delta)
    if (k != 0) c += k * class_of_boundary(BoundaryIndex(n, LabelSet(side)));
  return c;
}

std::vector<LabelSet> f_indices(int n) {
  require_moduli_n(n);
  return subsets_of(LabelSet::range(n - 1), 0, n - 4);
}

KapranovClassM f_class(int n, LabelSet j, int m) {
  require_moduli_n(n);
  if (m < 1 || m > n) throw std::invalid_argument("moving label out of range");
  if (j.contains(m)) throw std::invalid_argument("moving label " + std::to_string(m) + " lies in J");
  if (!j.subset_of(LabelSet::range(n)) || j.size() > n - 4)
    throw std::invalid_argument("forgetful index " + j.str() + " out of range");
  if (m == n) return psi_pullback(n, j);
  const Permutation tau = Permutation::transposition(n, m, n);
  return apply_permutation(tau, psi_pullback(n, tau(j)));
}

IntMatrix f_class_matrix(int n) {
  const auto js = f_indices(n);
  const auto &basis = kapranov_basis<ModuliTag>(n);
  IntMatrix m(basis.size(), js.size());
  for (std::size_t c = 0; c < js.size(); ++c) {
    const KapranovClassM f = f_class(n, js[c], n);
    for (std::size_t r = 0; r < basis.size(); ++r) m(r, c) = f.coords()[r];
  }
  return m;
}

FBasisReport f_basis_check(int n) {
  const IntMatrix m = f_class_matrix(n);
  FBasisReport report;
  report.size = m.cols();
  bool tri = m.rows() == m.cols();
  for (std::size_t c = 0; tri && c < m.cols(); ++c) {
    if (m(c, c) != (c == 0 ? 1 : -1)) tri = false;
    for (std::size_t r = c + 1; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) tri = false;
  }
  report.triangular = tri;
  report.determinant = m.rows() == m.cols() ? determinant(m) : Integer(0);
  report.invertible = abs(report.determinant) == 1;
  return report;
}

std::vector<BoundarySum> effective_boundary_reps(const KapranovClassM &c) {
  const int n = c.n();
  const ClassMapData &data = class_map_data(n);
  const IntVector target = to_int_vector(c.coords());
  const auto particular = solve_particular(data.matrix, target);
  if (!particular) return {};

  // d = x0 + Σ t_i r_i >= 0, one inequality per boundary index.
  const std::size_t cols = data.matrix.cols();
  const auto &kernel = data.fibre_kernel;
  const std::size_t k = kernel.size();
  IntMatrix a(cols, k);
  IntVector b(cols);
  for (std::size_t r = 0; r < cols; ++r) {
    for (std::size_t i = 0; i < k; ++i) a(r, i) = kernel[i][r];
    b[r] = -(*particular)[r];
  }
  const auto points = integer_points(HalfspaceSystem(std::move(a), std::move(b)));

  std::vector<BoundarySum> reps;
  reps.reserve(points.size());
  for (const IntVector &t : points) {
    std::vector<std::int64_t> d(cols);
    for (std::size_t r = 0; r < cols; ++r) {
      Integer v = (*particular)[r];
      for (std::size_t i = 0; i < k; ++i) v += t[i] * kernel[i][r];
      d[r] = v.convert_to<std::int64_t>();
    }
    reps.emplace_back(n, std::move(d));
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(static_cast<std::size_t>(n) + 1);
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("transposition out of range");
  Permutation p = identity(n);
  std::swap(p.image[static_cast<std::size_t>(i)], p.image[static_cast<std::size_t>(j)]);
  return p;
}

LabelSet Permutation::operator()(LabelSet s) const {
  LabelSet out;
  for (int i : s.members()) out = out.with((*this)(i));
  return out;
}

Permutation Permutation::compose(const Permutation &other) const {
  if (other.n() != n()) throw std::invalid_argument("composing permutations of different degree");
  Permutation p = identity(n());
  for (int i = 1; i <= n(); ++i) p.image[static_cast<std::size_t>(i)] = (*this)(other(i));
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p = identity(n());
  for (int i = 1; i <= n(); ++i) p.image[static_cast<std::size_t>((*this)(i))] = i;
  return p;
}

std::vector<std::array<int, 2>> Permutation::transpositions() const {
  // σ = τ ∘ σ' with τ = (i σ(i)) and σ' = τ ∘ σ fixing i.
  std::vector<std::array<int, 2>> out;
  Permutation rest = *this;
  for (int i = 1; i <= n(); ++i) {
    const int target = rest(i);
    if (target == i) continue;
    out.push_back({i, target});
    rest = transposition(n(), i, target).compose(rest);
  }
  return out;
}

PicClassVector PicClassVector::from(const KapranovClassM &c) {
  PicClassVector v;
  v.n = c.n();
  v.coords.assign(c.coords().begin(), c.coords().end());
  return v;
}

KapranovClassM PicClassVector::to_integral() const {
  std::vector<std::int64_t> out;
  out.reserve(coords.size());
  for (const auto &q : coords) {
    if (denominator(q) != 1) throw std::domain_error("class has a non-integral coordinate");
    out.push_back(numerator(q).convert_to<std::int64_t>());
  }
  return KapranovClassM(n, std::move(out));
}

KapranovClassM psi_class(int n, int j) {
  require_moduli_n(n);
  if (j < 1 || j >= n) throw std::invalid_argument("psi_class needs 1 <= j <= n-1");
  KapranovClassM c = static_cast<std::int64_t>(n - 3) * KapranovClassM::hyperplane(n);
  for (LabelSet k : subsets_of(LabelSet::range(n - 1).without(j), 1, n - 4))
    c.add_e(k, -(n - k.size() - 3));
  return c;
}

namespace {

PicClassVector apply_transposition(int i, int j, const PicClassVector &c) {
  const int n = c.n;
  const Permutation tau = Permutation::transposition(n, i, j);
  const auto &basis = kapranov_basis<ModuliTag>(n);
  std::vector<Rational> out(basis.size());
  auto accumulate = [&out](const Rational &k, const KapranovClassM &image) {
    if (k.is_zero()) return;
    for (std::size_t r = 0; r < out.size(); ++r)
      if (image.coords()[r] != 0) out[r] += k * image.coords()[r];
  };
  // ψ_n ↦ ψ_{τ(n)}.
  const int moved = tau(n);
  accumulate(c.coords[0], moved == n ? KapranovClassM::hyperplane(n) : psi_class(n, moved));
  // E_J = Δ_{J∪{n}} ↦ Δ_{τ(J∪{n})}.
  for (std::size_t idx = 1; idx < basis.size(); ++idx)
    accumulate(c.coords[idx], class_of_boundary(BoundaryIndex(n, tau(basis.label_at(idx).with(n)))));
  return PicClassVector{n, std::move(out)};
}

}  // namespace

PicClassVector apply_permutation(const Permutation &sigma, const PicClassVector &c) {
  if (sigma.n() != c.n) throw std::invalid_argument("permutation degree does not match n");
  if (c.coords.size() != kapranov_basis<ModuliTag>(c.n).size())
    throw std::invalid_argument("class vector has the wrong length");
  const auto factors = sigma.transpositions();
  PicClassVector v = c;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) v = apply_transposition((*it)[0], (*it)[1], v);
  return v;
}

KapranovClassM apply_permutation(const Permutation &sigma, const KapranovClassM &c) {
  return apply_permutation(sigma, PicClassVector::from(c)).to_integral();
}

KeelVermeirePairing KeelVermeirePairing::canonical() const {
  KeelVermeirePairing p = *this;
  std::sort(p.first.begin(), p.first.end());
  std::sort(p.second.begin(), p.second.end());
  if (p.second < p.first) std::swap(p.first, p.second);
  return p;
}

KapranovClassM keel_vermeire_class(const KeelVermeirePairing &pairing, int n) {
  if (n != 6)
    throw std::invalid_argument("Keel-Vermeire coordinates are only available for n = 6");
  const KeelVermeirePairing p = pairing.canonical();
  LabelSet used;
  for (int x : {p.first[0], p.first[1], p.second[0], p.second[1]}) {
    if (x < 1 || x > 5 || used.contains(x))
      throw std::invalid_argument("pairing needs four distinct labels in {1..5}");
    used = used.with(x);
  }
  KapranovClassM c = 2 * KapranovClassM::hyperplane(n);
  for (int i = 1; i <= 5; ++i) c.add_e(LabelSet{i}, -1);
  for (int x : p.first)
    for (int y : p.second) c.add_e(LabelSet{x, y}, -1);
  return c;
}

std::vector<KeelVermeirePairing> keel_vermeire_pairings() {
  std::vector<KeelVermeirePairing> out;
  for (int omit = 5; omit >= 1; --omit) {
    std::vector<int> q;
    for (int i = 1; i <= 5; ++i)
      if (i != omit) q.push_back(i);
    out.push_back(KeelVermeirePairing{{q[0], q[1]}, {q[2], q[3]}}.canonical());
    out.push_back(KeelVermeirePairing{{q[0], q[2]}, {q[1], q[3]}}.canonical());
    out.push_back(KeelVermeirePairing{{q[0], q[3]}, {q[1], q[2]}}.canonical());
  }
  return out;
}

std::int64_t line_pairing(const KapranovClassM &c) { return c.h(); }

}  // namespace m0n
