#pragma once

// Divisor classes written in a Kapranov basis: one hyperplane coordinate
// followed by one coordinate per exceptional label, labels ordered by size
// and then lexicographically.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "m0n/subset.hpp"

namespace m0n {

class KapranovBasis {
public:
  /// Exceptional labels are the subsets J of `ground` with 1 <= |J| <= max_size.
  KapranovBasis(LabelSet ground, int max_size);

  std::size_t size() const { return 1 + labels_.size(); }
  LabelSet ground() const { return ground_; }
  int max_size() const { return max_size_; }

  bool has_exceptional(LabelSet j) const { return index_.contains(j.bits()); }
  /// Coordinate index of E_J (index 0 is the hyperplane class).
  std::size_t index_of(LabelSet j) const;
  /// Label of coordinate `idx` >= 1.
  LabelSet label_at(std::size_t idx) const { return labels_.at(idx - 1); }
  const std::vector<LabelSet> &exceptional_labels() const { return labels_; }

private:
  LabelSet ground_;
  int max_size_;
  std::vector<LabelSet> labels_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

struct LosevManinTag {
  /// Exceptional labels J ⊆ {1, ..., n-2}, 1 <= |J| <= n-4.
  static KapranovBasis basis(int n) { return KapranovBasis(LabelSet::range(n - 2), n - 4); }
};

struct ModuliTag {
  /// Exceptional labels J ⊆ {1, ..., n-1}, 1 <= |J| <= n-4.
  static KapranovBasis basis(int n) { return KapranovBasis(LabelSet::range(n - 1), n - 4); }
};

/// Cached basis for (Tag, n); safe to call concurrently.
template <class Tag>
const KapranovBasis &kapranov_basis(int n);

template <class Tag>
class KapranovClass {
public:
  KapranovClass() = default;
  explicit KapranovClass(int n) : n_(n), coords_(kapranov_basis<Tag>(n).size(), 0) {}
  KapranovClass(int n, std::vector<std::int64_t> coords) : n_(n), coords_(std::move(coords)) {
    if (coords_.size() != kapranov_basis<Tag>(n).size())
      throw std::invalid_argument("coordinate vector has the wrong length");
  }

  /// The hyperplane class H.
  static KapranovClass hyperplane(int n) {
    KapranovClass c(n);
    c.coords_[0] = 1;
    return c;
  }
  /// The exceptional class E_J.
  static KapranovClass exceptional(int n, LabelSet j) {
    KapranovClass c(n);
    c.coords_[c.basis().index_of(j)] = 1;
    return c;
  }

  int n() const { return n_; }
  const KapranovBasis &basis() const { return kapranov_basis<Tag>(n_); }
  const std::vector<std::int64_t> &coords() const { return coords_; }

  std::int64_t h() const { return coords_[0]; }
  std::int64_t e(LabelSet j) const { return coords_[basis().index_of(j)]; }
  void set_h(std::int64_t v) { coords_[0] = v; }
  void set_e(LabelSet j, std::int64_t v) { coords_[basis().index_of(j)] = v; }
  void add_e(LabelSet j, std::int64_t v) { coords_[basis().index_of(j)] += v; }

  bool is_zero() const {
    for (auto x : coords_)
      if (x != 0) return false;
    return true;
  }

  KapranovClass &operator+=(const KapranovClass &o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  KapranovClass &operator-=(const KapranovClass &o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend KapranovClass operator+(KapranovClass a, const KapranovClass &b) { return a += b; }
  friend KapranovClass operator-(KapranovClass a, const KapranovClass &b) { return a -= b; }
  friend KapranovClass operator*(std::int64_t k, KapranovClass a) {
    for (auto &x : a.coords_) x *= k;
    return a;
  }
  friend KapranovClass operator-(KapranovClass a) { return -1 * std::move(a); }

  friend bool operator==(const KapranovClass &, const KapranovClass &) = default;

  /// Human-readable form such as "H - E{1} - E{1,2}"; used in diagnostics.
  std::string str() const;

private:
  void check_same(const KapranovClass &o) const {
    if (o.n_ != n_) throw std::invalid_argument("classes live on different spaces");
  }

  int n_ = 0;
  std::vector<std::int64_t> coords_;
};

using KapranovClassL = KapranovClass<LosevManinTag>;
using KapranovClassM = KapranovClass<ModuliTag>;

extern template class KapranovClass<LosevManinTag>;
extern template class KapranovClass<ModuliTag>;
extern template const KapranovBasis &kapranov_basis<LosevManinTag>(int);
extern template const KapranovBasis &kapranov_basis<ModuliTag>(int);

}  // namespace m0n
