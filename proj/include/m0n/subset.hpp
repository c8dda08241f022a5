#pragma once

// Small sets of marked-point labels {1, ..., n} packed into a bitmask.
// Label i occupies bit i-1; n never exceeds 31 in this library.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace m0n {

class LabelSet {
public:
  constexpr LabelSet() = default;
  constexpr explicit LabelSet(std::uint32_t bits) : bits_(bits) {}
  constexpr LabelSet(std::initializer_list<int> labels) {
    for (int l : labels) bits_ |= bit(l);
  }

  static LabelSet from_members(const std::vector<int> &labels) {
    LabelSet s;
    for (int l : labels) s.bits_ |= bit(l);
    return s;
  }
  /// {1, ..., n}
  static constexpr LabelSet range(int n) {
    return LabelSet(n <= 0 ? 0u : (n >= 32 ? ~0u : ((1u << n) - 1u)));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int label) const { return (bits_ & bit(label)) != 0; }
  constexpr bool subset_of(LabelSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(LabelSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr int max_label() const { return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_); }
  constexpr int min_label() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  constexpr LabelSet with(int label) const { return LabelSet(bits_ | bit(label)); }
  constexpr LabelSet without(int label) const { return LabelSet(bits_ & ~bit(label)); }

  friend constexpr LabelSet operator|(LabelSet a, LabelSet b) { return LabelSet(a.bits_ | b.bits_); }
  friend constexpr LabelSet operator&(LabelSet a, LabelSet b) { return LabelSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr LabelSet operator-(LabelSet a, LabelSet b) { return LabelSet(a.bits_ & ~b.bits_); }

  /// Sorted member labels.
  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  /// Compact text such as "{1,2,5}".
  std::string str() const;

  friend constexpr bool operator==(LabelSet, LabelSet) = default;

  /// Size first, then lexicographic on the sorted member lists. This is the
  /// basis order used for Kapranov coordinates.
  friend constexpr std::strong_ordering operator<=>(LabelSet a, LabelSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return lex_compare(a, b);
  }

  /// Lexicographic comparison of the sorted member lists.
  static constexpr std::strong_ordering lex_compare(LabelSet a, LabelSet b) {
    std::uint32_t x = a.bits_, y = b.bits_;
    while (x != 0 && y != 0) {
      int i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i < j ? std::strong_ordering::less : std::strong_ordering::greater;
      x &= x - 1;
      y &= y - 1;
    }
    if (x == 0 && y == 0) return std::strong_ordering::equal;
    return x == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

private:
  static constexpr std::uint32_t bit(int label) { return 1u << (label - 1); }
  std::uint32_t bits_ = 0;
};

/// All subsets of `ground` with min_size <= |S| <= max_size, ordered by size
/// and then lexicographically.
std::vector<LabelSet> subsets_of(LabelSet ground, int min_size, int max_size);

/// All subsets of `ground` (including empty and full), in the same order.
inline std::vector<LabelSet> all_subsets_of(LabelSet ground) {
  return subsets_of(ground, 0, ground.size());
}

/// Binomial coefficient for small arguments.
constexpr std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace m0n
