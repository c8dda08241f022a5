#include "m0n/subset.hpp"

#include <algorithm>

namespace m0n {

std::string LabelSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int m : members()) {
    if (!first) s += ',';
    s += std::to_string(m);
    first = false;
  }
  return s + "}";
}

std::vector<LabelSet> subsets_of(LabelSet ground, int min_size, int max_size) {
  std::vector<LabelSet> out;
  const std::uint32_t g = ground.bits();
  // Enumerate submasks of g (including 0).
  std::uint32_t s = g;
  for (;;) {
    LabelSet candidate(s);
    if (candidate.size() >= min_size && candidate.size() <= max_size) out.push_back(candidate);
    if (s == 0) break;
    s = (s - 1) & g;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace m0n
