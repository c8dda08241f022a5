#include "m0n/kapranov.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace m0n {

KapranovBasis::KapranovBasis(LabelSet ground, int max_size)
    : ground_(ground), max_size_(max_size) {
  if (max_size >= 1) labels_ = subsets_of(ground, 1, max_size);
  for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i].bits(), i + 1);
}

std::size_t KapranovBasis::index_of(LabelSet j) const {
  auto it = index_.find(j.bits());
  if (it == index_.end()) throw std::out_of_range("no exceptional class E" + j.str());
  return it->second;
}

template <class Tag>
const KapranovBasis &kapranov_basis(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<KapranovBasis>> cache;
  std::lock_guard lock(mu);
  auto &slot = cache[n];
  if (!slot) slot = std::make_unique<KapranovBasis>(Tag::basis(n));
  return *slot;
}

template <class Tag>
std::string KapranovClass<Tag>::str() const {
  std::string s;
  auto term = [&s](std::int64_t c, const std::string &name) {
    if (c == 0) return;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a);
    s += name;
  };
  term(coords_[0], "H");
  const auto &b = basis();
  for (std::size_t i = 1; i < coords_.size(); ++i) term(coords_[i], "E" + b.label_at(i).str());
  return s.empty() ? "0" : s;
}

template class KapranovClass<LosevManinTag>;
template class KapranovClass<ModuliTag>;
template const KapranovBasis &kapranov_basis<LosevManinTag>(int);
template const KapranovBasis &kapranov_basis<ModuliTag>(int);

}  // namespace m0n
