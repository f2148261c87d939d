#include "koszul/symmetric_group.hpp"

#include <array>
#include <mutex>
#include <string>

#include "koszul/errors.hpp"

namespace koszul {

SymmetricGroup::SymmetricGroup(std::size_t n, std::size_t bound) : n_(n) {
  if (n < 1) {
    throw DomainError("S_n needs n >= 1");
  }
  if (n > bound) {
    throw ResourceError("S_" + std::to_string(n) +
                        " exceeds the exhaustive bound n <= " + std::to_string(bound));
  }
  elements_ = all_permutations(n);
  const std::size_t order = elements_.size();
  product_.resize(order * order);
  inverse_.resize(order);
  for (std::size_t a = 0; a < order; ++a) {
    inverse_[a] = static_cast<Rank>(elements_[a].inverse().lex_rank());
    for (std::size_t b = 0; b < order; ++b) {
      product_[a * order + b] =
          static_cast<Rank>((elements_[a] * elements_[b]).lex_rank());
    }
  }
}

std::shared_ptr<const SymmetricGroup> SymmetricGroup::get(std::size_t n) {
  static std::mutex mutex;
  static std::array<std::shared_ptr<const SymmetricGroup>, kExhaustiveBound + 1> cache;
  if (n < 1 || n > kExhaustiveBound) {
    return std::make_shared<const SymmetricGroup>(n); // throws
  }
  std::lock_guard lock(mutex);
  if (!cache[n]) {
    cache[n] = std::make_shared<const SymmetricGroup>(n);
  }
  return cache[n];
}

SymmetricGroup::Rank SymmetricGroup::rank(const Permutation& p) const {
  if (p.size() != n_) {
    throw DimensionError("permutation of S_" + std::to_string(p.size()) +
                         " is not an element of S_" + std::to_string(n_));
  }
  return static_cast<Rank>(p.lex_rank());
}

} // namespace koszul
