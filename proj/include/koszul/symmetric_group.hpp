#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "koszul/permutation.hpp"

namespace koszul {

/// Default cap on n for exhaustive sweeps and dense tables (|S_6| = 720).
inline constexpr std::size_t kExhaustiveBound = 6;

/// S_n with its elements indexed by lexicographic rank and a precomputed
/// multiplication table. Immutable; shared instances are cached per n.
class SymmetricGroup {
public:
  using Rank = std::uint32_t;

  /// Throws ResourceError when n > bound, DomainError when n < 1.
  explicit SymmetricGroup(std::size_t n, std::size_t bound = kExhaustiveBound);

  /// Cached instance for n <= kExhaustiveBound.
  static std::shared_ptr<const SymmetricGroup> get(std::size_t n);

  std::size_t degree() const noexcept { return n_; }
  std::size_t order() const noexcept { return elements_.size(); }

  const Permutation& element(Rank r) const { return elements_[r]; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  Rank rank(const Permutation& p) const;
  Rank identity() const noexcept { return 0; }

  /// rank(element(a) * element(b))
  Rank product(Rank a, Rank b) const { return product_[static_cast<std::size_t>(a) * order() + b]; }
  Rank inverse(Rank a) const { return inverse_[a]; }

private:
  std::size_t n_;
  std::vector<Permutation> elements_;
  std::vector<Rank> product_;
  std::vector<Rank> inverse_;
};

} // namespace koszul
