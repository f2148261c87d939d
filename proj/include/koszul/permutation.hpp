#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "koszul/sign.hpp"

namespace koszul {

/// An element of S_n in one-line form.
///
/// Storage is 0-based: `image(i)` is sigma(i+1)-1. Every user-facing text
/// form (see parse.hpp) is 1-based. Products follow function composition,
/// `(a * b)(i) = a(b(i))`, so `b` acts first.
class Permutation {
public:
  /// The identity of S_n.
  explicit Permutation(std::size_t n);

  /// From 0-based images; throws DomainError unless a bijection of {0..n-1}.
  explicit Permutation(std::vector<std::size_t> images);

  /// From 1-based images sigma(1), ..., sigma(n).
  static Permutation from_one_based(std::span<const std::size_t> images);

  /// The adjacent transposition s_i = (i, i+1), 1 <= i < n.
  static Permutation adjacent(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t image(std::size_t i) const { return images_[i]; }
  std::size_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  /// 1-based images, the form used in text.
  std::vector<std::size_t> one_based() const;

  bool is_identity() const noexcept;

  Permutation inverse() const;

  Permutation operator*(const Permutation& rhs) const;

  /// Pairs (i, j), i < j, with sigma(i) > sigma(j); 0-based, lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> inversions() const;
  std::size_t inversion_count() const;

  /// (-1)^{inversion count}.
  Sign signature() const;

  /// Rank of the one-line form among all of S_n in lexicographic order.
  std::uint64_t lex_rank() const;
  static Permutation from_lex_rank(std::size_t n, std::uint64_t rank);

  /// Disjoint cycles of length >= 2, each starting at its smallest point,
  /// ordered by that point. 0-based.
  std::vector<std::vector<std::size_t>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<std::size_t> images_;
};

/// n!; throws ResourceError if it does not fit in 64 bits.
std::uint64_t factorial(std::size_t n);

/// All of S_n in lexicographic order of the one-line form.
std::vector<Permutation> all_permutations(std::size_t n);

} // namespace koszul
