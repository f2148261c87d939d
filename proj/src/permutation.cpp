#include "koszul/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

void require_bijection(const std::vector<std::size_t>& images) {
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const std::size_t v = images[i];
    if (v >= images.size()) {
      throw DomainError("permutation image " + std::to_string(v + 1) +
                        " out of range 1.." + std::to_string(images.size()));
    }
    if (seen[v]) {
      throw DomainError("permutation image " + std::to_string(v + 1) +
                        " appears twice");
    }
    seen[v] = true;
  }
}

} // namespace

Permutation::Permutation(std::size_t n) : images_(n) {
  std::iota(images_.begin(), images_.end(), std::size_t{0});
}

Permutation::Permutation(std::vector<std::size_t> images)
    : images_(std::move(images)) {
  require_bijection(images_);
}

Permutation Permutation::from_one_based(std::span<const std::size_t> images) {
  std::vector<std::size_t> zero_based;
  zero_based.reserve(images.size());
  for (std::size_t v : images) {
    if (v == 0) {
      throw DomainError("permutation images are 1-based; got 0");
    }
    zero_based.push_back(v - 1);
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::adjacent(std::size_t n, std::size_t i) {
  if (i < 1 || i >= n) {
    throw DomainError("adjacent transposition s_" + std::to_string(i) +
                      " undefined in S_" + std::to_string(n));
  }
  Permutation s(n);
  std::swap(s.images_[i - 1], s.images_[i]);
  return s;
}

std::vector<std::size_t> Permutation::one_based() const {
  std::vector<std::size_t> out(images_);
  for (auto& v : out) {
    ++v;
  }
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv.images_[images_[i]] = i;
  }
  return inv;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.size() != size()) {
    throw DimensionError("cannot compose permutations of sizes " +
                         std::to_string(size()) + " and " +
                         std::to_string(rhs.size()));
  }
  Permutation out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out.images_[i] = images_[rhs.images_[i]];
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Permutation::inversions() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (images_[i] > images_[j]) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

std::size_t Permutation::inversion_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      count += images_[i] > images_[j] ? 1 : 0;
    }
  }
  return count;
}

Sign Permutation::signature() const {
  return Sign::from_parity(static_cast<unsigned>(inversion_count() & 1U));
}

std::uint64_t Permutation::lex_rank() const {
  const std::size_t n = size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller_after = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      smaller_after += images_[j] < images_[i] ? 1 : 0;
    }
    rank = rank * (n - i) + smaller_after;
  }
  return rank;
}

Permutation Permutation::from_lex_rank(std::size_t n, std::uint64_t rank) {
  if (rank >= factorial(n)) {
    throw DomainError("rank " + std::to_string(rank) + " out of range for S_" +
                      std::to_string(n));
  }
  // Factorial-base digits, most significant first.
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    digits[n - k] = static_cast<std::size_t>(rank % k);
    rank /= k;
  }
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::vector<std::size_t> images;
  images.reserve(n);
  for (std::size_t d : digits) {
    images.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return Permutation(std::move(images));
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> visited(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (visited[start] || images_[start] == start) {
      continue;
    }
    std::vector<std::size_t> cycle;
    for (std::size_t p = start; !visited[p]; p = images_[p]) {
      visited[p] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::uint64_t factorial(std::size_t n) {
  if (n > 20) {
    throw ResourceError(std::to_string(n) + "! does not fit in 64 bits");
  }
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    f *= k;
  }
  return f;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial(n)));
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

} // namespace koszul
