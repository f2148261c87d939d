#include "koszul/kappa.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

void require_size(const Permutation& sigma, std::size_t n) {
  if (sigma.size() != n) {
    throw DimensionError("permutation of S_" + std::to_string(sigma.size()) +
                         " paired with a sequence of length " + std::to_string(n));
  }
}

/// 0-based swap positions j (swapping j, j+1) that bubble-sort the one-line
/// form of sigma, in the order they are performed.
std::vector<std::size_t> bubble_swaps(const Permutation& sigma) {
  std::vector<std::size_t> a = sigma.images();
  std::vector<std::size_t> swaps;
  for (std::size_t pass = a.size(); pass > 1; --pass) {
    for (std::size_t j = 0; j + 1 < pass; ++j) {
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        swaps.push_back(j);
      }
    }
  }
  return swaps;
}

} // namespace

Word decompose_adjacent(const Permutation& sigma) {
  // Sorting performs sigma * s_{j1} * ... * s_{jm} = e, hence
  // sigma = s_{jm} ... s_{j1}: the last swap is the leftmost letter.
  const auto swaps = bubble_swaps(sigma);
  std::vector<Generator> letters;
  letters.reserve(swaps.size());
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
    letters.push_back({*it + 1, 1});
  }
  return Word(sigma.size(), std::move(letters));
}

Sign kappa(const Permutation& sigma, std::span<const Degree> degrees) {
  require_size(sigma, degrees.size());
  return kappa_word(decompose_adjacent(sigma), degrees);
}

Sign kappa(const Permutation& sigma, const GradedSequence& g) {
  const auto degrees = g.degrees();
  return kappa(sigma, std::span<const Degree>(degrees));
}

unsigned kappa_exponent(const Permutation& sigma, std::span<const Degree> degrees) {
  require_size(sigma, degrees.size());
  unsigned z = 0;
  for (const auto& [i, j] : sigma.inversions()) {
    z ^= product_parity(degrees[i], degrees[j]);
  }
  return z;
}

unsigned kappa_exponent(const Permutation& sigma, const GradedSequence& g) {
  const auto degrees = g.degrees();
  return kappa_exponent(sigma, std::span<const Degree>(degrees));
}

std::vector<std::pair<std::size_t, std::size_t>> kappa_monomials(const Permutation& sigma) {
  const Word word = decompose_adjacent(sigma);
  // symbol[k] = original position (in g) of the symbol now at position k.
  std::vector<std::size_t> symbol(sigma.size());
  for (std::size_t k = 0; k < symbol.size(); ++k) {
    symbol[k] = k;
  }
  std::map<std::pair<std::size_t, std::size_t>, unsigned> count;
  const auto& letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const std::size_t i = it->index - 1;
    const auto term = std::minmax(symbol[i], symbol[i + 1]);
    ++count[{term.first, term.second}];
    std::swap(symbol[i], symbol[i + 1]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [term, c] : count) {
    if (c % 2 == 1) {
      out.push_back(term);
    }
  }
  return out;
}

} // namespace koszul
