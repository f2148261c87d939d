#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "koszul/graded_sequence.hpp"
#include "koszul/permutation.hpp"
#include "koszul/sign.hpp"
#include "koszul/word.hpp"

namespace koszul {

/// Bubble-sort decomposition of sigma into adjacent transpositions.
///
/// The returned word multiplies (rightmost letter first) to sigma and its
/// length is the inversion count, so it is a minimal-length word.
Word decompose_adjacent(const Permutation& sigma);

/// The Koszul sign map kappa(sigma, g), evaluated by the cocycle rule
/// kappa(xy, g) = kappa(x, y(g)) kappa(y, g) along decompose_adjacent(sigma).
Sign kappa(const Permutation& sigma, const GradedSequence& g);
Sign kappa(const Permutation& sigma, std::span<const Degree> degrees);

/// Z mod 2 where Z = sum of |g_i||g_j| over the inversion pairs of sigma.
/// Closed form independent of the word evaluation; kappa == (-1)^Z.
unsigned kappa_exponent(const Permutation& sigma, const GradedSequence& g);
unsigned kappa_exponent(const Permutation& sigma, std::span<const Degree> degrees);

/// The symbolic exponent of kappa(sigma, g) as a sum of monomials
/// |g_a||g_b|, collected while walking the bubble-sort word: each letter
/// exchanges two symbols of g and contributes their degree product.
/// Monomials are returned as 0-based position pairs (a < b) in g, sorted;
/// terms occurring an even number of times cancel.
std::vector<std::pair<std::size_t, std::size_t>> kappa_monomials(const Permutation& sigma);

} // namespace koszul
