#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "koszul/graded_sequence.hpp"
#include "koszul/permutation.hpp"
#include "koszul/sign.hpp"

namespace koszul {

/// A letter of F_{n-1}: s_index or its inverse. `index` is 1-based.
struct Generator {
  std::size_t index = 1;
  int exponent = 1; // +1 or -1

  Generator inverse() const noexcept { return {index, -exponent}; }
  bool is_inverse_of(const Generator& other) const noexcept {
    return index == other.index && exponent == -other.exponent;
  }

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A word in the free group on the adjacent transpositions s_1, ..., s_{n-1}.
///
/// The word t_1 t_2 ... t_m denotes the product whose rightmost letter acts
/// first; its projection to S_n is t_1 * t_2 * ... * t_m.
class Word {
public:
  explicit Word(std::size_t ambient_n);
  Word(std::size_t ambient_n, std::vector<Generator> letters);

  std::size_t ambient_n() const noexcept { return ambient_n_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Generator>& letters() const noexcept { return letters_; }

  /// No adjacent mutually inverse letters.
  bool is_reduced() const noexcept;

  Word inverse() const;

  /// Concatenation xy.
  Word operator*(const Word& rhs) const;

  friend bool operator==(const Word&, const Word&) = default;

private:
  std::size_t ambient_n_;
  std::vector<Generator> letters_;
};

/// Free reduction: cancels s_i s_i^{-1} and s_i^{-1} s_i only. s_i s_i is
/// left alone.
Word reduce(const Word& word);

/// The quotient map F_{n-1} -> S_n.
Permutation project(const Word& word);

/// The word-level sign map. Letters are evaluated right to left, each
/// contributing (-1)^{|h_i||h_{i+1}|} on the current partially acted
/// sequence h. Works on any word, reduced or not.
Sign kappa_word(const Word& word, const GradedSequence& g);
Sign kappa_word(const Word& word, std::span<const Degree> degrees);

/// Every defining relation of S_n written as a word r with r = e:
/// s_i^2, s_i s_j s_i^{-1} s_j^{-1} for i < j - 1, and
/// s_i s_{i+1} s_i s_{i+1}^{-1} s_i^{-1} s_{i+1}^{-1}.
std::vector<Word> relators(std::size_t n);

/// Uniform random letters, length uniform in [0, max_length].
Word random_word(std::size_t n, std::size_t max_length, std::mt19937_64& rng);

} // namespace koszul
