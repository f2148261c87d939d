#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "koszul/permutation.hpp"
#include "koszul/sign.hpp"

namespace koszul {

/// A symbol: an opaque label carrying a degree. Labels never affect signs.
struct Symbol {
  std::string label;
  Degree degree;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// An ordered sequence of n >= 2 graded symbols with pairwise distinct
/// labels; an element g of E_f once a base sequence f is fixed.
class GradedSequence {
public:
  /// Labels default to f1, ..., fn.
  explicit GradedSequence(const std::vector<Degree>& degrees);
  GradedSequence(const std::vector<std::string>& labels,
                 const std::vector<Degree>& degrees);
  explicit GradedSequence(std::vector<Symbol> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const Symbol& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Symbol>& entries() const noexcept { return entries_; }

  std::vector<Degree> degrees() const;
  std::vector<std::string> labels() const;

  friend bool operator==(const GradedSequence&, const GradedSequence&) = default;

private:
  std::vector<Symbol> entries_;
};

/// Default label of the symbol at 1-based position `position`.
std::string default_label(std::size_t position);

/// The left action sigma(g)_i = g_{sigma^{-1}(i)}. Symbol i of g moves to
/// position sigma(i), so act(a * b, g) == act(a, act(b, g)).
GradedSequence act(const Permutation& sigma, const GradedSequence& g);

/// Same action on a bare degree vector.
std::vector<Degree> act(const Permutation& sigma, const std::vector<Degree>& degrees);

} // namespace koszul
