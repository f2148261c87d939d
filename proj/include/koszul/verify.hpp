#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszul/graded_sequence.hpp"
#include "koszul/permutation.hpp"
#include "koszul/sign.hpp"
#include "koszul/word.hpp"

namespace koszul {

/// Second oracle: kappa_word evaluated on a shortest word for sigma found
/// by breadth-first search of the Cayley graph of S_n. n <= 5.
Sign kappa_bruteforce_minword(const Permutation& sigma, const GradedSequence& g);

/// Shortest generator word for sigma by BFS; ties broken by generator index.
Word shortest_word(const Permutation& sigma);

inline constexpr std::size_t kMinwordBound = 5;

struct CheckResult {
  std::string name;
  std::string population;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::optional<std::string> first_counterexample;

  bool ok() const noexcept { return failed == 0; }
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  std::size_t n_min = 2;
  std::size_t n_max = 2;

  bool ok() const noexcept;
  std::string to_text() const;
  std::string to_json() const;
};

/// Runs every identity of the sign map, its word-level form and the
/// cohomology objects for n = 2..n_max.
///
/// S_n is swept exhaustively for n <= 5; n = 6 uses `degree_samples` random
/// elements per check. Degree vectors cover every parity pattern in {0,1}^n
/// (lifted to random integers in [-50, 50]) plus `degree_samples` random
/// vectors. Deterministic for a given seed. Throws ResourceError for
/// n_max > 6 and DomainError for n_max < 2.
SuiteReport run_suite(std::size_t n_max, std::size_t degree_samples, std::uint64_t seed);

} // namespace koszul
