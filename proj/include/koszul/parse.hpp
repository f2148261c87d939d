#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "koszul/permutation.hpp"
#include "koszul/sign.hpp"
#include "koszul/word.hpp"

// Text forms. All indices in text are 1-based.
//
//   degrees      "1,2,-3"          comma-separated integers, n >= 2
//   one-line     "[2,5,3,1,4]"     sigma(i) = a_i
//   cycles       "(1 2 4)(3 5)"    rightmost cycle applied first; "()" = e
//   word         "s1 s2^-1 s3'"    s<k>, s<k>^-1 or s<k>'; "e" = empty word
//
// Parsers throw ParseError carrying the offending column.

namespace koszul {

std::vector<Degree> parse_degrees(std::string_view text);

/// One-line or cycle notation. When `n` is 0 a one-line form defines its own
/// size; cycle notation always needs `n`.
Permutation parse_perm(std::string_view text, std::size_t n);

Word parse_word(std::string_view text, std::size_t n);

std::string format_degrees(const std::vector<Degree>& degrees);
std::string format_one_line(const Permutation& sigma);
std::string format_cycles(const Permutation& sigma);
std::string format_word(const Word& word);

} // namespace koszul
