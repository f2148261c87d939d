#include "koszul/word.hpp"

#include <string>
#include <utility>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

void require_letters(std::size_t n, const std::vector<Generator>& letters) {
  for (const auto& t : letters) {
    if (t.index < 1 || t.index >= n) {
      throw DomainError("generator s_" + std::to_string(t.index) +
                        " undefined for n = " + std::to_string(n));
    }
    if (t.exponent != 1 && t.exponent != -1) {
      throw DomainError("generator exponent must be +1 or -1");
    }
  }
}

} // namespace

Word::Word(std::size_t ambient_n) : ambient_n_(ambient_n) {
  if (ambient_n < 2) {
    throw DomainError("words need n >= 2");
  }
}

Word::Word(std::size_t ambient_n, std::vector<Generator> letters)
    : Word(ambient_n) {
  require_letters(ambient_n, letters);
  letters_ = std::move(letters);
}

bool Word::is_reduced() const noexcept {
  for (std::size_t k = 1; k < letters_.size(); ++k) {
    if (letters_[k].is_inverse_of(letters_[k - 1])) {
      return false;
    }
  }
  return true;
}

Word Word::inverse() const {
  std::vector<Generator> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(ambient_n_, std::move(out));
}

Word Word::operator*(const Word& rhs) const {
  if (rhs.ambient_n_ != ambient_n_) {
    throw DimensionError("cannot concatenate words over F_" +
                         std::to_string(ambient_n_ - 1) + " and F_" +
                         std::to_string(rhs.ambient_n_ - 1));
  }
  std::vector<Generator> out(letters_);
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(ambient_n_, std::move(out));
}

Word reduce(const Word& word) {
  std::vector<Generator> stack;
  stack.reserve(word.length());
  for (const auto& t : word.letters()) {
    if (!stack.empty() && stack.back().is_inverse_of(t)) {
      stack.pop_back();
    } else {
      stack.push_back(t);
    }
  }
  return Word(word.ambient_n(), std::move(stack));
}

Permutation project(const Word& word) {
  // s_i = s_i^{-1} in S_n, so the exponent is irrelevant here.
  std::vector<std::size_t> images(word.ambient_n());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = i;
  }
  // images holds the running product t_k ... t_m; multiplying by t_{k-1}
  // on the left swaps the values i-1 and i.
  const auto& letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const std::size_t a = it->index - 1;
    const std::size_t b = it->index;
    for (auto& v : images) {
      if (v == a) {
        v = b;
      } else if (v == b) {
        v = a;
      }
    }
  }
  return Permutation(std::move(images));
}

Sign kappa_word(const Word& word, std::span<const Degree> degrees) {
  if (degrees.size() != word.ambient_n()) {
    throw DimensionError("word over S_" + std::to_string(word.ambient_n()) +
                         " evaluated on a sequence of length " +
                         std::to_string(degrees.size()));
  }
  std::vector<unsigned char> parity(degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    parity[i] = static_cast<unsigned char>(degrees[i].parity());
  }
  unsigned exponent = 0;
  const auto& letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const std::size_t i = it->index - 1;
    exponent ^= parity[i] & parity[i + 1];
    std::swap(parity[i], parity[i + 1]);
  }
  return Sign::from_parity(exponent);
}

Sign kappa_word(const Word& word, const GradedSequence& g) {
  const auto degrees = g.degrees();
  return kappa_word(word, std::span<const Degree>(degrees));
}

std::vector<Word> relators(std::size_t n) {
  if (n < 2) {
    throw DomainError("relators need n >= 2");
  }
  std::vector<Word> out;
  for (std::size_t i = 1; i < n; ++i) {
    out.emplace_back(n, std::vector<Generator>{{i, 1}, {i, 1}});
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      out.emplace_back(n, std::vector<Generator>{{i, 1}, {j, 1}, {i, -1}, {j, -1}});
    }
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out.emplace_back(n, std::vector<Generator>{
                            {i, 1}, {i + 1, 1}, {i, 1}, {i + 1, -1}, {i, -1}, {i + 1, -1}});
  }
  return out;
}

Word random_word(std::size_t n, std::size_t max_length, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> length_dist(0, max_length);
  std::uniform_int_distribution<std::size_t> index_dist(1, n - 1);
  std::bernoulli_distribution inverted(0.5);
  const std::size_t length = length_dist(rng);
  std::vector<Generator> letters;
  letters.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    letters.push_back({index_dist(rng), inverted(rng) ? -1 : 1});
  }
  return Word(n, std::move(letters));
}

} // namespace koszul
