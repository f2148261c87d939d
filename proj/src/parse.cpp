#include "koszul/parse.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) {
      ++pos_;
    }
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  bool accept(char c) {
    if (peek() == c && !done()) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'" + found());
    }
  }

  /// Optionally signed decimal integer.
  std::int64_t integer(bool allow_sign) {
    const std::size_t start = pos_;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      ++pos_;
    }
    if (!is_digit(peek())) {
      pos_ = start;
      fail("expected an integer" + found());
    }
    while (is_digit(peek())) {
      ++pos_;
    }
    std::string_view token = text_.substr(start, pos_ - start);
    if (!token.empty() && token.front() == '+') {
      token.remove_prefix(1);
    }
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("integer out of range", start);
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  std::string found() const {
    if (done()) {
      return ", found end of input";
    }
    return std::string(", found '") + peek() + "'";
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t index_in_range(std::int64_t value, std::size_t n, std::size_t pos) {
  if (value < 1 || static_cast<std::uint64_t>(value) > n) {
    throw ParseError("index " + std::to_string(value) + " out of range 1.." +
                         std::to_string(n),
                     pos);
  }
  return static_cast<std::size_t>(value - 1);
}

Permutation parse_one_line(Cursor& in, std::size_t n) {
  const std::size_t open = in.pos();
  in.expect('[');
  std::vector<std::pair<std::int64_t, std::size_t>> values;
  in.skip_space();
  if (!in.accept(']')) {
    for (;;) {
      in.skip_space();
      const std::size_t at = in.pos();
      values.emplace_back(in.integer(false), at);
      in.skip_space();
      if (in.accept(']')) {
        break;
      }
      in.expect(',');
    }
  }
  const std::size_t size = n == 0 ? values.size() : n;
  if (values.size() != size) {
    throw ParseError("one-line form has " + std::to_string(values.size()) +
                         " entries, expected " + std::to_string(size),
                     open);
  }
  std::vector<std::size_t> images;
  std::vector<bool> seen(size, false);
  for (const auto& [v, at] : values) {
    const std::size_t image = index_in_range(v, size, at);
    if (seen[image]) {
      throw ParseError("image " + std::to_string(v) + " repeated; not a bijection", at);
    }
    seen[image] = true;
    images.push_back(image);
  }
  return Permutation(std::move(images));
}

Permutation parse_cycles(Cursor& in, std::size_t n) {
  if (n == 0) {
    in.fail("cycle notation needs a known n");
  }
  Permutation product(n);
  std::vector<Permutation> factors;
  while (!in.done()) {
    in.expect('(');
    std::vector<std::size_t> cycle;
    std::vector<bool> seen(n, false);
    in.skip_space();
    while (!in.accept(')')) {
      const std::size_t at = in.pos();
      const std::size_t point = index_in_range(in.integer(false), n, at);
      if (seen[point]) {
        throw ParseError("point " + std::to_string(point + 1) + " repeated in cycle", at);
      }
      seen[point] = true;
      cycle.push_back(point);
      in.skip_space();
      if (in.accept(',')) {
        in.skip_space();
      } else if (in.peek() != ')' && !is_digit(in.peek())) {
        in.fail("expected an index or ')'" + in.found());
      }
    }
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = i;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    factors.emplace_back(std::move(images));
    in.skip_space();
  }
  if (factors.empty()) {
    in.fail("empty permutation");
  }
  for (const auto& c : factors) {
    product = product * c;
  }
  return product;
}

} // namespace

std::vector<Degree> parse_degrees(std::string_view text) {
  Cursor in(text);
  std::vector<Degree> out;
  in.skip_space();
  if (in.done()) {
    in.fail("empty degree list");
  }
  for (;;) {
    in.skip_space();
    out.emplace_back(in.integer(true));
    in.skip_space();
    if (in.done()) {
      break;
    }
    in.expect(',');
  }
  if (out.size() < 2) {
    throw ParseError("need at least 2 degrees, got " + std::to_string(out.size()), 0);
  }
  return out;
}

Permutation parse_perm(std::string_view text, std::size_t n) {
  Cursor in(text);
  in.skip_space();
  Permutation result = [&] {
    if (in.peek() == '[') {
      return parse_one_line(in, n);
    }
    if (in.peek() == '(') {
      return parse_cycles(in, n);
    }
    in.fail("expected '[' (one-line) or '(' (cycles)" + in.found());
  }();
  in.skip_space();
  if (!in.done()) {
    in.fail("trailing input" + in.found());
  }
  return result;
}

Word parse_word(std::string_view text, std::size_t n) {
  if (n < 2) {
    throw ParseError("words need n >= 2", 0);
  }
  Cursor in(text);
  std::vector<Generator> letters;
  in.skip_space();
  if (in.accept('e')) {
    in.skip_space();
    if (!in.done()) {
      in.fail("'e' denotes the empty word and must stand alone");
    }
    return Word(n);
  }
  while (!in.done()) {
    in.expect('s');
    const std::size_t at = in.pos();
    const std::int64_t k = in.integer(false);
    if (k < 1 || static_cast<std::uint64_t>(k) >= n) {
      throw ParseError("generator s" + std::to_string(k) + " out of range s1..s" +
                           std::to_string(n - 1),
                       at);
    }
    int exponent = 1;
    if (in.accept('\'')) {
      exponent = -1;
    } else if (in.accept('^')) {
      in.expect('-');
      in.expect('1');
      exponent = -1;
    }
    if (!in.done() && !is_space(in.peek())) {
      in.fail("expected whitespace between generators" + in.found());
    }
    letters.push_back({static_cast<std::size_t>(k), exponent});
    in.skip_space();
  }
  return Word(n, std::move(letters));
}

std::string format_degrees(const std::vector<Degree>& degrees) {
  std::string out;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(degrees[i].value);
  }
  return out;
}

std::string format_one_line(const Permutation& sigma) {
  std::string out = "[";
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(sigma[i] + 1);
  }
  return out + "]";
}

std::string format_cycles(const Permutation& sigma) {
  const auto cycles = sigma.cycles();
  if (cycles.empty()) {
    return "()";
  }
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) {
        out += ' ';
      }
      out += std::to_string(cycle[k] + 1);
    }
    out += ')';
  }
  return out;
}

std::string format_word(const Word& word) {
  if (word.empty()) {
    return "e";
  }
  std::string out;
  for (const auto& t : word.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += 's' + std::to_string(t.index);
    if (t.exponent < 0) {
      out += "^-1";
    }
  }
  return out;
}

} // namespace koszul
