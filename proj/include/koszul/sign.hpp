#pragma once

#include <cstdint>
#include <ostream>

namespace koszul {

/// An element of the multiplicative group {+1, -1}.
class Sign {
public:
  constexpr Sign() noexcept = default;

  static constexpr Sign plus() noexcept { return Sign(false); }
  static constexpr Sign minus() noexcept { return Sign(true); }

  /// (-1)^parity; only the low bit of `parity` is used.
  static constexpr Sign from_parity(unsigned parity) noexcept {
    return Sign((parity & 1U) != 0);
  }

  static constexpr Sign from_int(int value) noexcept { return Sign(value < 0); }

  constexpr bool is_negative() const noexcept { return negative_; }
  constexpr int value() const noexcept { return negative_ ? -1 : 1; }
  constexpr unsigned parity() const noexcept { return negative_ ? 1U : 0U; }

  /// Every element is an involution.
  constexpr Sign inverse() const noexcept { return *this; }

  constexpr Sign operator*(Sign other) const noexcept {
    return Sign(negative_ != other.negative_);
  }
  constexpr Sign& operator*=(Sign other) noexcept {
    negative_ = negative_ != other.negative_;
    return *this;
  }
  constexpr Sign operator-() const noexcept { return Sign(!negative_); }

  friend constexpr bool operator==(Sign, Sign) noexcept = default;

private:
  constexpr explicit Sign(bool negative) noexcept : negative_(negative) {}

  bool negative_ = false;
};

inline std::ostream& operator<<(std::ostream& os, Sign s) {
  return os << (s.is_negative() ? "-1" : "+1");
}

/// A homological degree in Z. Only its parity ever enters a sign.
struct Degree {
  std::int64_t value = 0;

  constexpr Degree() noexcept = default;
  constexpr Degree(std::int64_t v) noexcept : value(v) {} // NOLINT(google-explicit-constructor)

  /// value mod 2 with the mathematical modulus, so -3 is odd.
  constexpr unsigned parity() const noexcept {
    return static_cast<unsigned>(value & 1);
  }
  constexpr bool is_odd() const noexcept { return parity() == 1U; }

  friend constexpr bool operator==(Degree, Degree) noexcept = default;
};

/// Parity of |a||b|.
constexpr unsigned product_parity(Degree a, Degree b) noexcept {
  return a.parity() & b.parity();
}

} // namespace koszul
