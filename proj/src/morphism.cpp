#include "koszul/morphism.hpp"

#include <string>

#include "koszul/errors.hpp"
#include "koszul/kappa.hpp"

namespace koszul {

namespace {

std::size_t count_odd(const std::vector<Degree>& degrees) {
  if (degrees.size() < 2) {
    throw DomainError("morphism criteria need n >= 2, got " +
                      std::to_string(degrees.size()));
  }
  std::size_t odd = 0;
  for (auto d : degrees) {
    odd += d.parity();
  }
  return odd;
}

} // namespace

bool is_morphism(const std::vector<Degree>& degrees) {
  const std::size_t odd = count_odd(degrees);
  return odd == 0 || odd == degrees.size() || odd == 1;
}

bool is_constant_one(const std::vector<Degree>& degrees) {
  return count_odd(degrees) <= 1;
}

bool morphism_bruteforce(const std::vector<Degree>& degrees, std::size_t bound) {
  count_odd(degrees);
  if (degrees.size() > bound) {
    throw ResourceError("exhaustive morphism check limited to n <= " +
                        std::to_string(bound) + ", got n = " +
                        std::to_string(degrees.size()));
  }
  const SymmetricGroup group(degrees.size(), bound);
  std::vector<Sign> value(group.order());
  for (std::size_t r = 0; r < group.order(); ++r) {
    value[r] = kappa(group.element(static_cast<SymmetricGroup::Rank>(r)), degrees);
  }
  for (SymmetricGroup::Rank s = 0; s < group.order(); ++s) {
    for (SymmetricGroup::Rank t = 0; t < group.order(); ++t) {
      if (value[group.product(s, t)] != value[s] * value[t]) {
        return false;
      }
    }
  }
  return true;
}

} // namespace koszul
