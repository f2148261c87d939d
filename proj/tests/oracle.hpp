#pragma once

// Test-only oracle for the sign map, independent of the library's word
// evaluation and of the inversion-sum closed form. It builds kappa(-, g)
// over S_n by breadth-first search of the Cayley graph using only
//   kappa(e, g) = 1,
//   kappa(s_i x, g) = kappa(s_i, x(g)) kappa(x, g),
//   kappa(s_i, h) = (-1)^{|h_i||h_{i+1}|},
// and asserts consistency whenever a permutation is reached twice.

#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

namespace oracle {

using OneLine = std::vector<int>; // 1-based images

inline OneLine compose(const OneLine& a, const OneLine& b) {
  OneLine out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[static_cast<std::size_t>(b[i] - 1)];
  }
  return out;
}

inline std::vector<std::int64_t> act(const OneLine& s, const std::vector<std::int64_t>& g) {
  std::vector<std::int64_t> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out[static_cast<std::size_t>(s[i] - 1)] = g[i];
  }
  return out;
}

/// Map from one-line form to kappa(sigma, g) in {+1, -1}.
inline std::map<OneLine, int> kappa_table(const std::vector<std::int64_t>& degrees) {
  const std::size_t n = degrees.size();
  OneLine e(n);
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = static_cast<int>(i + 1);
  }
  std::map<OneLine, int> table{{e, 1}};
  std::deque<OneLine> queue{e};
  while (!queue.empty()) {
    const OneLine x = queue.front();
    queue.pop_front();
    const auto h = act(x, degrees);
    for (std::size_t i = 1; i < n; ++i) {
      OneLine s = e;
      std::swap(s[i - 1], s[i]);
      const OneLine y = compose(s, x);
      const bool odd = ((h[i - 1] & 1) != 0) && ((h[i] & 1) != 0);
      const int value = (odd ? -1 : 1) * table.at(x);
      const auto [it, inserted] = table.emplace(y, value);
      if (!inserted && it->second != value) {
        throw std::logic_error("oracle: inconsistent kappa, cocycle rule violated");
      }
      if (inserted) {
        queue.push_back(y);
      }
    }
  }
  return table;
}

} // namespace oracle
