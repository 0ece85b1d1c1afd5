#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

namespace onebit {

inline std::vector<int> first_combination(int k) {
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  return c;
}

// Lexicographic successor of a k-subset of [0,n); false after the last one.
inline bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (a == 0 || b == 0) return 0;
  if (a > kMax / b) return kMax;
  return a * b;
}

inline std::uint64_t binomial_saturating(int n, int k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const auto num = static_cast<std::uint64_t>(n - k + i);
    if (r > kMax / num) return kMax;
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

}  // namespace onebit
