#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace onebit {

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t z);

// Seed of the index-th derived stream of a master seed:
//   mix64(master ^ mix64(index + 0x9e3779b97f4a7c15)).
// Fixed across versions; documented in the README.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Deterministic random source. mt19937_64 output is pinned by the standard,
// and the mappings below avoid std distribution objects, so identical seeds
// produce identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, bound), unbiased via rejection. bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  bool bernoulli_one_in(std::uint64_t q) { return below(q) == 0; }

  // Uniform on the open interval (0,1), 53-bit grid.
  double unit_open();

  // Standard normal via Box-Muller on unit_open() draws.
  double normal();

 private:
  std::mt19937_64 eng_;
  std::optional<double> spare_;
};

}  // namespace onebit
