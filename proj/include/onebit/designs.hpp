#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "onebit/rational.hpp"

namespace onebit {

enum class DesignProperty { list_disjunct, list_union_free };

// Which property a design was checked against, with its parameters.
struct DesignCheck {
  DesignProperty property = DesignProperty::list_disjunct;
  int k = 0;
  int l = 0;
  Rational alpha;  // meaningful for list_union_free only
  bool certified = false;
};

/// m x n binary matrix stored as per-column row-index sets B_j. Immutable
/// after construction apart from the attached check record.
class BinaryDesign {
 public:
  // column_supports[j] must be sorted, unique, and within [0, rows).
  BinaryDesign(int rows, int cols, std::vector<std::vector<int>> column_supports);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<int>& column(int j) const { return columns_[j]; }
  const std::vector<std::vector<int>>& columns() const { return columns_; }

  // d when every column has the same weight, otherwise nullopt.
  std::optional<int> uniform_weight() const;

  // Row-index view: supports[r] lists the columns with a 1 in row r.
  std::vector<std::vector<int>> row_supports() const;

  const std::optional<DesignCheck>& check() const { return check_; }
  void set_check(DesignCheck c) { check_ = std::move(c); }

  std::uint64_t seed = 0;  // construction seed; 0 for hand-built designs

 private:
  int rows_;
  int cols_;
  std::vector<std::vector<int>> columns_;
  std::optional<DesignCheck> check_;
};

struct DesignParams {
  int n = 0;
  int k = 0;
  int l = 1;
  Rational alpha{1, 2};
  std::optional<int> target_m;
  std::uint64_t seed = 0;

  void validate() const;  // k >= 1, l >= 1, k + l <= n, 0 < alpha < 1
};

inline constexpr std::uint64_t kDefaultPairCap = 100'000'000;
inline constexpr int kConstructionRetries = 64;

// Number of (S,T) pair-sets an exhaustive verification enumerates:
// C(n, k+l) * C(k+l, l), saturating at uint64 max.
std::uint64_t pair_enumeration_count(int n, int k, int l);

// A violating pair of disjoint column sets (0-based), |s_set| = l, |t_set| = k.
struct Violation {
  std::vector<int> s_set;
  std::vector<int> t_set;
};

// Exhaustive checks. Throw InstanceTooLarge past pair_cap;
// verify_list_union_free additionally requires uniform column weight.
std::optional<Violation> find_list_disjunct_violation(
    const BinaryDesign& design, int k, int l,
    std::uint64_t pair_cap = kDefaultPairCap);
bool verify_list_disjunct(const BinaryDesign& design, int k, int l,
                          std::uint64_t pair_cap = kDefaultPairCap);

std::optional<Violation> find_list_union_free_violation(
    const BinaryDesign& design, int k, int l, const Rational& alpha,
    std::uint64_t pair_cap = kDefaultPairCap);
bool verify_list_union_free(const BinaryDesign& design, int k, int l,
                            const Rational& alpha,
                            std::uint64_t pair_cap = kDefaultPairCap);

// Row-count budgets the constructions sample against (natural log, rounded up).
int list_disjunct_row_budget(int n, int k, int l);
int union_free_alphabet_size(int k, int l, const Rational& alpha);    // q
int union_free_block_budget(int n, int k, int l, const Rational& alpha);  // m'

// Randomized constructions. Certified results are found by sampling a row
// stream, taking the smallest certified prefix, then greedily pruning rows
// (blocks, for the union-free family) under exact re-verification; the final
// row count is capped at min(target_m, budget). When exhaustive verification
// would exceed pair_cap the sampled design is returned unverified. Throws
// ConstructionFailed after kConstructionRetries derived seeds.
BinaryDesign construct_list_disjunct(const DesignParams& params,
                                     std::uint64_t pair_cap = kDefaultPairCap);
BinaryDesign construct_list_union_free(const DesignParams& params,
                                       std::uint64_t pair_cap = kDefaultPairCap);

}  // namespace onebit
