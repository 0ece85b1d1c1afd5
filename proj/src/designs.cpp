#include "onebit/designs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "onebit/combinatorics.hpp"
#include "onebit/errors.hpp"
#include "onebit/rng.hpp"

namespace onebit {
namespace {

using Words = std::vector<std::uint64_t>;

int word_count(int rows) { return (rows + 63) / 64; }

std::vector<Words> column_masks(const std::vector<std::vector<int>>& columns,
                                int rows, const std::vector<char>* active) {
  const int w = word_count(rows);
  std::vector<Words> masks(columns.size(), Words(w, 0));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (int r : columns[j])
      if (r < rows && (!active || (*active)[r]))
        masks[j][r >> 6] |= 1ULL << (r & 63);
  return masks;
}

bool is_subset(const Words& a, const Words& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

long long and_popcount(const Words& a, const Words& b) {
  long long c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    c += std::popcount(a[i] & b[i]);
  return c;
}

void or_into(Words& acc, const Words& x) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] |= x[i];
}

// Enumerates every disjoint (S,T) with |S|=l, |T|=k as an (k+l)-set W split
// into S-positions; first violation in enumeration order, if any.
std::optional<Violation> scan_disjunct(const std::vector<Words>& masks, int n,
                                       int k, int l) {
  const int t = k + l;
  const std::size_t words = masks.empty() ? 0 : masks[0].size();
  auto w = first_combination(t);
  do {
    auto sp = first_combination(l);
    do {
      std::vector<char> in_s(t, 0);
      for (int p : sp) in_s[p] = 1;
      Words u(words, 0);
      for (int p = 0; p < t; ++p)
        if (!in_s[p]) or_into(u, masks[w[p]]);
      bool witnessed = false;
      for (int p : sp)
        if (!is_subset(masks[w[p]], u)) {
          witnessed = true;
          break;
        }
      if (!witnessed) {
        Violation v;
        for (int p : sp) v.s_set.push_back(w[p]);
        for (int p = 0; p < t; ++p)
          if (!in_s[p]) v.t_set.push_back(w[p]);
        return v;
      }
    } while (next_combination(sp, t));
  } while (next_combination(w, n));
  return std::nullopt;
}

std::optional<Violation> scan_union_free(const std::vector<Words>& masks, int n,
                                         int k, int l, const Rational& alpha,
                                         long long d) {
  const int t = k + l;
  const std::size_t words = masks.empty() ? 0 : masks[0].size();
  const Integer& a_num = alpha.get_num();
  const Integer& a_den = alpha.get_den();
  auto w = first_combination(t);
  do {
    auto sp = first_combination(l);
    do {
      std::vector<char> in_s(t, 0);
      for (int p : sp) in_s[p] = 1;
      bool witnessed = false;
      for (int p : sp) {
        Words u(words, 0);
        for (int q = 0; q < t; ++q)
          if (q != p) or_into(u, masks[w[q]]);
        const long overlap = static_cast<long>(and_popcount(masks[w[p]], u));
        // |B_j ∩ U| < alpha * d, compared exactly
        if (Integer(overlap) * a_den < a_num * Integer(static_cast<long>(d))) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) {
        Violation v;
        for (int p : sp) v.s_set.push_back(w[p]);
        for (int p = 0; p < t; ++p)
          if (!in_s[p]) v.t_set.push_back(w[p]);
        return v;
      }
    } while (next_combination(sp, t));
  } while (next_combination(w, n));
  return std::nullopt;
}

void check_pair_budget(int n, int k, int l, std::uint64_t pair_cap) {
  const std::uint64_t pairs = pair_enumeration_count(n, k, l);
  if (pairs > pair_cap)
    throw InstanceTooLarge("exhaustive verification needs " +
                           std::to_string(pairs) + " pair-sets, cap is " +
                           std::to_string(pair_cap));
}

std::vector<std::vector<int>> sample_bernoulli_columns(int n, int rows, int k,
                                                       Rng& rng) {
  std::vector<std::vector<int>> cols(n);
  for (int r = 0; r < rows; ++r)
    for (int j = 0; j < n; ++j)
      if (rng.bernoulli_one_in(static_cast<std::uint64_t>(k) + 1))
        cols[j].push_back(r);
  return cols;
}

std::vector<std::vector<int>> compact_rows(
    const std::vector<std::vector<int>>& cols, int rows,
    const std::vector<char>& active, int* rows_out) {
  std::vector<int> remap(rows, -1);
  int m2 = 0;
  for (int r = 0; r < rows; ++r)
    if (active[r]) remap[r] = m2++;
  std::vector<std::vector<int>> out(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int r : cols[j])
      if (r < rows && remap[r] >= 0) out[j].push_back(remap[r]);
  *rows_out = m2;
  return out;
}

}  // namespace

BinaryDesign::BinaryDesign(int rows, int cols,
                           std::vector<std::vector<int>> column_supports)
    : rows_(rows), cols_(cols), columns_(std::move(column_supports)) {
  if (rows < 0 || cols < 1)
    throw std::invalid_argument("design needs m >= 0 and n >= 1");
  if (static_cast<int>(columns_.size()) != cols)
    throw std::invalid_argument("design needs one support per column");
  for (const auto& col : columns_) {
    int prev = -1;
    for (int r : col) {
      if (r <= prev || r >= rows)
        throw std::invalid_argument(
            "column supports must be sorted, unique, and within [1,m]");
      prev = r;
    }
  }
}

std::optional<int> BinaryDesign::uniform_weight() const {
  if (columns_.empty()) return std::nullopt;
  const std::size_t d = columns_[0].size();
  for (const auto& col : columns_)
    if (col.size() != d) return std::nullopt;
  return static_cast<int>(d);
}

std::vector<std::vector<int>> BinaryDesign::row_supports() const {
  std::vector<std::vector<int>> rows(rows_);
  for (int j = 0; j < cols_; ++j)
    for (int r : columns_[j]) rows[r].push_back(j);
  return rows;
}

void DesignParams::validate() const {
  const Rational a = canonical(alpha);
  if (k < 1) throw std::invalid_argument("design parameter k must be >= 1");
  if (l < 1) throw std::invalid_argument("design parameter l must be >= 1");
  if (n < k + l)
    throw std::invalid_argument("design parameters need k + l <= n");
  if (!(a > 0 && a < 1))
    throw std::invalid_argument("design parameter alpha must lie in (0,1)");
  if (target_m && *target_m < 1)
    throw std::invalid_argument("target_m must be >= 1");
}

std::uint64_t pair_enumeration_count(int n, int k, int l) {
  return saturating_mul(binomial_saturating(n, k + l), binomial_saturating(k + l, l));
}

std::optional<Violation> find_list_disjunct_violation(const BinaryDesign& design,
                                                      int k, int l,
                                                      std::uint64_t pair_cap) {
  if (k < 1 || l < 1 || k + l > design.cols())
    throw std::invalid_argument("list-disjunct check needs 1 <= l, k, k+l <= n");
  check_pair_budget(design.cols(), k, l, pair_cap);
  auto masks = column_masks(design.columns(), design.rows(), nullptr);
  return scan_disjunct(masks, design.cols(), k, l);
}

bool verify_list_disjunct(const BinaryDesign& design, int k, int l,
                          std::uint64_t pair_cap) {
  return !find_list_disjunct_violation(design, k, l, pair_cap).has_value();
}

std::optional<Violation> find_list_union_free_violation(
    const BinaryDesign& design, int k, int l, const Rational& alpha_in,
    std::uint64_t pair_cap) {
  const Rational alpha = canonical(alpha_in);
  if (k < 1 || l < 1 || k + l > design.cols())
    throw std::invalid_argument("union-free check needs 1 <= l, k, k+l <= n");
  if (!(alpha > 0 && alpha <= 1))
    throw std::invalid_argument("union-free check needs alpha in (0,1]");
  const auto d = design.uniform_weight();
  if (!d)
    throw std::invalid_argument(
        "union-free check requires uniform column weight");
  check_pair_budget(design.cols(), k, l, pair_cap);
  auto masks = column_masks(design.columns(), design.rows(), nullptr);
  return scan_union_free(masks, design.cols(), k, l, alpha, *d);
}

bool verify_list_union_free(const BinaryDesign& design, int k, int l,
                            const Rational& alpha, std::uint64_t pair_cap) {
  return !find_list_union_free_violation(design, k, l, alpha, pair_cap)
              .has_value();
}

int list_disjunct_row_budget(int n, int k, int l) {
  const double v = 2.0 * k * (static_cast<double>(k) / l + 1.0) *
                   (std::log(static_cast<double>(n) / (k + l)) + 1.0);
  return std::max(1, static_cast<int>(std::ceil(v)));
}

int union_free_alphabet_size(int k, int l, const Rational& alpha) {
  const double a = alpha.get_d();
  const double v = (k + l) * std::pow(std::numbers::e / a, 2.0);
  return static_cast<int>(std::ceil(v));
}

int union_free_block_budget(int n, int k, int l, const Rational& alpha) {
  const double a = alpha.get_d();
  const double v = (2.0 / a) * (static_cast<double>(k) / l + 1.0) *
                   (std::log(static_cast<double>(n) / (k + l)) + std::numbers::e) /
                   std::log(std::numbers::e / a);
  return std::max(1, static_cast<int>(std::ceil(v)));
}

BinaryDesign construct_list_disjunct(const DesignParams& params,
                                     std::uint64_t pair_cap) {
  params.validate();
  const int n = params.n, k = params.k, l = params.l;
  const int budget = list_disjunct_row_budget(n, k, l);
  const int cap_m =
      params.target_m ? std::min(*params.target_m, budget) : budget;
  const bool feasible = pair_enumeration_count(n, k, l) <= pair_cap;

  if (!feasible) {
    Rng rng(derive_seed(params.seed, 0));
    BinaryDesign design(cap_m, n, sample_bernoulli_columns(n, cap_m, k, rng));
    design.set_check({DesignProperty::list_disjunct, k, l, Rational(), false});
    design.seed = params.seed;
    return design;
  }

  const int stream = std::max(4 * budget, budget + 64);
  for (int attempt = 0; attempt < kConstructionRetries; ++attempt) {
    Rng rng(derive_seed(params.seed, static_cast<std::uint64_t>(attempt)));
    const auto cols = sample_bernoulli_columns(n, stream, k, rng);
    const auto certified_at = [&](int rows, const std::vector<char>* active) {
      auto masks = column_masks(cols, rows, active);
      return !scan_disjunct(masks, n, k, l).has_value();
    };
    if (!certified_at(stream, nullptr)) continue;
    int lo = 1, hi = stream;
    while (lo < hi) {
      const int mid = lo + (hi - lo) / 2;
      if (certified_at(mid, nullptr))
        hi = mid;
      else
        lo = mid + 1;
    }
    const int prefix = lo;
    std::vector<char> active(prefix, 1);
    for (int r = 0; r < prefix; ++r) {
      active[r] = 0;
      if (!certified_at(prefix, &active)) active[r] = 1;
    }
    int kept = 0;
    auto pruned = compact_rows(cols, prefix, active, &kept);
    if (kept > cap_m) continue;
    BinaryDesign design(kept, n, std::move(pruned));
    design.set_check({DesignProperty::list_disjunct, k, l, Rational(), true});
    design.seed = params.seed;
    return design;
  }
  throw ConstructionFailed(
      "no certified list-disjunct design within " + std::to_string(cap_m) +
          " rows after " + std::to_string(kConstructionRetries) + " attempts",
      kConstructionRetries);
}

BinaryDesign construct_list_union_free(const DesignParams& params,
                                       std::uint64_t pair_cap) {
  params.validate();
  const int n = params.n, k = params.k, l = params.l;
  const Rational alpha = canonical(params.alpha);
  const int q = union_free_alphabet_size(k, l, alpha);
  const int block_budget = union_free_block_budget(n, k, l, alpha);
  const int block_cap =
      params.target_m
          ? std::min(block_budget, std::max(1, *params.target_m / q))
          : block_budget;
  const bool feasible = pair_enumeration_count(n, k, l) <= pair_cap;

  const auto sample_symbols = [&](int blocks, Rng& rng) {
    std::vector<std::vector<int>> sym(blocks, std::vector<int>(n));
    for (int b = 0; b < blocks; ++b)
      for (int j = 0; j < n; ++j)
        sym[b][j] = static_cast<int>(rng.below(static_cast<std::uint64_t>(q)));
    return sym;
  };
  // Column supports of the binary expansion: block b contributes row b*q + s
  // where s is the sampled symbol.
  const auto expand_columns = [&](const std::vector<std::vector<int>>& sym) {
    std::vector<std::vector<int>> cols(n);
    for (int b = 0; b < static_cast<int>(sym.size()); ++b)
      for (int j = 0; j < n; ++j) cols[j].push_back(b * q + sym[b][j]);
    return cols;
  };

  if (!feasible) {
    Rng rng(derive_seed(params.seed, 0));
    const auto sym = sample_symbols(block_cap, rng);
    BinaryDesign design(block_cap * q, n, expand_columns(sym));
    design.set_check({DesignProperty::list_union_free, k, l, alpha, false});
    design.seed = params.seed;
    return design;
  }

  for (int attempt = 0; attempt < kConstructionRetries; ++attempt) {
    Rng rng(derive_seed(params.seed, static_cast<std::uint64_t>(attempt)));
    const auto sym = sample_symbols(block_cap, rng);
    const auto cols = expand_columns(sym);
    // active is per block; d equals the number of active blocks
    const auto certified_blocks = [&](int blocks,
                                      const std::vector<char>* active_blocks) {
      std::vector<char> active_rows(blocks * q, 0);
      int d = 0;
      for (int b = 0; b < blocks; ++b) {
        if (active_blocks && !(*active_blocks)[b]) continue;
        ++d;
        std::fill(active_rows.begin() + b * q, active_rows.begin() + (b + 1) * q,
                  1);
      }
      if (d == 0) return false;
      auto masks = column_masks(cols, blocks * q, &active_rows);
      return !scan_union_free(masks, n, k, l, alpha, d).has_value();
    };
    if (!certified_blocks(block_cap, nullptr)) continue;
    int lo = 1, hi = block_cap;
    while (lo < hi) {
      const int mid = lo + (hi - lo) / 2;
      if (certified_blocks(mid, nullptr))
        hi = mid;
      else
        lo = mid + 1;
    }
    const int prefix = lo;
    std::vector<char> active(prefix, 1);
    for (int b = 0; b < prefix; ++b) {
      active[b] = 0;
      if (!certified_blocks(prefix, &active)) active[b] = 1;
    }
    std::vector<std::vector<int>> kept_sym;
    for (int b = 0; b < prefix; ++b)
      if (active[b]) kept_sym.push_back(sym[b]);
    const int blocks = static_cast<int>(kept_sym.size());
    BinaryDesign design(blocks * q, n, expand_columns(kept_sym));
    design.set_check({DesignProperty::list_union_free, k, l, alpha, true});
    design.seed = params.seed;
    return design;
  }
  throw ConstructionFailed(
      "no certified union-free design within " + std::to_string(block_cap * q) +
          " rows after " + std::to_string(kConstructionRetries) + " attempts",
      kConstructionRetries);
}

}  // namespace onebit
