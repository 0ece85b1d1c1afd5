#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "onebit/rational.hpp"
#include "onebit/sensing.hpp"
#include "onebit/signals.hpp"

namespace onebit {

/// Returned index set plus error bookkeeping against an optional reference
/// support. false_* counts are meaningful only when reference is present.
struct RecoveryReport {
  Regime regime = Regime::approx;
  int n = 0;
  int m = 0;
  int k = 0;
  Rational eps;
  std::uint64_t seed = 0;

  std::vector<int> returned;  // sorted, 0-based
  std::optional<std::vector<int>> reference;
  int signal_l0 = 0;
  int false_positives = 0;
  int false_negatives = 0;
  bool superset_ok = false;  // reference present and no false negatives
};

// Scan C = {j : 2*|B_j ∩ supp(y)| >= d}, then delete down to k indices by the
// deterministic rule: smallest score first, ties to the larger index.
RecoveryReport decode_approximate(
    const SensingMatrix& matrix, const MeasurementVector& y, int k,
    const Rational& eps,
    const std::optional<std::vector<int>>& reference = std::nullopt);

// Stage 1 scans the leading block with the strict threshold 2*count > d and
// trims to k; stage 2 starts from [n] and removes the support of every
// disjunct row that misses C and whose whole power group measured 0; returns
// the union.
RecoveryReport decode_superset(
    const SensingMatrix& matrix, const MeasurementVector& y, int k,
    const Rational& eps,
    const std::optional<std::vector<int>>& reference = std::nullopt);

// Removes the support of every row measuring 0; valid when kappa(x) <= eta.
RecoveryReport decode_superset_bounded_range(
    const SensingMatrix& matrix, const MeasurementVector& y, int k,
    const Rational& eps, const Rational& eta,
    const std::optional<std::vector<int>>& reference = std::nullopt);

// Removes the support of every disjunct row whose whole power group measured
// 0; valid when rho(x) <= R.
RecoveryReport decode_superset_same_sign(
    const SensingMatrix& matrix, const MeasurementVector& y, int k,
    const Rational& eps, int R,
    const std::optional<std::vector<int>>& reference = std::nullopt);

// Keeps the k smallest indices when |S| > k. Throws std::invalid_argument
// when |S| > k + eps*k.
std::vector<int> superset_to_approximate(const std::vector<int>& s_set, int k,
                                         const Rational& eps);

// Minimum-support sign-consistent decoding against a gaussian matrix:
// enumerates supports by size then sign patterns, and accepts the first
// candidate with a feasible magnitude assignment in [1, eta] under the margin
// relaxation y_i * <a_i, x> >= margin. Zero measurement entries are treated
// as +1. Throws DecodingFailed when nothing is consistent and InstanceTooLarge
// past candidate_cap.
SparseSignal decode_l0_bruteforce(const SensingMatrix& matrix,
                                  const MeasurementVector& y, int k,
                                  const Rational& eta,
                                  std::uint64_t candidate_cap = 1'000'000,
                                  double margin = 1e-6);

// FP/FN bookkeeping for a returned set against a reference support.
RecoveryReport make_report(const SensingMatrix& matrix, std::vector<int> returned,
                           int k, const Rational& eps,
                           const std::optional<std::vector<int>>& reference);

}  // namespace onebit
