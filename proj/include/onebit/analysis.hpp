#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "onebit/rational.hpp"
#include "onebit/sensing.hpp"
#include "onebit/signals.hpp"

namespace onebit {

/// Nonzero coefficients of a polynomial restricted to its support, in
/// increasing exponent order.
class SignedCoefficientSequence {
 public:
  SignedCoefficientSequence() = default;
  explicit SignedCoefficientSequence(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  bool empty() const { return coefficients_.empty(); }

 private:
  std::vector<Rational> coefficients_;
};

// Number of sign changes between consecutive coefficients: an upper bound on
// the count of positive real roots. Throws std::invalid_argument on empty.
int descartes_positive_root_bound(const SignedCoefficientSequence& c);

// 1 + max|c_i| / |c_last|: every root magnitude is strictly below this.
Rational cauchy_root_radius(const SignedCoefficientSequence& c);

// 1 + max|c_i| / min|c_i|: the dynamic-range form, always >= cauchy_root_radius.
Rational cauchy_root_radius_kappa(const SignedCoefficientSequence& c);

struct AdversarialPair {
  SparseSignal x1;
  SparseSignal x2;
  std::vector<int> s_set;  // perturbed indices
  std::vector<int> t_set;  // support of x1
};

// Searches the zero pattern of A (rows rescaled into [-1,1]) for a violation
// of (floor(k(1-2eps)), floor(2*eps*k))-list disjunctness and, if one exists,
// constructs two k-sparse signals with identical measurements whose supports
// intersect in at most k(1-2eps) indices. x1 entries are resampled from
// {±1, ±2, ±3, ±1/2, ±3/2} until every row touching the union of the support
// columns has a nonzero inner product and the measurement equality holds.
// Returns nullopt when no violation exists (or the violating set sizes round
// to zero). Rows must be binary or power rows.
std::optional<AdversarialPair> adversarial_pair(
    const SensingMatrix& matrix, int k, const Rational& eps, std::uint64_t seed,
    std::uint64_t pair_cap = 100'000'000, int resample_cap = 1000);

enum class BudgetProblem { exact, approximate, superset };
enum class SignalClass { general, bounded_range, binary, gaussian };

struct BudgetQuery {
  BudgetProblem problem = BudgetProblem::approximate;
  SignalClass signal_class = SignalClass::general;
  int n = 0;
  int k = 0;
  Rational eps;
  Rational eta;
  int same_sign_bound = 0;
};

// Default row count of the builder serving the query. Formulas use natural
// logs, continuous parameter clamps max(1, .), and a single final round-up,
// so each implemented regime is monotone in k and (away from the clamps) in
// eps. Throws std::invalid_argument for regimes no builder serves.
long long measurement_budget(const BudgetQuery& query);

}  // namespace onebit
