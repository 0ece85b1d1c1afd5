#include "onebit/recovery.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "onebit/combinatorics.hpp"
#include "onebit/errors.hpp"
#include "onebit/feasibility.hpp"

namespace onebit {
namespace {

void require_regime(const SensingMatrix& matrix, Regime expected) {
  if (matrix.regime != expected)
    throw std::invalid_argument(std::string("decoder expects a ") +
                                regime_name(expected) + " matrix, got " +
                                regime_name(matrix.regime));
}

void require_length(const SensingMatrix& matrix, const MeasurementVector& y) {
  if (static_cast<int>(y.entries.size()) != matrix.m())
    throw std::invalid_argument("measurement length does not match the matrix");
}

void require_ternary(const MeasurementVector& y) {
  if (y.mode != SignMode::ternary)
    throw std::invalid_argument("decoder needs ternary-mode measurements");
}

// Per-column overlap with supp(y) over the stage-1 design.
std::vector<long long> stage_scores(const BinaryDesign& design,
                                    const MeasurementVector& y) {
  std::vector<long long> scores(design.cols(), 0);
  for (int j = 0; j < design.cols(); ++j)
    for (int r : design.column(j))
      if (y.entries[r] != 0) ++scores[j];
  return scores;
}

// Deletes |c|-k indices: smallest score first, ties to the larger index.
void trim_to_k(std::vector<int>& c, const std::vector<long long>& scores,
               int k) {
  if (static_cast<int>(c.size()) <= k) return;
  std::vector<int> order = c;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] < scores[b];
    return a > b;
  });
  std::set<int> drop(order.begin(), order.begin() + (c.size() - k));
  std::erase_if(c, [&](int j) { return drop.count(j) > 0; });
}

}  // namespace

RecoveryReport make_report(const SensingMatrix& matrix,
                           std::vector<int> returned, int k,
                           const Rational& eps,
                           const std::optional<std::vector<int>>& reference) {
  RecoveryReport report;
  report.regime = matrix.regime;
  report.n = matrix.n;
  report.m = matrix.m();
  report.k = k;
  report.eps = canonical(eps);
  report.seed = matrix.seed;
  std::sort(returned.begin(), returned.end());
  report.returned = std::move(returned);
  if (reference) {
    std::vector<int> ref = *reference;
    std::sort(ref.begin(), ref.end());
    report.reference = ref;
    report.signal_l0 = static_cast<int>(ref.size());
    std::vector<int> fp, fn;
    std::set_difference(report.returned.begin(), report.returned.end(),
                        ref.begin(), ref.end(), std::back_inserter(fp));
    std::set_difference(ref.begin(), ref.end(), report.returned.begin(),
                        report.returned.end(), std::back_inserter(fn));
    report.false_positives = static_cast<int>(fp.size());
    report.false_negatives = static_cast<int>(fn.size());
    report.superset_ok = report.false_negatives == 0;
  }
  return report;
}

RecoveryReport decode_approximate(
    const SensingMatrix& matrix, const MeasurementVector& y, int k,
    const Rational& eps, const std::optional<std::vector<int>>& reference) {
  require_regime(matrix, Regime::approx);
  require_length(matrix, y);
  require_ternary(y);
  const BinaryDesign& design = *matrix.stage1;
  const auto d = design.uniform_weight();
  if (!d) throw std::invalid_argument("stage-1 design lost uniform weight");

  const auto scores = stage_scores(design, y);
  std::vector<int> c;
  for (int j = 0; j < matrix.n; ++j)
    if (2 * scores[j] >= *d) c.push_back(j);
  trim_to_k(c, scores, k);
  return make_report(matrix, std::move(c), k, eps, reference);
}

RecoveryReport decode_superset(
    const SensingMatrix& matrix, const MeasurementVector& y, int k,
    const Rational& eps, const std::optional<std::vector<int>>& reference) {
  require_regime(matrix, Regime::superset);
  require_length(matrix, y);
  require_ternary(y);
  const BinaryDesign& design = *matrix.stage1;
  const auto d = design.uniform_weight();
  if (!d) throw std::invalid_argument("stage-1 design lost uniform weight");

  // stage 1: strict threshold
  const auto scores = stage_scores(design, y);
  std::vector<int> c;
  for (int j = 0; j < matrix.n; ++j)
    if (2 * scores[j] > *d) c.push_back(j);
  trim_to_k(c, scores, k);

  std::vector<char> in_c(matrix.n, 0);
  for (int j : c) in_c[j] = 1;

  // stage 2: remove supports of quiet disjunct rows that miss C
  std::vector<char> keep(matrix.n, 1);
  const BinaryDesign& disjunct = *matrix.disjunct;
  const auto zrows = disjunct.row_supports();
  for (int r = 0; r < disjunct.rows(); ++r) {
    bool touches_c = false;
    for (int j : zrows[r])
      if (in_c[j]) {
        touches_c = true;
        break;
      }
    if (touches_c) continue;
    bool all_zero = true;
    for (int i = 0; i < matrix.group && all_zero; ++i)
      all_zero = y.entries[matrix.split + r * matrix.group + i] == 0;
    if (!all_zero) continue;
    for (int j : zrows[r]) keep[j] = 0;
  }

  std::vector<int> returned;
  for (int j = 0; j < matrix.n; ++j)
    if (keep[j] || in_c[j]) returned.push_back(j);
  return make_report(matrix, std::move(returned), k, eps, reference);
}

RecoveryReport decode_superset_bounded_range(
    const SensingMatrix& matrix, const MeasurementVector& y, int k,
    const Rational& eps, const Rational& eta,
    const std::optional<std::vector<int>>& reference) {
  require_regime(matrix, Regime::bounded_range);
  require_length(matrix, y);
  require_ternary(y);
  (void)eta;  // a promise about x, not a decoder parameter

  std::vector<char> keep(matrix.n, 1);
  const BinaryDesign& disjunct = *matrix.disjunct;
  const auto zrows = disjunct.row_supports();
  for (int r = 0; r < disjunct.rows(); ++r)
    if (y.entries[r] == 0)
      for (int j : zrows[r]) keep[j] = 0;

  std::vector<int> returned;
  for (int j = 0; j < matrix.n; ++j)
    if (keep[j]) returned.push_back(j);
  return make_report(matrix, std::move(returned), k, eps, reference);
}

RecoveryReport decode_superset_same_sign(
    const SensingMatrix& matrix, const MeasurementVector& y, int k,
    const Rational& eps, int R,
    const std::optional<std::vector<int>>& reference) {
  require_regime(matrix, Regime::same_sign);
  require_length(matrix, y);
  require_ternary(y);
  (void)R;  // a promise about x, not a decoder parameter

  std::vector<char> keep(matrix.n, 1);
  const BinaryDesign& disjunct = *matrix.disjunct;
  const auto zrows = disjunct.row_supports();
  for (int r = 0; r < disjunct.rows(); ++r) {
    bool all_zero = true;
    for (int i = 0; i < matrix.group && all_zero; ++i)
      all_zero = y.entries[r * matrix.group + i] == 0;
    if (!all_zero) continue;
    for (int j : zrows[r]) keep[j] = 0;
  }

  std::vector<int> returned;
  for (int j = 0; j < matrix.n; ++j)
    if (keep[j]) returned.push_back(j);
  return make_report(matrix, std::move(returned), k, eps, reference);
}

std::vector<int> superset_to_approximate(const std::vector<int>& s_set, int k,
                                         const Rational& eps_in) {
  const Rational eps = canonical(eps_in);
  const auto size = static_cast<long>(s_set.size());
  if (Rational(size) > Rational(k) + eps * k)
    throw std::invalid_argument("set size violates the |S| <= k + eps*k contract");
  std::vector<int> sorted = s_set;
  std::sort(sorted.begin(), sorted.end());
  if (size <= k) return sorted;
  sorted.resize(k);  // deletes the largest indices
  return sorted;
}

SparseSignal decode_l0_bruteforce(const SensingMatrix& matrix,
                                  const MeasurementVector& y, int k,
                                  const Rational& eta_in,
                                  std::uint64_t candidate_cap, double margin) {
  const Rational eta = canonical(eta_in);
  require_regime(matrix, Regime::gaussian);
  require_length(matrix, y);
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (!(eta >= 1)) throw std::invalid_argument("eta must be >= 1");

  const int n = matrix.n;
  const int m = matrix.m();

  std::uint64_t candidates = 1;  // the empty support
  for (int s = 1; s <= k; ++s) {
    const std::uint64_t patterns =
        s < 64 ? 1ULL << s : std::numeric_limits<std::uint64_t>::max();
    candidates += saturating_mul(binomial_saturating(n, s), patterns);
  }
  if (candidates > candidate_cap)
    throw InstanceTooLarge("candidate enumeration needs " +
                           std::to_string(candidates) + " cases, cap is " +
                           std::to_string(candidate_cap));

  // zero entries are read as +1, matching the 1-bit sign convention
  std::vector<int> yb(y.entries.size());
  for (std::size_t i = 0; i < y.entries.size(); ++i)
    yb[i] = y.entries[i] == 0 ? 1 : y.entries[i];

  Eigen::MatrixXd dense(m, n);
  for (int r = 0; r < m; ++r) {
    const auto* dr = std::get_if<DenseRow>(&matrix.rows[r]);
    if (!dr) throw std::invalid_argument("gaussian decoding needs dense rows");
    for (int j = 0; j < n; ++j) dense(r, j) = dr->values[j];
  }

  if (std::all_of(yb.begin(), yb.end(), [](int v) { return v == 1; }))
    return SparseSignal(n);

  const double eta_d = eta.get_d();
  for (int s = 1; s <= k; ++s) {
    auto combo = first_combination(s);
    do {
      for (std::uint32_t bits = 0; bits < (1u << s); ++bits) {
        double sgn[32];
        for (int i = 0; i < s; ++i) sgn[i] = (bits >> i) & 1 ? -1.0 : 1.0;
        Eigen::MatrixXd c(m, s);
        for (int r = 0; r < m; ++r)
          for (int i = 0; i < s; ++i)
            c(r, i) = yb[r] * dense(r, combo[i]) * sgn[i];
        const Eigen::VectorXd b = Eigen::VectorXd::Constant(m, margin);
        const auto u = linear_feasibility(c, b, 1.0, eta_d);
        if (!u) continue;
        std::map<int, Rational> entries;
        for (int i = 0; i < s; ++i) {
          Rational mag((*u)[i]);  // exact conversion from double
          if (mag < 1) mag = 1;
          if (mag > eta) mag = eta;
          entries[combo[i]] = sgn[i] > 0 ? mag : Rational(-mag);
        }
        SparseSignal candidate(n, std::move(entries));
        const auto check = measure(matrix, candidate, SignMode::strict);
        if (check.entries == yb) return candidate;
      }
    } while (next_combination(combo, n));
  }
  throw DecodingFailed(
      "no support and sign pattern is consistent with the measurements");
}

}  // namespace onebit
