#include "onebit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "onebit/combinatorics.hpp"
#include "onebit/errors.hpp"
#include "onebit/rng.hpp"

namespace onebit {
namespace {

void require_nonempty(const SignedCoefficientSequence& c) {
  if (c.empty())
    throw std::invalid_argument("empty coefficient sequence");
}

Rational max_abs(const std::vector<Rational>& cs) {
  Rational m = abs(cs.front());
  for (const auto& c : cs) {
    Rational a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

Rational min_abs(const std::vector<Rational>& cs) {
  Rational m = abs(cs.front());
  for (const auto& c : cs) {
    Rational a = abs(c);
    if (a < m) m = a;
  }
  return m;
}

}  // namespace

SignedCoefficientSequence::SignedCoefficientSequence(
    std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  for (auto& c : coefficients_) {
    c.canonicalize();
    if (sign_of(c) == 0)
      throw std::invalid_argument("coefficient sequence entries must be nonzero");
  }
}

int descartes_positive_root_bound(const SignedCoefficientSequence& c) {
  require_nonempty(c);
  const auto& cs = c.coefficients();
  int changes = 0;
  for (std::size_t i = 1; i < cs.size(); ++i)
    if (sign_of(cs[i - 1]) != sign_of(cs[i])) ++changes;
  return changes;
}

Rational cauchy_root_radius(const SignedCoefficientSequence& c) {
  require_nonempty(c);
  const auto& cs = c.coefficients();
  return 1 + max_abs(cs) / abs(cs.back());
}

Rational cauchy_root_radius_kappa(const SignedCoefficientSequence& c) {
  require_nonempty(c);
  const auto& cs = c.coefficients();
  return 1 + max_abs(cs) / min_abs(cs);
}

std::optional<AdversarialPair> adversarial_pair(const SensingMatrix& matrix,
                                                int k, const Rational& eps_in,
                                                std::uint64_t seed,
                                                std::uint64_t pair_cap,
                                                int resample_cap) {
  const Rational eps = canonical(eps_in);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(eps > 0 && eps < 1))
    throw std::invalid_argument("eps must lie in (0,1)");
  const int n = matrix.n;
  const int m = matrix.m();

  // rescale every row into [-1,1] by its own max magnitude
  struct Entry {
    int col;
    Rational val;
  };
  std::vector<std::vector<Entry>> rows(m);
  for (int r = 0; r < m; ++r) {
    const Row& row = matrix.rows[r];
    if (const auto* br = std::get_if<BinaryRow>(&row)) {
      for (int j : br->support) rows[r].push_back({j, Rational(1)});
    } else if (const auto* pr = std::get_if<PowerRow>(&row)) {
      for (std::size_t t = 0; t < pr->support.size(); ++t)
        rows[r].push_back(
            {pr->support[t], pow_checked(pr->base, static_cast<unsigned long>(t))});
    } else {
      throw std::invalid_argument("pair search needs binary or power rows");
    }
    if (!rows[r].empty()) {
      Rational scale = abs(rows[r].front().val);
      for (const auto& e : rows[r]) {
        Rational a = abs(e.val);
        if (a > scale) scale = a;
      }
      for (auto& e : rows[r]) e.val /= scale;
    }
  }

  const long s_size = floor_long(Rational(2 * eps * k));
  const long t_size = std::max<long>(0, floor_long(Rational(k * (1 - 2 * eps))));
  if (s_size < 1) return std::nullopt;
  if (t_size + s_size > n) return std::nullopt;

  const std::uint64_t count =
      saturating_mul(binomial_saturating(n, static_cast<int>(t_size)),
                     binomial_saturating(n - static_cast<int>(t_size),
                                         static_cast<int>(s_size)));
  if (count > pair_cap)
    throw InstanceTooLarge("pair search needs " + std::to_string(count) +
                           " candidate pairs, cap is " + std::to_string(pair_cap));

  std::vector<std::vector<int>> touching(n);  // rows with a nonzero in column j
  for (int r = 0; r < m; ++r)
    for (const auto& e : rows[r]) touching[e.col].push_back(r);

  static const Rational kValueTable[] = {
      Rational(1),      Rational(-1),     Rational(2),     Rational(-2),
      Rational(3),      Rational(-3),     Rational(1, 2),  Rational(-1, 2),
      Rational(3, 2),   Rational(-3, 2)};

  const auto build_pair =
      [&](const std::vector<int>& t_set,
          const std::vector<int>& s_set) -> AdversarialPair {
    // rows touching the union of the T columns
    std::vector<char> in_u(m, 0);
    for (int j : t_set)
      for (int r : touching[j]) in_u[r] = 1;
    Rng rng(derive_seed(seed, 0));
    for (int attempt = 0; attempt < resample_cap; ++attempt) {
      std::map<int, Rational> e1;
      for (int j : t_set) e1[j] = kValueTable[rng.below(10)];
      SparseSignal x1(n, e1);
      bool nonvanishing = true;
      Rational gamma;
      bool have_gamma = false;
      for (int r = 0; r < m && nonvanishing; ++r) {
        if (!in_u[r]) continue;
        Rational ip(0);
        for (const auto& e : rows[r]) ip += e.val * x1.value(e.col);
        if (sign_of(ip) == 0) {
          nonvanishing = false;
          break;
        }
        Rational mag = abs(ip);
        if (!have_gamma || mag < gamma) {
          gamma = mag;
          have_gamma = true;
        }
      }
      if (!nonvanishing) continue;
      if (!have_gamma) gamma = 1;
      std::map<int, Rational> e2 = e1;
      for (int j : s_set) e2[j] = gamma / s_size;
      SparseSignal x2(n, e2);
      if (measure(matrix, x1).entries == measure(matrix, x2).entries)
        return AdversarialPair{std::move(x1), std::move(x2), s_set, t_set};
    }
    throw std::runtime_error("adversarial resampling cap exceeded");
  };

  // T lexicographic, then S lexicographic over the complement
  std::vector<int> t_set(t_size);
  std::iota(t_set.begin(), t_set.end(), 0);
  do {
    std::vector<char> in_t(n, 0);
    for (int j : t_set) in_t[j] = 1;
    std::vector<char> covered(m, 0);
    for (int j : t_set)
      for (int r : touching[j]) covered[r] = 1;
    std::vector<int> complement;
    for (int j = 0; j < n; ++j)
      if (!in_t[j]) complement.push_back(j);

    auto spos = first_combination(static_cast<int>(s_size));
    do {
      bool violating = true;
      for (int p : spos) {
        const int j = complement[p];
        for (int r : touching[j])
          if (!covered[r]) {
            violating = false;
            break;
          }
        if (!violating) break;
      }
      if (violating) {
        std::vector<int> s_set;
        for (int p : spos) s_set.push_back(complement[p]);
        return build_pair(t_set, s_set);
      }
    } while (next_combination(spos, static_cast<int>(complement.size())));
  } while (t_size > 0 && next_combination(t_set, n));

  return std::nullopt;
}

long long measurement_budget(const BudgetQuery& query_in) {
  BudgetQuery query = query_in;
  query.eps = canonical(query.eps);
  query.eta = canonical(query.eta);
  if (query.n < 1 || query.k < 1)
    throw std::invalid_argument("budget query needs n >= 1 and k >= 1");
  const double e = std::numbers::e;
  const double nd = query.n;
  const double kd = query.k;
  const auto require_eps = [&] {
    if (!(query.eps > 0 && query.eps <= 1))
      throw std::invalid_argument("budget query needs eps in (0,1]");
  };
  // real-valued versions of the construction budgets (alpha = 1/2), clamped
  // continuously so the budget stays monotone in k and eps
  const auto union_free = [&](double l_raw) {
    const double l = std::max(1.0, l_raw);
    const double q = (kd + l) * (2 * e) * (2 * e);
    const double mp =
        4.0 * (kd / l + 1.0) * (std::log(nd / (kd + l)) + e) / std::log(2 * e);
    return q * mp;
  };
  const auto disjunct = [&](double big_k, double l_raw) {
    const double l = std::max(1.0, l_raw);
    return 2.0 * big_k * (big_k / l + 1.0) * (std::log(nd / (big_k + l)) + 1.0);
  };
  const auto gaussian = [&] {
    require_eps();
    if (!(query.eta > 1))
      throw std::invalid_argument("gaussian budget needs eta > 1");
    const double eps_d = query.eps.get_d();
    const double eta_d = query.eta.get_d();
    return (3.0 * std::numbers::pi * kd * eta_d / (2.0 * std::sqrt(eps_d))) *
           std::log(5.0 * e * nd * eta_d / std::sqrt(eps_d));
  };

  double value = 0;
  const double eps_d = query.eps.get_d();
  if (query.problem == BudgetProblem::approximate) {
    switch (query.signal_class) {
      case SignalClass::general:
        require_eps();
        value = union_free(eps_d * kd / 2.0);
        break;
      case SignalClass::bounded_range:
      case SignalClass::gaussian:
        value = gaussian();
        break;
      default:
        throw std::invalid_argument("no builder serves this budget regime");
    }
  } else if (query.problem == BudgetProblem::superset) {
    switch (query.signal_class) {
      case SignalClass::general: {
        require_eps();
        const double zk = std::sqrt(eps_d * kd);
        const double v = union_free(zk / 2.0);
        const double p = std::max(1.0, zk);
        const double u = disjunct(kd + zk, eps_d * kd / 2.0);
        value = v + p * u;
        break;
      }
      case SignalClass::bounded_range:
        require_eps();
        value = disjunct(kd, eps_d * kd);
        break;
      case SignalClass::binary: {
        require_eps();
        if (query.same_sign_bound < 0)
          throw std::invalid_argument("same-sign bound must be >= 0");
        value = (2.0 * query.same_sign_bound + 1.0) * disjunct(kd, eps_d * kd);
        break;
      }
      default:
        throw std::invalid_argument("no builder serves this budget regime");
    }
  } else {
    throw std::invalid_argument("no builder serves exact-recovery budgets");
  }
  return static_cast<long long>(std::ceil(value));
}

}  // namespace onebit
