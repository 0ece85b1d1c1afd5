#include "onebit/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "onebit/rng.hpp"

namespace onebit {
namespace {

void require_eps(const Rational& eps) {
  if (!(eps > 0 && eps <= 1))
    throw std::invalid_argument("eps must lie in (0,1]");
}

BinaryRow binary_row(std::vector<int> support) {
  return BinaryRow{std::move(support)};
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::approx: return "approx";
    case Regime::superset: return "superset";
    case Regime::bounded_range: return "bounded-range";
    case Regime::same_sign: return "same-sign";
    case Regime::gaussian: return "gaussian";
  }
  throw std::logic_error("unknown regime");
}

Regime regime_from_name(const std::string& name) {
  if (name == "approx") return Regime::approx;
  if (name == "superset") return Regime::superset;
  if (name == "bounded-range") return Regime::bounded_range;
  if (name == "same-sign") return Regime::same_sign;
  if (name == "gaussian") return Regime::gaussian;
  throw std::invalid_argument("unknown regime name: " + name);
}

PowerRow power_row(const BinaryRow& z, const Rational& base) {
  if (!(canonical(base) > 0))
    throw std::invalid_argument("power-row base must be positive");
  PowerRow row{z.support, canonical(base)};
  std::sort(row.support.begin(), row.support.end());
  return row;
}

std::vector<Rational> power_row_values(const PowerRow& row, int n,
                                       std::size_t max_bits) {
  std::vector<Rational> values(n, Rational(0));
  for (std::size_t t = 0; t < row.support.size(); ++t) {
    const int j = row.support[t];
    if (j < 0 || j >= n)
      throw std::invalid_argument("power-row support index out of range");
    values[j] = pow_checked(row.base, static_cast<unsigned long>(t), max_bits);
  }
  return values;
}

SensingMatrix build_approx_matrix(int n, int k, const Rational& eps_in,
                                  std::uint64_t seed) {
  const Rational eps = canonical(eps_in);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  require_eps(eps);
  const long l = std::max<long>(1, floor_long(Rational(eps * k / 2)));
  if (k + l > n)
    throw std::invalid_argument("k plus the list size exceeds n");

  DesignParams dp{n, k, static_cast<int>(l), Rational(1, 2), std::nullopt,
                  derive_seed(seed, 1)};
  BinaryDesign design = construct_list_union_free(dp);

  SensingMatrix a;
  a.regime = Regime::approx;
  a.n = n;
  a.k = k;
  a.eps = eps;
  a.seed = seed;
  for (auto& rs : design.row_supports()) a.rows.emplace_back(binary_row(std::move(rs)));
  a.split = design.rows();
  a.stage1 = std::move(design);
  return a;
}

SensingMatrix build_superset_matrix(int n, int k, const Rational& eps_in,
                                    std::uint64_t seed) {
  const Rational eps = canonical(eps_in);
  if (k < 2)
    throw std::invalid_argument("superset construction needs k >= 2");
  require_eps(eps);
  const Rational ek = eps * k;
  // zeta = sqrt(eps/k), so zeta*k = sqrt(eps*k); all floors/ceils are exact.
  const long l1 = std::max<long>(1, floor_sqrt(Rational(ek / 4)).get_si());
  const long p = std::max<long>(1, ceil_sqrt(ek).get_si());
  const int big_k = k + static_cast<int>(ceil_sqrt(ek).get_si());
  const long l2 = std::max<long>(1, floor_long(Rational(ek / 2)));
  if (k + l1 > n || big_k + l2 > n)
    throw std::invalid_argument("column budget exceeds n");

  DesignParams d1{n, k, static_cast<int>(l1), Rational(1, 2), std::nullopt,
                  derive_seed(seed, 1)};
  BinaryDesign stage1 = construct_list_union_free(d1);
  DesignParams d2{n, big_k, static_cast<int>(l2), Rational(1, 2), std::nullopt,
                  derive_seed(seed, 2)};
  BinaryDesign disjunct = construct_list_disjunct(d2);

  SensingMatrix a;
  a.regime = Regime::superset;
  a.n = n;
  a.k = k;
  a.eps = eps;
  a.seed = seed;
  for (auto& rs : stage1.row_supports()) a.rows.emplace_back(binary_row(std::move(rs)));
  a.split = stage1.rows();
  a.group = static_cast<int>(p);
  for (const auto& z : disjunct.row_supports())
    for (long i = 1; i <= p; ++i)
      a.rows.emplace_back(power_row(BinaryRow{z}, Rational(i + 1)));
  a.stage1 = std::move(stage1);
  a.disjunct = std::move(disjunct);
  return a;
}

SensingMatrix build_bounded_range_matrix(int n, int k, const Rational& eps_in,
                                         const Rational& eta_in,
                                         std::uint64_t seed) {
  const Rational eps = canonical(eps_in);
  const Rational eta = canonical(eta_in);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  require_eps(eps);
  if (!(eta > 1))
    throw std::invalid_argument("bounded-range construction needs eta > 1");
  const long l = std::max<long>(1, floor_long(Rational(eps * k)));
  if (k + l > n)
    throw std::invalid_argument("k plus the list size exceeds n");

  DesignParams dp{n, k, static_cast<int>(l), Rational(1, 2), std::nullopt,
                  derive_seed(seed, 1)};
  BinaryDesign disjunct = construct_list_disjunct(dp);

  const Rational base = Rational(Integer(ceil_rational(eta) + 2));
  SensingMatrix a;
  a.regime = Regime::bounded_range;
  a.n = n;
  a.k = k;
  a.eps = eps;
  a.eta = eta;
  a.seed = seed;
  a.group = 1;
  for (const auto& z : disjunct.row_supports())
    a.rows.emplace_back(power_row(BinaryRow{z}, base));
  a.disjunct = std::move(disjunct);
  return a;
}

SensingMatrix build_same_sign_matrix(int n, int k, const Rational& eps_in, int R,
                                     std::uint64_t seed) {
  const Rational eps = canonical(eps_in);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  require_eps(eps);
  if (R < 0) throw std::invalid_argument("same-sign bound R must be >= 0");
  const long l = std::max<long>(1, floor_long(Rational(eps * k)));
  if (k + l > n)
    throw std::invalid_argument("k plus the list size exceeds n");

  DesignParams dp{n, k, static_cast<int>(l), Rational(1, 2), std::nullopt,
                  derive_seed(seed, 1)};
  BinaryDesign disjunct = construct_list_disjunct(dp);

  // the constructive argument needs 2R+1 distinct evaluation points
  const int points = 2 * R + 1;
  SensingMatrix a;
  a.regime = Regime::same_sign;
  a.n = n;
  a.k = k;
  a.eps = eps;
  a.same_sign_bound = R;
  a.seed = seed;
  a.group = points;
  for (const auto& z : disjunct.row_supports())
    for (int i = 1; i <= points; ++i)
      a.rows.emplace_back(power_row(BinaryRow{z}, Rational(i + 1)));
  a.disjunct = std::move(disjunct);
  return a;
}

SensingMatrix build_gaussian_matrix(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("gaussian matrix needs n >= 1 and m >= 1");
  Rng rng(seed);
  SensingMatrix a;
  a.regime = Regime::gaussian;
  a.n = n;
  a.seed = seed;
  a.rows.reserve(m);
  for (int r = 0; r < m; ++r) {
    DenseRow row;
    row.values.resize(n);
    for (int j = 0; j < n; ++j) row.values[j] = rng.normal();
    a.rows.emplace_back(std::move(row));
  }
  return a;
}

MeasurementVector measure(const SensingMatrix& matrix, const SparseSignal& x,
                          SignMode mode, double dense_zero_tol) {
  if (x.dim() != matrix.n)
    throw std::invalid_argument("signal dimension does not match the matrix");
  MeasurementVector y;
  y.mode = mode;
  y.entries.reserve(matrix.rows.size());
  for (const Row& row : matrix.rows) {
    int s = 0;
    if (const auto* br = std::get_if<BinaryRow>(&row)) {
      Rational acc(0);
      for (const auto& [j, v] : x.entries())
        if (std::binary_search(br->support.begin(), br->support.end(), j))
          acc += v;
      s = mode == SignMode::ternary ? as_int(sign_ternary(acc))
                                    : as_int(sign_binary(acc));
    } else if (const auto* pr = std::get_if<PowerRow>(&row)) {
      Rational acc(0);
      for (const auto& [j, v] : x.entries()) {
        const auto it =
            std::lower_bound(pr->support.begin(), pr->support.end(), j);
        if (it != pr->support.end() && *it == j) {
          const auto t =
              static_cast<unsigned long>(it - pr->support.begin());
          acc += v * pow_checked(pr->base, t);
        }
      }
      s = mode == SignMode::ternary ? as_int(sign_ternary(acc))
                                    : as_int(sign_binary(acc));
    } else {
      const auto& dr = std::get<DenseRow>(row);
      double acc = 0;
      for (const auto& [j, v] : x.entries()) acc += dr.values[j] * v.get_d();
      if (mode == SignMode::ternary)
        s = std::abs(acc) <= dense_zero_tol ? 0 : (acc > 0 ? 1 : -1);
      else
        s = acc >= 0 ? 1 : -1;
    }
    y.entries.push_back(s);
  }
  return y;
}

}  // namespace onebit
