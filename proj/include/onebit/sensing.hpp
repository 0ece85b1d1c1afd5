#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "onebit/designs.hpp"
#include "onebit/rational.hpp"
#include "onebit/signals.hpp"

namespace onebit {

struct BinaryRow {
  std::vector<int> support;  // sorted ascending
};

// Row whose t-th support entry (ascending index order) carries base^(t-1).
// Values are materialized on demand.
struct PowerRow {
  std::vector<int> support;
  Rational base;
};

struct DenseRow {
  std::vector<double> values;
};

using Row = std::variant<BinaryRow, PowerRow, DenseRow>;

enum class Regime { approx, superset, bounded_range, same_sign, gaussian };

const char* regime_name(Regime r);
Regime regime_from_name(const std::string& name);

/// Ordered measurement rows plus the construction record a decoder needs:
/// stage-1 design, disjunct design, the block split, and the power-row group
/// size. Immutable after build.
struct SensingMatrix {
  Regime regime = Regime::approx;
  int n = 0;
  std::vector<Row> rows;

  int k = 0;
  Rational eps;
  Rational eta;             // bounded_range only
  int same_sign_bound = 0;  // same_sign only (R)
  std::uint64_t seed = 0;

  int split = 0;  // rows in the leading binary block (approx/superset)
  int group = 1;  // power rows per disjunct row (superset/same_sign)
  std::optional<BinaryDesign> stage1;    // approx/superset
  std::optional<BinaryDesign> disjunct;  // superset/bounded_range/same_sign

  int m() const { return static_cast<int>(rows.size()); }
};

enum class SignMode { ternary, strict };

struct MeasurementVector {
  std::vector<int> entries;  // {-1,0,1} (ternary) or {-1,1} (strict)
  SignMode mode = SignMode::ternary;

  bool operator==(const MeasurementVector& other) const {
    return entries == other.entries && mode == other.mode;
  }
};

// Power row over the support of z. Throws std::invalid_argument unless base > 0.
PowerRow power_row(const BinaryRow& z, const Rational& base);

// Dense rational values of a power row (length n). Throws InstanceTooLarge
// when a value would exceed max_bits bits.
std::vector<Rational> power_row_values(const PowerRow& row, int n,
                                       std::size_t max_bits = 4096);

// Binary rows of a certified union-free design with l = max(1, floor(eps*k/2)),
// alpha = 1/2.
SensingMatrix build_approx_matrix(int n, int k, const Rational& eps,
                                  std::uint64_t seed);

// Two stacked blocks: a union-free stage with l1 = max(1, floor(sqrt(eps*k)/2))
// and a disjunct stage over column budget k + ceil(sqrt(eps*k)), each disjunct
// row expanded into p = max(1, ceil(sqrt(eps*k))) power rows with bases 2..p+1.
SensingMatrix build_superset_matrix(int n, int k, const Rational& eps,
                                    std::uint64_t seed);

// One power row per disjunct row, base ceil(eta)+2 > 1+eta. Requires eta > 1.
SensingMatrix build_bounded_range_matrix(int n, int k, const Rational& eps,
                                         const Rational& eta, std::uint64_t seed);

// 2R+1 power rows per disjunct row with bases 2..2R+2. Requires R >= 0.
SensingMatrix build_same_sign_matrix(int n, int k, const Rational& eps, int R,
                                     std::uint64_t seed);

// m rows of i.i.d. standard normal entries from the seeded sampler.
SensingMatrix build_gaussian_matrix(int n, int m, std::uint64_t seed);

// y = sign(Ax). Binary/power rows use exact rational inner products; dense
// rows use double dot products with |v| <= dense_zero_tol reported as 0 in
// ternary mode. Strict mode applies the 1-bit sign (+1 iff v >= 0).
MeasurementVector measure(const SensingMatrix& matrix, const SparseSignal& x,
                          SignMode mode = SignMode::ternary,
                          double dense_zero_tol = 0.0);

}  // namespace onebit
