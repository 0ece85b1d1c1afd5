#pragma once

#include <map>
#include <vector>

#include "onebit/rational.hpp"

namespace onebit {

enum class TernarySign : int { negative = -1, zero = 0, positive = 1 };
enum class BinarySign : int { negative = -1, positive = 1 };

inline int as_int(TernarySign s) { return static_cast<int>(s); }
inline int as_int(BinarySign s) { return static_cast<int>(s); }

/// Sparse vector with exact rational entries. Stored entries are nonzero and
/// indexed 0-based internally (file formats and diagnostics are 1-based).
/// Immutable after construction; safe to share across threads.
class SparseSignal {
 public:
  explicit SparseSignal(int dim);  // the zero signal
  SparseSignal(int dim, std::map<int, Rational> entries);

  int dim() const { return dim_; }
  const std::map<int, Rational>& entries() const { return entries_; }
  int l0() const { return static_cast<int>(entries_.size()); }
  Rational value(int i) const;  // 0 when the coordinate is not stored

  bool operator==(const SparseSignal& other) const {
    return dim_ == other.dim_ && entries_ == other.entries_;
  }

 private:
  int dim_;
  std::map<int, Rational> entries_;
};

TernarySign sign_ternary(const Rational& x);
BinarySign sign_binary(const Rational& x);  // +1 iff x >= 0

// Recovers the three-valued sign of x from the 1-bit signs of x and -x:
// (+1,+1) -> 0, (+1,-1) -> +1, (-1,+1) -> -1. (-1,-1) is impossible for any
// real x and throws std::invalid_argument.
TernarySign ternary_from_binary_pair(BinarySign s_pos, BinarySign s_neg);

// max |v_i| / min |v_i| over nonzero entries; >= 1. Throws
// std::invalid_argument for the zero signal.
Rational dynamic_range(const SparseSignal& v);

// min(#{v_i > 0}, #{v_i < 0}).
int min_same_sign_count(const SparseSignal& v);

// Sorted indices of the nonzero coordinates (0-based).
std::vector<int> support(const SparseSignal& v);

}  // namespace onebit
