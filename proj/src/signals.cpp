#include "onebit/signals.hpp"

#include <stdexcept>
#include <string>

namespace onebit {

SparseSignal::SparseSignal(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("signal dimension must be positive");
}

SparseSignal::SparseSignal(int dim, std::map<int, Rational> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim < 1) throw std::invalid_argument("signal dimension must be positive");
  for (auto& [i, v] : entries_) {
    if (i < 0 || i >= dim_)
      throw std::invalid_argument("signal index " + std::to_string(i + 1) +
                                  " outside [1," + std::to_string(dim_) + "]");
    v.canonicalize();
    if (sign_of(v) == 0)
      throw std::invalid_argument("stored signal entries must be nonzero");
  }
}

Rational SparseSignal::value(int i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? Rational(0) : it->second;
}

TernarySign sign_ternary(const Rational& x) {
  const int s = sign_of(x);
  if (s > 0) return TernarySign::positive;
  if (s < 0) return TernarySign::negative;
  return TernarySign::zero;
}

BinarySign sign_binary(const Rational& x) {
  return sign_of(x) >= 0 ? BinarySign::positive : BinarySign::negative;
}

TernarySign ternary_from_binary_pair(BinarySign s_pos, BinarySign s_neg) {
  if (s_pos == BinarySign::positive && s_neg == BinarySign::positive)
    return TernarySign::zero;
  if (s_pos == BinarySign::positive) return TernarySign::positive;
  if (s_neg == BinarySign::positive) return TernarySign::negative;
  throw std::invalid_argument(
      "inconsistent sign pair: no real x has sign*(x) = sign*(-x) = -1");
}

Rational dynamic_range(const SparseSignal& v) {
  if (v.l0() == 0)
    throw std::invalid_argument("dynamic range undefined for the zero signal");
  Rational max_mag, min_mag;
  bool first = true;
  for (const auto& [i, value] : v.entries()) {
    Rational mag = abs(value);
    if (first) {
      max_mag = min_mag = mag;
      first = false;
    } else {
      if (mag > max_mag) max_mag = mag;
      if (mag < min_mag) min_mag = mag;
    }
  }
  return max_mag / min_mag;
}

int min_same_sign_count(const SparseSignal& v) {
  int pos = 0, neg = 0;
  for (const auto& [i, value] : v.entries())
    (sign_of(value) > 0 ? pos : neg)++;
  return pos < neg ? pos : neg;
}

std::vector<int> support(const SparseSignal& v) {
  std::vector<int> s;
  s.reserve(v.entries().size());
  for (const auto& [i, value] : v.entries()) s.push_back(i);
  return s;
}

}  // namespace onebit
