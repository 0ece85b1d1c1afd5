#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "onebit/rng.hpp"
#include "onebit/signals.hpp"

using namespace onebit;

namespace {

SparseSignal make(int n, std::initializer_list<std::pair<int, Rational>> vals) {
  std::map<int, Rational> m;
  for (const auto& [i, v] : vals) m[i] = v;
  return SparseSignal(n, std::move(m));
}

Rational random_rational(Rng& rng) {
  const long num = static_cast<long>(rng.below(41)) - 20;
  const long den = 1 + static_cast<long>(rng.below(9));
  return Rational(num, den);
}

}  // namespace

TEST_CASE("ternary sign definition cases") {
  CHECK(sign_ternary(Rational(0)) == TernarySign::zero);
  CHECK(sign_ternary(Rational(7, 3)) == TernarySign::positive);
  CHECK(sign_ternary(Rational(-5)) == TernarySign::negative);
}

TEST_CASE("binary sign maps zero to +1") {
  CHECK(sign_binary(Rational(0)) == BinarySign::positive);
  CHECK(sign_binary(Rational(2)) == BinarySign::positive);
  CHECK(sign_binary(Rational(-2)) == BinarySign::negative);
}

TEST_CASE("ternary from a binary pair") {
  CHECK(ternary_from_binary_pair(BinarySign::positive, BinarySign::positive) ==
        TernarySign::zero);
  CHECK(ternary_from_binary_pair(BinarySign::positive, BinarySign::negative) ==
        TernarySign::positive);
  CHECK(ternary_from_binary_pair(BinarySign::negative, BinarySign::positive) ==
        TernarySign::negative);
  CHECK_THROWS_AS(
      ternary_from_binary_pair(BinarySign::negative, BinarySign::negative),
      std::invalid_argument);
}

TEST_CASE("pair reconstruction matches the ternary sign for random rationals") {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Rational x = random_rational(rng);
    CHECK(ternary_from_binary_pair(sign_binary(x), sign_binary(Rational(-x))) ==
          sign_ternary(x));
  }
}

TEST_CASE("dynamic range") {
  CHECK(dynamic_range(make(4, {{0, 2}, {1, -4}, {3, 1}})) == Rational(4));
  CHECK(dynamic_range(make(2, {{0, 5}, {1, 5}})) == Rational(1));
  CHECK_THROWS_AS(dynamic_range(SparseSignal(3)), std::invalid_argument);
}

TEST_CASE("dynamic range is scale invariant") {
  Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    std::map<int, Rational> m;
    const int n = 6;
    for (int i = 0; i < n; ++i)
      if (rng.below(2) == 0) {
        const Rational v = random_rational(rng);
        if (sign_of(v) != 0) m[i] = v;
      }
    if (m.empty()) continue;
    SparseSignal x(n, m);
    Rational c = random_rational(rng);
    if (sign_of(c) == 0) c = 3;
    std::map<int, Rational> scaled;
    for (const auto& [i, v] : m) scaled[i] = Rational(c * v);
    CHECK(dynamic_range(SparseSignal(n, scaled)) == dynamic_range(x));
  }
}

TEST_CASE("minimum same-sign count") {
  CHECK(min_same_sign_count(make(3, {{0, 1}, {1, -2}, {2, 3}})) == 1);
  CHECK(min_same_sign_count(make(3, {{0, 1}, {1, 2}, {2, 3}})) == 0);
  CHECK(min_same_sign_count(SparseSignal(3)) == 0);
}

TEST_CASE("same-sign count is invariant under negation") {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    std::map<int, Rational> m, neg;
    for (int i = 0; i < 7; ++i)
      if (rng.below(2) == 0) {
        const Rational v = random_rational(rng);
        if (sign_of(v) != 0) {
          m[i] = v;
          neg[i] = Rational(-v);
        }
      }
    CHECK(min_same_sign_count(SparseSignal(7, m)) ==
          min_same_sign_count(SparseSignal(7, neg)));
  }
}

TEST_CASE("support") {
  CHECK(support(make(4, {{1, 3}, {3, -1}})) == std::vector<int>{1, 3});
  CHECK(support(SparseSignal(4)).empty());
  CHECK(support(make(1, {{0, 7}})) == std::vector<int>{0});
}

TEST_CASE("support size equals the l0 norm") {
  Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<int, Rational> m;
    for (int i = 0; i < 9; ++i)
      if (rng.below(3) == 0) m[i] = Rational(1 + static_cast<long>(rng.below(5)));
    SparseSignal x(9, m);
    CHECK(static_cast<int>(support(x).size()) == x.l0());
  }
}

TEST_CASE("signal construction rejects bad input") {
  CHECK_THROWS_AS(SparseSignal(0), std::invalid_argument);
  std::map<int, Rational> zero_entry{{0, Rational(0)}};
  CHECK_THROWS_AS(SparseSignal(3, zero_entry), std::invalid_argument);
  std::map<int, Rational> out_of_range{{3, Rational(1)}};
  CHECK_THROWS_AS(SparseSignal(3, out_of_range), std::invalid_argument);
}
