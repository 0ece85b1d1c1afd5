// Test-only oracles, kept independent of the implementation paths they check.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "onebit/combinatorics.hpp"
#include "onebit/designs.hpp"
#include "onebit/rational.hpp"

namespace onebit::oracle {

// Set-cover scan for the list-disjunct property: a design fails iff some
// k-set T covers at least l other columns entirely. Independent of the
// bitset-based pair scan in the library.
inline bool disjunct_by_cover_scan(const BinaryDesign& design, int k, int l) {
  const int n = design.cols();
  auto t_set = first_combination(k);
  do {
    std::set<int> u;
    for (int j : t_set) u.insert(design.column(j).begin(), design.column(j).end());
    int covered = 0;
    for (int j = 0; j < n; ++j) {
      if (std::find(t_set.begin(), t_set.end(), j) != t_set.end()) continue;
      bool subset = true;
      for (int r : design.column(j))
        if (!u.count(r)) {
          subset = false;
          break;
        }
      if (subset) ++covered;
    }
    if (covered >= l) return false;
  } while (next_combination(t_set, n));
  return true;
}

// Direct std::set re-implementation of the union-free definition.
inline bool union_free_by_definition(const BinaryDesign& design, int k, int l,
                                     const Rational& alpha) {
  const int n = design.cols();
  const int d = *design.uniform_weight();
  auto w = first_combination(k + l);
  do {
    auto spos = first_combination(l);
    do {
      bool witnessed = false;
      for (int p : spos) {
        const int j = w[p];
        std::set<int> u;
        for (int q = 0; q < k + l; ++q)
          if (q != p)
            u.insert(design.column(w[q]).begin(), design.column(w[q]).end());
        long overlap = 0;
        for (int r : design.column(j)) overlap += u.count(r);
        if (Rational(overlap) < alpha * d) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) return false;
    } while (next_combination(spos, k + l));
  } while (next_combination(w, n));
  return true;
}

// Exact evaluation of a dense integer/rational polynomial (ascending coeffs).
inline Rational eval_poly(const std::vector<Rational>& coeffs,
                          const Rational& r) {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + *it;
  return acc;
}

struct IsolatedRoot {
  Rational lo, hi;  // lo == hi for an exact rational root
  bool exact = false;
};

namespace detail {

inline void bisect(const std::vector<Rational>& coeffs, Rational lo,
                   Rational hi, const Rational& p_lo, const Rational& p_hi,
                   int depth, std::vector<IsolatedRoot>& out) {
  if (sign_of(p_lo) == 0 || sign_of(p_hi) == 0) return;  // endpoints handled once
  if (sign_of(p_lo) == sign_of(p_hi)) return;  // may miss even-order roots; undercount-safe
  if (depth == 0) {
    out.push_back({lo, hi, false});
    return;
  }
  const Rational mid = (lo + hi) / 2;
  const Rational p_mid = eval_poly(coeffs, mid);
  if (sign_of(p_mid) == 0) {
    out.push_back({mid, mid, true});
    return;
  }
  bisect(coeffs, lo, mid, p_lo, p_mid, depth - 1, out);
  bisect(coeffs, mid, hi, p_mid, p_hi, depth - 1, out);
}

}  // namespace detail

// Root isolation by sign changes of exact evaluations on a refining dyadic
// grid. Starts from unit segments of [-B, B] with B = 1 + sum|c_i|/|c_lead|
// (the sum form, distinct from the max-form radius under test). Roots of even
// multiplicity inside one segment can be missed, which only undercounts.
inline std::vector<IsolatedRoot> isolate_roots(const std::vector<Rational>& coeffs,
                                               int depth = 40) {
  std::vector<IsolatedRoot> out;
  Rational sum(0);
  for (const auto& c : coeffs) sum += abs(c);
  const Rational lead = abs(coeffs.back());
  const long bound = ceil_long(Rational(1 + sum / lead));
  // exact zeros on the integer lattice
  for (long a = -bound; a <= bound; ++a)
    if (sign_of(eval_poly(coeffs, Rational(a))) == 0)
      out.push_back({Rational(a), Rational(a), true});
  for (long a = -bound; a < bound; ++a) {
    const Rational lo(a), hi(a + 1);
    detail::bisect(coeffs, lo, hi, eval_poly(coeffs, lo), eval_poly(coeffs, hi),
                   depth, out);
  }
  return out;
}

// Shrinks an isolating interval until it fits inside (-radius, +radius);
// true on success. Terminates whenever the enclosed root is strictly inside.
inline bool refine_within(const std::vector<Rational>& coeffs, IsolatedRoot root,
                          const Rational& radius, int extra_depth = 80) {
  if (root.exact) return abs(root.lo) < radius;
  Rational lo = root.lo, hi = root.hi;
  Rational p_lo = eval_poly(coeffs, lo), p_hi = eval_poly(coeffs, hi);
  for (int i = 0; i < extra_depth; ++i) {
    if (abs(lo) < radius && abs(hi) < radius) return true;
    const Rational mid = (lo + hi) / 2;
    const Rational p_mid = eval_poly(coeffs, mid);
    if (sign_of(p_mid) == 0) return abs(mid) < radius;
    if (sign_of(p_mid) != sign_of(p_lo)) {
      hi = mid;
      p_hi = p_mid;
    } else {
      lo = mid;
      p_lo = p_mid;
    }
  }
  return false;
}

}  // namespace onebit::oracle
