#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "onebit/rational.hpp"
#include "onebit/recovery.hpp"
#include "onebit/rng.hpp"
#include "onebit/sensing.hpp"
#include "onebit/signals.hpp"

namespace onebit {

// Entry value set plus optional family filters.
struct SignalFamilyDesc {
  std::vector<Rational> values;
  bool include_zero = false;
  std::optional<Rational> kappa_max;  // keep only kappa(x) <= kappa_max
  std::optional<int> rho_max;         // keep only rho(x) <= rho_max
};

inline constexpr std::uint64_t kDefaultFamilyCap = 10'000'000;

// Every signal with support size 1..k and entries from the value set, in
// deterministic order: the zero signal first when requested, then supports in
// ascending size and lexicographic order with value assignments cycling the
// last support position fastest. Filters drop non-conforming signals. Throws
// InstanceTooLarge when the unfiltered count exceeds cap.
std::vector<SparseSignal> exhaustive_family(const SignalFamilyDesc& desc, int n,
                                            int k,
                                            std::uint64_t cap = kDefaultFamilyCap);

// One seeded draw: support size uniform in [1,k], support uniform, values
// uniform from the value set; redrawn until the filters pass.
SparseSignal random_signal(const SignalFamilyDesc& desc, int n, int k, Rng& rng);

struct ExperimentConfig {
  Regime regime = Regime::approx;
  int n = 0;
  int k = 0;
  Rational eps{1, 2};
  Rational eta;
  int same_sign_bound = 0;
  int gaussian_m = 0;               // gaussian regime: explicit row count
  std::optional<int> trials;        // nullopt = exhaustive family
  SignalFamilyDesc family;
  std::uint64_t seed = 0;
  std::string output_path;          // empty = do not write
};

// Line-based "key = value" config; rationals written p/q; '#' comments.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

struct ResultsTable {
  std::vector<RecoveryReport> rows;
  int trial_count = 0;
  int max_false_positives = 0;
  int max_false_negatives = 0;
  int superset_violations = 0;
  double wall_seconds = 0;  // in-memory only, never serialized
};

// Builds the regime's matrix (seed derive_seed(master,0)), measures and
// decodes every signal in the family (trial i uses derive_seed(master,i+1)),
// and writes the CSV when output_path is set. Rows appear in trial order; the
// summary line comes last.
ResultsTable run_experiment(const ExperimentConfig& config);

void write_results_csv(std::ostream& out, const ResultsTable& table);

}  // namespace onebit
