#include "onebit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "onebit/combinatorics.hpp"
#include "onebit/errors.hpp"
#include "onebit/io.hpp"

namespace onebit {
namespace {

bool passes_filters(const SignalFamilyDesc& desc, const SparseSignal& x) {
  if (desc.kappa_max && x.l0() > 0 && dynamic_range(x) > *desc.kappa_max)
    return false;
  if (desc.rho_max && min_same_sign_count(x) > *desc.rho_max) return false;
  return true;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<SparseSignal> exhaustive_family(const SignalFamilyDesc& desc_in, int n,
                                            int k, std::uint64_t cap) {
  SignalFamilyDesc desc = desc_in;
  for (auto& v : desc.values) v.canonicalize();
  if (desc.kappa_max) desc.kappa_max->canonicalize();
  if (n < 1 || k < 0 || k > n)
    throw std::invalid_argument("family needs 1 <= n and 0 <= k <= n");
  if (k > 0 && desc.values.empty())
    throw std::invalid_argument("family needs a nonempty value set");
  const auto vcount = static_cast<std::uint64_t>(desc.values.size());
  std::uint64_t total = desc.include_zero ? 1 : 0;
  for (int s = 1; s <= k; ++s) {
    std::uint64_t per = binomial_saturating(n, s);
    for (int i = 0; i < s; ++i) per = saturating_mul(per, vcount);
    total += per;
    if (total > cap)
      throw InstanceTooLarge("family enumeration exceeds the cap of " +
                             std::to_string(cap) + " signals");
  }

  std::vector<SparseSignal> out;
  if (desc.include_zero) out.emplace_back(n);
  for (int s = 1; s <= k; ++s) {
    auto combo = first_combination(s);
    do {
      std::vector<std::size_t> odo(s, 0);
      for (;;) {
        std::map<int, Rational> entries;
        for (int i = 0; i < s; ++i) entries[combo[i]] = desc.values[odo[i]];
        SparseSignal x(n, std::move(entries));
        if (passes_filters(desc, x)) out.push_back(std::move(x));
        // odometer: the last support position cycles fastest
        int pos = s - 1;
        while (pos >= 0 && ++odo[pos] == desc.values.size()) odo[pos--] = 0;
        if (pos < 0) break;
      }
    } while (next_combination(combo, n));
  }
  return out;
}

SparseSignal random_signal(const SignalFamilyDesc& desc, int n, int k, Rng& rng) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("random signal needs 1 <= k <= n");
  if (desc.values.empty())
    throw std::invalid_argument("random signal needs a nonempty value set");
  for (int tries = 0; tries < 1000; ++tries) {
    const int s = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    std::vector<int> supp;
    while (static_cast<int>(supp.size()) < s) {
      const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      if (std::find(supp.begin(), supp.end(), j) == supp.end()) supp.push_back(j);
    }
    std::sort(supp.begin(), supp.end());
    std::map<int, Rational> entries;
    for (int j : supp)
      entries[j] = desc.values[rng.below(desc.values.size())];
    SparseSignal x(n, std::move(entries));
    if (passes_filters(desc, x)) return x;
  }
  throw std::runtime_error("family filters rejected 1000 consecutive draws");
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  bool have_regime = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  " is not 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "regime") {
      cfg.regime = regime_from_name(value);
      have_regime = true;
    } else if (key == "n") {
      cfg.n = static_cast<int>(std::stol(value));
    } else if (key == "k") {
      cfg.k = static_cast<int>(std::stol(value));
    } else if (key == "eps") {
      cfg.eps = rational_from_string(value);
    } else if (key == "eta") {
      cfg.eta = rational_from_string(value);
    } else if (key == "R") {
      cfg.same_sign_bound = static_cast<int>(std::stol(value));
    } else if (key == "m") {
      cfg.gaussian_m = static_cast<int>(std::stol(value));
    } else if (key == "trials") {
      if (value == "exhaustive")
        cfg.trials = std::nullopt;
      else
        cfg.trials = static_cast<int>(std::stol(value));
    } else if (key == "values") {
      cfg.family.values.clear();
      std::istringstream vs(value);
      std::string item;
      while (std::getline(vs, item, ','))
        cfg.family.values.push_back(rational_from_string(trim(item)));
    } else if (key == "include_zero") {
      if (value != "true" && value != "false")
        throw std::invalid_argument("include_zero must be true or false");
      cfg.family.include_zero = value == "true";
    } else if (key == "kappa_max") {
      cfg.family.kappa_max = rational_from_string(value);
    } else if (key == "rho_max") {
      cfg.family.rho_max = static_cast<int>(std::stol(value));
    } else if (key == "seed") {
      cfg.seed = std::stoull(value);
    } else if (key == "output") {
      cfg.output_path = value;
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
  if (!have_regime) throw std::invalid_argument("config needs a regime");
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  return parse_config(in);
}

ResultsTable run_experiment(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t matrix_seed = derive_seed(cfg.seed, 0);

  SensingMatrix matrix;
  switch (cfg.regime) {
    case Regime::approx:
      matrix = build_approx_matrix(cfg.n, cfg.k, cfg.eps, matrix_seed);
      break;
    case Regime::superset:
      matrix = build_superset_matrix(cfg.n, cfg.k, cfg.eps, matrix_seed);
      break;
    case Regime::bounded_range:
      matrix = build_bounded_range_matrix(cfg.n, cfg.k, cfg.eps, cfg.eta,
                                          matrix_seed);
      break;
    case Regime::same_sign:
      matrix = build_same_sign_matrix(cfg.n, cfg.k, cfg.eps,
                                      cfg.same_sign_bound, matrix_seed);
      break;
    case Regime::gaussian:
      matrix = build_gaussian_matrix(cfg.n, cfg.gaussian_m, matrix_seed);
      break;
  }

  std::vector<SparseSignal> signals;
  if (cfg.trials) {
    if (*cfg.trials < 0)
      throw std::invalid_argument("trial count must be >= 0");
    signals.reserve(*cfg.trials);
    for (int i = 0; i < *cfg.trials; ++i) {
      Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(i) + 1));
      signals.push_back(random_signal(cfg.family, cfg.n, cfg.k, rng));
    }
  } else {
    signals = exhaustive_family(cfg.family, cfg.n, cfg.k);
  }

  ResultsTable table;
  table.rows.reserve(signals.size());
  const Rational eps_k = cfg.eps * cfg.k;
  for (std::size_t i = 0; i < signals.size(); ++i) {
    const SparseSignal& x = signals[i];
    const auto ref = support(x);
    const SignMode mode =
        cfg.regime == Regime::gaussian ? SignMode::strict : SignMode::ternary;
    const auto y = measure(matrix, x, mode);
    RecoveryReport report;
    try {
      switch (cfg.regime) {
        case Regime::approx:
          report = decode_approximate(matrix, y, cfg.k, cfg.eps, ref);
          break;
        case Regime::superset:
          report = decode_superset(matrix, y, cfg.k, cfg.eps, ref);
          break;
        case Regime::bounded_range:
          report = decode_superset_bounded_range(matrix, y, cfg.k, cfg.eps,
                                                 cfg.eta, ref);
          break;
        case Regime::same_sign:
          report = decode_superset_same_sign(matrix, y, cfg.k, cfg.eps,
                                             cfg.same_sign_bound, ref);
          break;
        case Regime::gaussian: {
          const auto xh = decode_l0_bruteforce(matrix, y, cfg.k, cfg.eta);
          report = make_report(matrix, support(xh), cfg.k, cfg.eps, ref);
          break;
        }
      }
    } catch (const std::exception& e) {
      throw std::runtime_error("trial " + std::to_string(i) + ": " + e.what());
    }
    report.seed = derive_seed(cfg.seed, i + 1);
    table.max_false_positives =
        std::max(table.max_false_positives, report.false_positives);
    table.max_false_negatives =
        std::max(table.max_false_negatives, report.false_negatives);
    // contract violations, per the regime's own guarantee
    bool violation;
    if (cfg.regime == Regime::approx || cfg.regime == Regime::gaussian) {
      violation = static_cast<int>(report.returned.size()) > cfg.k ||
                  Rational(report.false_positives) > eps_k ||
                  Rational(report.false_negatives) > eps_k;
    } else {
      violation = report.false_negatives > 0 ||
                  Rational(static_cast<long>(report.returned.size())) >
                      Rational(report.signal_l0) + eps_k;
    }
    if (violation) ++table.superset_violations;
    table.rows.push_back(std::move(report));
  }
  table.trial_count = static_cast<int>(table.rows.size());
  table.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  if (!cfg.output_path.empty()) {
    std::ofstream out(cfg.output_path);
    if (!out)
      throw std::runtime_error("cannot open output: " + cfg.output_path);
    write_results_csv(out, table);
  }
  return table;
}

void write_results_csv(std::ostream& out, const ResultsTable& table) {
  out << report_csv_header() << "\n";
  for (const auto& row : table.rows) out << report_csv_row(row) << "\n";
  out << "summary,trials=" << table.trial_count
      << ",max_fp=" << table.max_false_positives
      << ",max_fn=" << table.max_false_negatives
      << ",superset_violations=" << table.superset_violations << "\n";
}

}  // namespace onebit
