#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "onebit/errors.hpp"
#include "onebit/harness.hpp"
#include "onebit/io.hpp"
#include "onebit/rng.hpp"

using namespace onebit;

namespace {

SignalFamilyDesc pm_one() {
  SignalFamilyDesc fam;
  fam.values = {Rational(1), Rational(-1)};
  return fam;
}

}  // namespace

TEST_CASE("exhaustive family counting") {
  auto fam = pm_one();
  CHECK(exhaustive_family(fam, 4, 1).size() == 8);  // 4 supports x 2 values
  fam.include_zero = true;
  CHECK(exhaustive_family(fam, 4, 1).size() == 9);
}

TEST_CASE("kappa filter keeps only equal-magnitude signals") {
  SignalFamilyDesc fam;
  fam.values = {Rational(1), Rational(-1), Rational(2)};
  fam.kappa_max = Rational(1);
  for (const auto& x : exhaustive_family(fam, 5, 2))
    CHECK(dynamic_range(x) == Rational(1));
}

TEST_CASE("rho filter bounds the minority sign count") {
  SignalFamilyDesc fam;
  fam.values = {Rational(1), Rational(-1)};
  fam.rho_max = 0;
  for (const auto& x : exhaustive_family(fam, 5, 3))
    CHECK(min_same_sign_count(x) == 0);
}

TEST_CASE("family enumeration is deterministic") {
  auto fam = pm_one();
  fam.include_zero = true;
  const auto a = exhaustive_family(fam, 6, 2);
  const auto b = exhaustive_family(fam, 6, 2);
  CHECK(a == b);
}

TEST_CASE("family enumeration respects the cap") {
  SignalFamilyDesc fam;
  fam.values = {Rational(1), Rational(-1)};
  CHECK_THROWS_AS(exhaustive_family(fam, 24, 12, 1000), InstanceTooLarge);
}

TEST_CASE("random signals are reproducible by seed") {
  auto fam = pm_one();
  Rng r1(9), r2(9);
  for (int i = 0; i < 50; ++i)
    CHECK(random_signal(fam, 8, 3, r1) == random_signal(fam, 8, 3, r2));
}

TEST_CASE("config parsing") {
  std::istringstream in(
      "# comment\n"
      "regime = approx\n"
      "n = 12\n"
      "k = 2\n"
      "eps = 1/1\n"
      "trials = exhaustive\n"
      "values = 1/1, -1/1, 2/1, -2/1\n"
      "include_zero = true\n"
      "seed = 7\n"
      "output = out.csv\n");
  const auto cfg = parse_config(in);
  CHECK(cfg.regime == Regime::approx);
  CHECK(cfg.n == 12);
  CHECK(cfg.k == 2);
  CHECK(cfg.eps == Rational(1));
  CHECK_FALSE(cfg.trials.has_value());
  CHECK(cfg.family.values.size() == 4);
  CHECK(cfg.family.include_zero);
  CHECK(cfg.seed == 7);
  CHECK(cfg.output_path == "out.csv");

  std::istringstream bad("regime = approx\nnope = 1\n");
  CHECK_THROWS_AS(parse_config(bad), std::invalid_argument);
}

TEST_CASE("zero-trial experiments produce an empty table") {
  ExperimentConfig cfg;
  cfg.regime = Regime::approx;
  cfg.n = 9;
  cfg.k = 2;
  cfg.eps = Rational(1);
  cfg.trials = 0;
  cfg.family = pm_one();
  cfg.seed = 4;
  const auto table = run_experiment(cfg);
  CHECK(table.trial_count == 0);
  CHECK(table.rows.empty());
  CHECK(table.max_false_positives == 0);
  CHECK(table.max_false_negatives == 0);
  CHECK(table.superset_violations == 0);
}

TEST_CASE("experiment summaries are recomputable from the rows") {
  ExperimentConfig cfg;
  cfg.regime = Regime::superset;
  cfg.n = 9;
  cfg.k = 2;
  cfg.eps = Rational(1);
  cfg.family = pm_one();
  cfg.family.include_zero = true;
  cfg.seed = 11;
  const auto table = run_experiment(cfg);
  CHECK(table.trial_count == static_cast<int>(table.rows.size()));
  int max_fp = 0, max_fn = 0;
  for (const auto& row : table.rows) {
    max_fp = std::max(max_fp, row.false_positives);
    max_fn = std::max(max_fn, row.false_negatives);
  }
  CHECK(table.max_false_positives == max_fp);
  CHECK(table.max_false_negatives == max_fn);
  CHECK(table.superset_violations == 0);
}

TEST_CASE("experiment CSV output is byte-identical across runs") {
  ExperimentConfig cfg;
  cfg.regime = Regime::approx;
  cfg.n = 9;
  cfg.k = 2;
  cfg.eps = Rational(1);
  cfg.family = pm_one();
  cfg.seed = 21;
  std::ostringstream a, b;
  write_results_csv(a, run_experiment(cfg));
  write_results_csv(b, run_experiment(cfg));
  CHECK(a.str() == b.str());
  CHECK(a.str().find("summary,") != std::string::npos);
}

TEST_CASE("signal files round-trip") {
  std::map<int, Rational> m{{1, Rational(3, 7)}, {4, Rational(-2)}};
  const SparseSignal x(6, m);
  std::stringstream buf;
  write_signal(buf, x);
  CHECK(read_signal(buf) == x);
}

TEST_CASE("design files round-trip") {
  DesignParams p{10, 2, 1, Rational(1, 2), std::nullopt, 13};
  for (const bool union_free : {false, true}) {
    const auto d = union_free ? construct_list_union_free(p)
                              : construct_list_disjunct(p);
    std::stringstream buf;
    write_design(buf, d);
    const auto back = read_design(buf);
    CHECK(back.rows() == d.rows());
    CHECK(back.cols() == d.cols());
    CHECK(back.columns() == d.columns());
    CHECK(back.seed == d.seed);
    CHECK(back.check()->certified == d.check()->certified);
    CHECK(back.check()->property == d.check()->property);
  }
}

TEST_CASE("matrix files round-trip for every regime") {
  std::vector<SensingMatrix> matrices;
  matrices.push_back(build_approx_matrix(12, 2, Rational(1), 3));
  matrices.push_back(build_superset_matrix(12, 2, Rational(1), 5));
  matrices.push_back(
      build_bounded_range_matrix(12, 2, Rational(1, 2), Rational(3), 2));
  matrices.push_back(build_same_sign_matrix(12, 2, Rational(1, 2), 1, 9));
  matrices.push_back(build_gaussian_matrix(5, 4, 17));
  for (const auto& a : matrices) {
    std::stringstream buf;
    write_matrix(buf, a);
    const auto back = read_matrix(buf);
    CHECK(back.regime == a.regime);
    CHECK(back.n == a.n);
    CHECK(back.m() == a.m());
    CHECK(back.k == a.k);
    CHECK(back.eps == a.eps);
    CHECK(back.split == a.split);
    CHECK(back.group == a.group);
    CHECK(back.seed == a.seed);
    for (int r = 0; r < a.m(); ++r) {
      if (const auto* br = std::get_if<BinaryRow>(&a.rows[r])) {
        CHECK(std::get<BinaryRow>(back.rows[r]).support == br->support);
      } else if (const auto* pr = std::get_if<PowerRow>(&a.rows[r])) {
        CHECK(std::get<PowerRow>(back.rows[r]).support == pr->support);
        CHECK(std::get<PowerRow>(back.rows[r]).base == pr->base);
      } else {
        CHECK(std::get<DenseRow>(back.rows[r]).values ==
              std::get<DenseRow>(a.rows[r]).values);
      }
    }
    if (a.stage1) {
      CHECK(back.stage1.has_value());
      CHECK(back.stage1->columns() == a.stage1->columns());
    }
    if (a.disjunct) {
      CHECK(back.disjunct.has_value());
      CHECK(back.disjunct->columns() == a.disjunct->columns());
    }
    // a measurement against the reloaded matrix matches the original
    std::map<int, Rational> e{{0, Rational(1)}, {3, Rational(-1, 2)}};
    const SparseSignal x(a.n, e);
    CHECK(measure(back, x).entries == measure(a, x).entries);
  }
}

TEST_CASE("measurement files round-trip") {
  MeasurementVector y;
  y.entries = {1, 0, -1, 1, 0};
  y.mode = SignMode::ternary;
  std::stringstream buf;
  write_measurement(buf, y);
  const auto back = read_measurement(buf);
  CHECK(back == y);
}

TEST_CASE("report rows carry the full bookkeeping") {
  const auto a = build_approx_matrix(9, 2, Rational(1), 21);
  std::map<int, Rational> e{{2, Rational(1)}, {5, Rational(-2)}};
  const SparseSignal x(9, e);
  const auto rep = decode_approximate(a, measure(a, x), 2, Rational(1), support(x));
  const auto row = report_csv_row(rep);
  CHECK(row.find("approx,9,") == 0);
  CHECK(report_csv_header().find("superset_ok") != std::string::npos);
}
