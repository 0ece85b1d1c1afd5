// Command-line front end: construct, verify, measure, decode, adversary,
// budget, experiment.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "onebit/analysis.hpp"
#include "onebit/harness.hpp"
#include "onebit/io.hpp"
#include "onebit/recovery.hpp"

using namespace onebit;

namespace {

std::string violation_text(const Violation& v) {
  std::string s = "S={";
  for (std::size_t i = 0; i < v.s_set.size(); ++i)
    s += (i ? "," : "") + std::to_string(v.s_set[i] + 1);
  s += "} T={";
  for (std::size_t i = 0; i < v.t_set.size(); ++i)
    s += (i ? "," : "") + std::to_string(v.t_set[i] + 1);
  s += "}";
  return s;
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"universal 1-bit support recovery toolkit"};
  app.require_subcommand(1);

  // ---- construct ----------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "emit a design or matrix file");
  construct->require_subcommand(1);

  struct {
    std::string property = "list-disjunct";
    int n = 0, k = 0, l = 1;
    std::string alpha = "1/2";
    int target_m = 0;
    std::uint64_t seed = 0;
    std::string out;
  } dc;
  auto* cdesign = construct->add_subcommand("design", "randomized certified design");
  cdesign->add_option("--property", dc.property, "list-disjunct|list-union-free")
      ->check(CLI::IsMember({"list-disjunct", "list-union-free"}));
  cdesign->add_option("-n", dc.n, "columns")->required();
  cdesign->add_option("-k", dc.k, "covered-set size")->required();
  cdesign->add_option("-l", dc.l, "list size");
  cdesign->add_option("--alpha", dc.alpha, "overlap fraction p/q");
  cdesign->add_option("--target-m", dc.target_m, "row budget override");
  cdesign->add_option("--seed", dc.seed, "master seed");
  cdesign->add_option("-o,--output", dc.out, "output file")->required();
  cdesign->callback([&] {
    DesignParams p;
    p.n = dc.n;
    p.k = dc.k;
    p.l = dc.l;
    p.alpha = rational_from_string(dc.alpha);
    if (dc.target_m > 0) p.target_m = dc.target_m;
    p.seed = dc.seed;
    const auto design = dc.property == "list-disjunct"
                            ? construct_list_disjunct(p)
                            : construct_list_union_free(p);
    save_design(dc.out, design);
    std::cout << "design m=" << design.rows() << " status="
              << (design.check()->certified ? "certified" : "unverified")
              << " -> " << dc.out << "\n";
  });

  struct {
    std::string regime;
    int n = 0, k = 0, R = 0, m = 0;
    std::string eps = "1/2", eta = "2/1";
    std::uint64_t seed = 0;
    std::string out;
  } mc;
  auto* cmatrix = construct->add_subcommand("matrix", "sensing matrix");
  cmatrix->add_option("--regime", mc.regime,
                      "approx|superset|bounded-range|same-sign|gaussian")
      ->required()
      ->check(CLI::IsMember(
          {"approx", "superset", "bounded-range", "same-sign", "gaussian"}));
  cmatrix->add_option("-n", mc.n, "signal dimension")->required();
  cmatrix->add_option("-k", mc.k, "sparsity");
  cmatrix->add_option("--eps", mc.eps, "error fraction p/q");
  cmatrix->add_option("--eta", mc.eta, "dynamic-range bound p/q");
  cmatrix->add_option("-R", mc.R, "same-sign bound");
  cmatrix->add_option("-m", mc.m, "rows (gaussian)");
  cmatrix->add_option("--seed", mc.seed, "master seed");
  cmatrix->add_option("-o,--output", mc.out, "output file")->required();
  cmatrix->callback([&] {
    SensingMatrix a;
    const Regime regime = regime_from_name(mc.regime);
    switch (regime) {
      case Regime::approx:
        a = build_approx_matrix(mc.n, mc.k, rational_from_string(mc.eps), mc.seed);
        break;
      case Regime::superset:
        a = build_superset_matrix(mc.n, mc.k, rational_from_string(mc.eps), mc.seed);
        break;
      case Regime::bounded_range:
        a = build_bounded_range_matrix(mc.n, mc.k, rational_from_string(mc.eps),
                                       rational_from_string(mc.eta), mc.seed);
        break;
      case Regime::same_sign:
        a = build_same_sign_matrix(mc.n, mc.k, rational_from_string(mc.eps),
                                   mc.R, mc.seed);
        break;
      case Regime::gaussian:
        a = build_gaussian_matrix(mc.n, mc.m, mc.seed);
        break;
    }
    save_matrix(mc.out, a);
    std::cout << "matrix regime=" << regime_name(a.regime) << " m=" << a.m()
              << " -> " << mc.out << "\n";
  });

  // ---- verify -------------------------------------------------------------
  struct {
    std::string design;
    int k = 0, l = 0;
    std::string alpha;
  } vc;
  auto* verify = app.add_subcommand("verify", "certify a design file");
  verify->add_option("--design", vc.design, "design file")->required();
  verify->add_option("-k", vc.k, "covered-set size (default: header)");
  verify->add_option("-l", vc.l, "list size (default: header)");
  verify->add_option("--alpha", vc.alpha, "overlap fraction (default: header)");
  verify->callback([&] {
    auto design = load_design(vc.design);
    DesignCheck check = *design.check();
    if (vc.k > 0) check.k = vc.k;
    if (vc.l > 0) check.l = vc.l;
    if (!vc.alpha.empty()) check.alpha = rational_from_string(vc.alpha);
    std::optional<Violation> violation;
    if (check.property == DesignProperty::list_disjunct)
      violation = find_list_disjunct_violation(design, check.k, check.l);
    else
      violation =
          find_list_union_free_violation(design, check.k, check.l, check.alpha);
    if (violation)
      throw std::runtime_error("not certified, violating pair " +
                               violation_text(*violation));
    std::cout << "certified\n";
  });

  // ---- measure --------------------------------------------------------------
  struct {
    std::string matrix, signal, mode = "ternary", out;
    double tau = 0.0;
  } me;
  auto* measure_cmd = app.add_subcommand("measure", "y = sign(Ax)");
  measure_cmd->add_option("--matrix", me.matrix, "matrix file")->required();
  measure_cmd->add_option("--signal", me.signal, "signal file")->required();
  measure_cmd->add_option("--mode", me.mode, "ternary|strict")
      ->check(CLI::IsMember({"ternary", "strict"}));
  measure_cmd->add_option("--tau", me.tau, "dense zero threshold");
  measure_cmd->add_option("-o,--output", me.out, "output file (default stdout)");
  measure_cmd->callback([&] {
    const auto a = load_matrix(me.matrix);
    const auto x = load_signal(me.signal);
    const auto y = measure(
        a, x, me.mode == "strict" ? SignMode::strict : SignMode::ternary, me.tau);
    std::ostringstream buf;
    write_measurement(buf, y);
    write_or_print(me.out, buf.str());
  });

  // ---- decode ---------------------------------------------------------------
  struct {
    std::string matrix, measurement, reference, out, eta = "2/1";
    int k = 0;
  } de;
  auto* decode = app.add_subcommand("decode", "matrix + measurement -> report");
  decode->add_option("--matrix", de.matrix, "matrix file")->required();
  decode->add_option("--measurement", de.measurement, "measurement file")
      ->required();
  decode->add_option("--reference", de.reference, "reference signal file");
  decode->add_option("--eta", de.eta, "dynamic-range bound (gaussian)");
  decode->add_option("-k", de.k, "sparsity (gaussian)");
  decode->add_option("-o,--output", de.out, "output file (default stdout)");
  decode->callback([&] {
    const auto a = load_matrix(de.matrix);
    const auto y = load_measurement(de.measurement);
    std::optional<std::vector<int>> ref;
    if (!de.reference.empty()) ref = support(load_signal(de.reference));
    RecoveryReport rep;
    switch (a.regime) {
      case Regime::approx:
        rep = decode_approximate(a, y, a.k, a.eps, ref);
        break;
      case Regime::superset:
        rep = decode_superset(a, y, a.k, a.eps, ref);
        break;
      case Regime::bounded_range:
        rep = decode_superset_bounded_range(a, y, a.k, a.eps, a.eta, ref);
        break;
      case Regime::same_sign:
        rep = decode_superset_same_sign(a, y, a.k, a.eps, a.same_sign_bound, ref);
        break;
      case Regime::gaussian: {
        const auto eta = rational_from_string(de.eta);
        const auto xh = decode_l0_bruteforce(a, y, de.k, eta);
        rep = make_report(a, support(xh), de.k, Rational(0), ref);
        break;
      }
    }
    write_or_print(de.out, report_csv_header() + "\n" + report_csv_row(rep) + "\n");
  });

  // ---- adversary -----------------------------------------------------------
  struct {
    std::string matrix, eps = "1/4", out;
    int k = 0;
    std::uint64_t seed = 0;
  } ad;
  auto* adversary = app.add_subcommand("adversary", "search for a confusable pair");
  adversary->add_option("--matrix", ad.matrix, "matrix file")->required();
  adversary->add_option("-k", ad.k, "sparsity")->required();
  adversary->add_option("--eps", ad.eps, "error fraction p/q");
  adversary->add_option("--seed", ad.seed, "resampling seed");
  adversary->add_option("--out", ad.out, "write <out>.x1 and <out>.x2");
  adversary->callback([&] {
    const auto a = load_matrix(ad.matrix);
    const auto pair =
        adversarial_pair(a, ad.k, rational_from_string(ad.eps), ad.seed);
    if (!pair) {
      std::cout << "none\n";
      return;
    }
    std::cout << "pair " << violation_text({pair->s_set, pair->t_set}) << "\n";
    if (!ad.out.empty()) {
      save_signal(ad.out + ".x1", pair->x1);
      save_signal(ad.out + ".x2", pair->x2);
    }
  });

  // ---- budget ---------------------------------------------------------------
  struct {
    std::string problem = "approximate", cls = "general", eps = "1/2",
                eta = "2/1";
    std::vector<int> ks;
    int n = 0, R = 0;
    bool csv = false;
  } bu;
  auto* budget = app.add_subcommand("budget", "default measurement count");
  budget->add_option("--problem", bu.problem, "approximate|superset|exact")
      ->check(CLI::IsMember({"approximate", "superset", "exact"}));
  budget->add_option("--class", bu.cls, "general|bounded-range|binary|gaussian")
      ->check(CLI::IsMember({"general", "bounded-range", "binary", "gaussian"}));
  budget->add_option("-n", bu.n, "signal dimension")->required();
  budget->add_option("-k", bu.ks, "sparsity (repeatable)")->required();
  budget->add_option("--eps", bu.eps, "error fraction p/q");
  budget->add_option("--eta", bu.eta, "dynamic-range bound p/q");
  budget->add_option("-R", bu.R, "same-sign bound");
  budget->add_flag("--csv", bu.csv, "emit a CSV table");
  budget->callback([&] {
    BudgetQuery q;
    q.problem = bu.problem == "approximate" ? BudgetProblem::approximate
                : bu.problem == "superset"  ? BudgetProblem::superset
                                            : BudgetProblem::exact;
    q.signal_class = bu.cls == "general"         ? SignalClass::general
                     : bu.cls == "bounded-range" ? SignalClass::bounded_range
                     : bu.cls == "binary"        ? SignalClass::binary
                                                 : SignalClass::gaussian;
    q.n = bu.n;
    q.eps = rational_from_string(bu.eps);
    q.eta = rational_from_string(bu.eta);
    q.same_sign_bound = bu.R;
    if (bu.csv) std::cout << "regime,n,k,eps,eta,R,m\n";
    for (int k : bu.ks) {
      q.k = k;
      const auto m = measurement_budget(q);
      if (bu.csv)
        std::cout << bu.problem << "/" << bu.cls << "," << q.n << "," << k << ","
                  << rational_to_string(q.eps) << "," << rational_to_string(q.eta)
                  << "," << q.same_sign_bound << "," << m << "\n";
      else
        std::cout << m << "\n";
    }
  });

  // ---- experiment -----------------------------------------------------------
  struct {
    std::string config;
  } ex;
  auto* experiment = app.add_subcommand("experiment", "run a config file");
  experiment->add_option("--config", ex.config, "config file")->required();
  experiment->callback([&] {
    const auto cfg = load_config(ex.config);
    const auto table = run_experiment(cfg);
    std::cout << "trials=" << table.trial_count
              << " max_fp=" << table.max_false_positives
              << " max_fn=" << table.max_false_negatives
              << " superset_violations=" << table.superset_violations
              << " wall_seconds=" << table.wall_seconds << "\n";
    if (!cfg.output_path.empty())
      std::cout << "csv -> " << cfg.output_path << "\n";
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
