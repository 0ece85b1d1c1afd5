#include "onebit/io.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace onebit {
namespace {

std::vector<std::string> split(const std::string& s, char delim) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, delim)) out.push_back(item);
  return out;
}

// "key=value" tokens after a required leading word
std::map<std::string, std::string> parse_header(const std::string& line,
                                                const std::string& word) {
  std::istringstream in(line);
  std::string lead;
  if (!(in >> lead) || lead != word)
    throw std::invalid_argument("expected a '" + word + "' header line");
  std::map<std::string, std::string> kv;
  std::string tok;
  while (in >> tok) {
    const auto pos = tok.find('=');
    if (pos == std::string::npos)
      throw std::invalid_argument("malformed header token: " + tok);
    kv[tok.substr(0, pos)] = tok.substr(pos + 1);
  }
  return kv;
}

const std::string& header_get(const std::map<std::string, std::string>& kv,
                              const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end())
    throw std::invalid_argument("header is missing key: " + key);
  return it->second;
}

long parse_long(const std::string& s) {
  std::size_t used = 0;
  const long v = std::stol(s, &used);
  if (used != s.size()) throw std::invalid_argument("malformed integer: " + s);
  return v;
}

std::uint64_t parse_u64(const std::string& s) {
  std::size_t used = 0;
  const unsigned long long v = std::stoull(s, &used);
  if (used != s.size()) throw std::invalid_argument("malformed integer: " + s);
  return v;
}

std::vector<int> parse_indices_1based(std::istringstream& in, int limit) {
  std::vector<int> out;
  long idx;
  while (in >> idx) {
    if (idx < 1 || idx > limit)
      throw std::invalid_argument("index " + std::to_string(idx) +
                                  " outside [1," + std::to_string(limit) + "]");
    if (!out.empty() && static_cast<int>(idx - 1) <= out.back())
      throw std::invalid_argument("indices must be strictly ascending");
    out.push_back(static_cast<int>(idx - 1));
  }
  return out;
}

std::string getline_checked(std::istream& in, const std::string& what) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("truncated " + what + " file");
  return line;
}

}  // namespace

void write_signal(std::ostream& out, const SparseSignal& x) {
  out << "signal n=" << x.dim() << "\n";
  for (const auto& [i, v] : x.entries())
    out << (i + 1) << " " << rational_to_string(v) << "\n";
}

SparseSignal read_signal(std::istream& in) {
  const auto kv = parse_header(getline_checked(in, "signal"), "signal");
  const int n = static_cast<int>(parse_long(header_get(kv, "n")));
  std::map<int, Rational> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    long idx;
    std::string value;
    if (!(ls >> idx >> value))
      throw std::invalid_argument("malformed signal entry: " + line);
    if (idx < 1 || idx > n)
      throw std::invalid_argument("signal index out of range: " + line);
    entries[static_cast<int>(idx - 1)] = rational_from_string(value);
  }
  return SparseSignal(n, std::move(entries));
}

void write_design(std::ostream& out, const BinaryDesign& design) {
  if (!design.check())
    throw std::invalid_argument("design has no property record to serialize");
  const DesignCheck& c = *design.check();
  const auto d = design.uniform_weight();
  out << "design m=" << design.rows() << " n=" << design.cols() << " d=";
  if (d)
    out << *d;
  else
    out << "-";
  out << " property="
      << (c.property == DesignProperty::list_disjunct ? "list-disjunct"
                                                      : "list-union-free")
      << " k=" << c.k << " l=" << c.l << " alpha=";
  if (c.property == DesignProperty::list_union_free)
    out << rational_to_string(c.alpha);
  else
    out << "-";
  out << " status=" << (c.certified ? "certified" : "unverified")
      << " seed=" << design.seed << "\n";
  for (int j = 0; j < design.cols(); ++j) {
    const auto& col = design.column(j);
    for (std::size_t i = 0; i < col.size(); ++i)
      out << (i ? " " : "") << (col[i] + 1);
    out << "\n";
  }
}

BinaryDesign read_design(std::istream& in) {
  const auto kv = parse_header(getline_checked(in, "design"), "design");
  const int m = static_cast<int>(parse_long(header_get(kv, "m")));
  const int n = static_cast<int>(parse_long(header_get(kv, "n")));
  const std::string& prop = header_get(kv, "property");
  DesignCheck check;
  if (prop == "list-disjunct")
    check.property = DesignProperty::list_disjunct;
  else if (prop == "list-union-free")
    check.property = DesignProperty::list_union_free;
  else
    throw std::invalid_argument("unknown design property: " + prop);
  check.k = static_cast<int>(parse_long(header_get(kv, "k")));
  check.l = static_cast<int>(parse_long(header_get(kv, "l")));
  const std::string& alpha = header_get(kv, "alpha");
  if (alpha != "-") check.alpha = rational_from_string(alpha);
  const std::string& status = header_get(kv, "status");
  if (status != "certified" && status != "unverified")
    throw std::invalid_argument("unknown design status: " + status);
  check.certified = status == "certified";

  std::vector<std::vector<int>> columns(n);
  for (int j = 0; j < n; ++j) {
    std::istringstream ls(getline_checked(in, "design"));
    columns[j] = parse_indices_1based(ls, m);
  }
  BinaryDesign design(m, n, std::move(columns));
  const std::string& d = header_get(kv, "d");
  const auto dw = design.uniform_weight();
  if (d == "-") {
    if (dw && check.property == DesignProperty::list_union_free)
      throw std::invalid_argument("union-free design header must carry d");
  } else if (!dw || *dw != parse_long(d)) {
    throw std::invalid_argument("declared column weight does not match");
  }
  design.set_check(std::move(check));
  design.seed = parse_u64(header_get(kv, "seed"));
  return design;
}

void write_matrix(std::ostream& out, const SensingMatrix& matrix) {
  out << "matrix regime=" << regime_name(matrix.regime) << " n=" << matrix.n
      << " m=" << matrix.m() << " params=";
  switch (matrix.regime) {
    case Regime::approx:
      out << matrix.k << "," << rational_to_string(matrix.eps);
      break;
    case Regime::superset:
      out << matrix.k << "," << rational_to_string(matrix.eps) << ","
          << matrix.split << "," << matrix.group;
      break;
    case Regime::bounded_range:
      out << matrix.k << "," << rational_to_string(matrix.eps) << ","
          << rational_to_string(matrix.eta);
      break;
    case Regime::same_sign:
      out << matrix.k << "," << rational_to_string(matrix.eps) << ","
          << matrix.same_sign_bound;
      break;
    case Regime::gaussian:
      out << "-";
      break;
  }
  out << " seed=" << matrix.seed << "\n";
  out << std::setprecision(17);
  for (const Row& row : matrix.rows) {
    if (const auto* br = std::get_if<BinaryRow>(&row)) {
      out << "B";
      for (int j : br->support) out << " " << (j + 1);
      out << "\n";
    } else if (const auto* pr = std::get_if<PowerRow>(&row)) {
      out << "P a=" << rational_to_string(pr->base);
      for (int j : pr->support) out << " " << (j + 1);
      out << "\n";
    } else {
      const auto& dr = std::get<DenseRow>(row);
      out << "D";
      for (double v : dr.values) out << " " << v;
      out << "\n";
    }
  }
}

SensingMatrix read_matrix(std::istream& in) {
  const auto kv = parse_header(getline_checked(in, "matrix"), "matrix");
  SensingMatrix a;
  a.regime = regime_from_name(header_get(kv, "regime"));
  a.n = static_cast<int>(parse_long(header_get(kv, "n")));
  const int m = static_cast<int>(parse_long(header_get(kv, "m")));
  a.seed = parse_u64(header_get(kv, "seed"));
  const auto params = split(header_get(kv, "params"), ',');
  switch (a.regime) {
    case Regime::approx:
      if (params.size() != 2)
        throw std::invalid_argument("approx params need k,eps");
      a.k = static_cast<int>(parse_long(params[0]));
      a.eps = rational_from_string(params[1]);
      break;
    case Regime::superset:
      if (params.size() != 4)
        throw std::invalid_argument("superset params need k,eps,split,group");
      a.k = static_cast<int>(parse_long(params[0]));
      a.eps = rational_from_string(params[1]);
      a.split = static_cast<int>(parse_long(params[2]));
      a.group = static_cast<int>(parse_long(params[3]));
      if (a.split < 0 || a.split > m || a.group < 1)
        throw std::invalid_argument("superset split/group out of range");
      break;
    case Regime::bounded_range:
      if (params.size() != 3)
        throw std::invalid_argument("bounded-range params need k,eps,eta");
      a.k = static_cast<int>(parse_long(params[0]));
      a.eps = rational_from_string(params[1]);
      a.eta = rational_from_string(params[2]);
      a.group = 1;
      break;
    case Regime::same_sign:
      if (params.size() != 3)
        throw std::invalid_argument("same-sign params need k,eps,R");
      a.k = static_cast<int>(parse_long(params[0]));
      a.eps = rational_from_string(params[1]);
      a.same_sign_bound = static_cast<int>(parse_long(params[2]));
      a.group = 2 * a.same_sign_bound + 1;
      break;
    case Regime::gaussian:
      if (params.size() != 1 || params[0] != "-")
        throw std::invalid_argument("gaussian params must be '-'");
      break;
  }

  for (int r = 0; r < m; ++r) {
    std::istringstream ls(getline_checked(in, "matrix"));
    std::string tag;
    if (!(ls >> tag)) throw std::invalid_argument("empty matrix row line");
    if (tag == "B") {
      a.rows.emplace_back(BinaryRow{parse_indices_1based(ls, a.n)});
    } else if (tag == "P") {
      std::string base_tok;
      if (!(ls >> base_tok) || base_tok.rfind("a=", 0) != 0)
        throw std::invalid_argument("power row needs a=<p/q>");
      PowerRow pr;
      pr.base = rational_from_string(base_tok.substr(2));
      if (!(pr.base > 0))
        throw std::invalid_argument("power-row base must be positive");
      pr.support = parse_indices_1based(ls, a.n);
      a.rows.emplace_back(std::move(pr));
    } else if (tag == "D") {
      DenseRow dr;
      double v;
      while (ls >> v) dr.values.push_back(v);
      if (static_cast<int>(dr.values.size()) != a.n)
        throw std::invalid_argument("dense row length does not match n");
      a.rows.emplace_back(std::move(dr));
    } else {
      throw std::invalid_argument("unknown matrix row tag: " + tag);
    }
  }

  // rebuild the designs a decoder needs from the row structure
  const auto binary_block_design = [&](int rows_begin, int rows_end) {
    std::vector<std::vector<int>> cols(a.n);
    for (int r = rows_begin; r < rows_end; ++r) {
      const auto* br = std::get_if<BinaryRow>(&a.rows[r]);
      if (!br)
        throw std::invalid_argument("expected a binary row in the leading block");
      for (int j : br->support) cols[j].push_back(r - rows_begin);
    }
    return BinaryDesign(rows_end - rows_begin, a.n, std::move(cols));
  };
  const auto power_group_design = [&](int rows_begin, int group) {
    const int total = m - rows_begin;
    if (group < 1 || total % group != 0)
      throw std::invalid_argument("power rows do not split into groups");
    const int zrows = total / group;
    std::vector<std::vector<int>> cols(a.n);
    for (int g = 0; g < zrows; ++g) {
      const auto* first = std::get_if<PowerRow>(&a.rows[rows_begin + g * group]);
      if (!first) throw std::invalid_argument("expected a power row");
      for (int i = 1; i < group; ++i) {
        const auto* pr =
            std::get_if<PowerRow>(&a.rows[rows_begin + g * group + i]);
        if (!pr || pr->support != first->support)
          throw std::invalid_argument("power group supports disagree");
      }
      for (int j : first->support) cols[j].push_back(g);
    }
    return BinaryDesign(zrows, a.n, std::move(cols));
  };

  switch (a.regime) {
    case Regime::approx: {
      a.split = m;
      auto design = binary_block_design(0, m);
      const long l = std::max<long>(1, floor_long(Rational(a.eps * a.k / 2)));
      design.set_check({DesignProperty::list_union_free, a.k,
                        static_cast<int>(l), Rational(1, 2), false});
      a.stage1 = std::move(design);
      break;
    }
    case Regime::superset: {
      auto stage1 = binary_block_design(0, a.split);
      const Rational ek = a.eps * a.k;
      const long l1 = std::max<long>(1, floor_sqrt(Rational(ek / 4)).get_si());
      stage1.set_check({DesignProperty::list_union_free, a.k,
                        static_cast<int>(l1), Rational(1, 2), false});
      a.stage1 = std::move(stage1);
      auto disjunct = power_group_design(a.split, a.group);
      const int big_k = a.k + static_cast<int>(ceil_sqrt(ek).get_si());
      const long l2 = std::max<long>(1, floor_long(Rational(ek / 2)));
      disjunct.set_check({DesignProperty::list_disjunct, big_k,
                          static_cast<int>(l2), Rational(), false});
      a.disjunct = std::move(disjunct);
      break;
    }
    case Regime::bounded_range:
    case Regime::same_sign: {
      auto disjunct = power_group_design(0, a.group);
      const long l = std::max<long>(1, floor_long(Rational(a.eps * a.k)));
      disjunct.set_check({DesignProperty::list_disjunct, a.k,
                          static_cast<int>(l), Rational(), false});
      a.disjunct = std::move(disjunct);
      break;
    }
    case Regime::gaussian:
      break;
  }
  return a;
}

void write_measurement(std::ostream& out, const MeasurementVector& y) {
  for (std::size_t i = 0; i < y.entries.size(); ++i)
    out << (i ? " " : "") << y.entries[i];
  out << "\n";
}

MeasurementVector read_measurement(std::istream& in) {
  MeasurementVector y;
  std::istringstream ls(getline_checked(in, "measurement"));
  int v;
  while (ls >> v) {
    if (v < -1 || v > 1)
      throw std::invalid_argument("measurement entries must be in {-1,0,1}");
    y.entries.push_back(v);
  }
  y.mode = SignMode::ternary;
  return y;
}

std::string report_csv_header() {
  return "regime,n,m,k,eps,seed,signal_l0,returned_size,false_positives,"
         "false_negatives,superset_ok";
}

std::string report_csv_row(const RecoveryReport& report) {
  std::ostringstream out;
  out << regime_name(report.regime) << "," << report.n << "," << report.m << ","
      << report.k << "," << rational_to_string(report.eps) << "," << report.seed
      << "," << report.signal_l0 << "," << report.returned.size() << ","
      << report.false_positives << "," << report.false_negatives << ","
      << (report.superset_ok ? 1 : 0);
  return out.str();
}

namespace {

template <typename WriteFn>
void save_to(const std::string& path, WriteFn&& fn) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  fn(out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

template <typename ReadFn>
auto load_from(const std::string& path, ReadFn&& fn) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return fn(in);
}

}  // namespace

void save_signal(const std::string& path, const SparseSignal& x) {
  save_to(path, [&](std::ostream& out) { write_signal(out, x); });
}
SparseSignal load_signal(const std::string& path) {
  return load_from(path, [](std::istream& in) { return read_signal(in); });
}
void save_design(const std::string& path, const BinaryDesign& design) {
  save_to(path, [&](std::ostream& out) { write_design(out, design); });
}
BinaryDesign load_design(const std::string& path) {
  return load_from(path, [](std::istream& in) { return read_design(in); });
}
void save_matrix(const std::string& path, const SensingMatrix& matrix) {
  save_to(path, [&](std::ostream& out) { write_matrix(out, matrix); });
}
SensingMatrix load_matrix(const std::string& path) {
  return load_from(path, [](std::istream& in) { return read_matrix(in); });
}
void save_measurement(const std::string& path, const MeasurementVector& y) {
  save_to(path, [&](std::ostream& out) { write_measurement(out, y); });
}
MeasurementVector load_measurement(const std::string& path) {
  return load_from(path, [](std::istream& in) { return read_measurement(in); });
}

}  // namespace onebit
