#pragma once

#include <iosfwd>
#include <string>

#include "onebit/designs.hpp"
#include "onebit/recovery.hpp"
#include "onebit/sensing.hpp"
#include "onebit/signals.hpp"

namespace onebit {

// Signal text format: header "signal n=<n>" then one line "<index> <p>/<q>"
// per nonzero entry, 1-based, ascending.
void write_signal(std::ostream& out, const SparseSignal& x);
SparseSignal read_signal(std::istream& in);

// Design text format: header
//   design m=<m> n=<n> d=<d|-> property=<list-disjunct|list-union-free>
//   k=<k> l=<l> alpha=<p/q|-> status=<certified|unverified> seed=<s>
// then one line per column listing its 1-based row indices.
void write_design(std::ostream& out, const BinaryDesign& design);
BinaryDesign read_design(std::istream& in);

// Matrix text format: header
//   matrix regime=<name> n=<n> m=<m> params=<...> seed=<s>
// then one line per row: "B <indices>" | "P a=<p/q> <indices>" | "D <floats>".
// params carries the regime parameters: approx "k,eps"; superset
// "k,eps,split,group"; bounded-range "k,eps,eta"; same-sign "k,eps,R";
// gaussian "-". Indices are 1-based ascending; floats round-trip exactly.
void write_matrix(std::ostream& out, const SensingMatrix& matrix);
SensingMatrix read_matrix(std::istream& in);

// Measurement format: one line of space-separated {-1,0,1}. Mode is not part
// of the format; read_measurement returns ternary mode.
void write_measurement(std::ostream& out, const MeasurementVector& y);
MeasurementVector read_measurement(std::istream& in);

std::string report_csv_header();
std::string report_csv_row(const RecoveryReport& report);

// File-based convenience wrappers; throw std::runtime_error on IO failure.
void save_signal(const std::string& path, const SparseSignal& x);
SparseSignal load_signal(const std::string& path);
void save_design(const std::string& path, const BinaryDesign& design);
BinaryDesign load_design(const std::string& path);
void save_matrix(const std::string& path, const SensingMatrix& matrix);
SensingMatrix load_matrix(const std::string& path);
void save_measurement(const std::string& path, const MeasurementVector& y);
MeasurementVector load_measurement(const std::string& path);

}  // namespace onebit
