#pragma once

#include "rfisher/molecules.hpp"
#include "rfisher/quadrature.hpp"
#include "rfisher/relative_fisher.hpp"
#include "rfisher/systems.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rfisher::report {

/// A rendered table: every cell is already formatted text. Numeric cells are
/// emitted unquoted in JSON.
struct Table {
  struct Cell {
    std::string text;
    bool numeric = false;
  };
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

Table::Cell text_cell(std::string s);
Table::Cell number_cell(double v, int digits, bool fixed = false);

std::string to_csv(const Table& table);
/// JSON array with one object per row, keys equal to the CSV headers.
std::string to_json(const Table& table);

/// Write via a sibling temporary file and rename. Throws std::runtime_error
/// naming the path on failure.
void write_atomic(const std::filesystem::path& path, const std::string& content);

enum class RowStatus { ok, quadrature_failed, reference_state, mismatch };
std::string to_string(RowStatus status);

struct OutputRow {
  std::string system;
  std::string space;
  std::string quantum_numbers;
  std::string params_digest;
  double ir_closed = 0.0;
  std::optional<double> ir_numeric;
  std::optional<double> rel_diff;
  RowStatus status = RowStatus::ok;
};

using ClosedForm = std::function<double(const QuantumState&)>;

struct EvalOptions {
  bool validate = false;
  quadrature::QuadratureSpec quadrature{};
  double threshold = 1e-8; ///< rel_diff above this marks the row `mismatch`
  ClosedForm closed_form = closed_form_ir;
  unsigned threads = 0; ///< 0: hardware concurrency
};

/// Evaluate every state, concurrently; rows come back in input order.
std::vector<OutputRow> evaluate(const std::vector<QuantumState>& states, const EvalOptions& options);

Table rows_table(const std::vector<OutputRow>& rows, int digits);

struct SweepSummary {
  std::size_t cells = 0;
  std::size_t failures = 0; ///< quadrature failures plus mismatches
  double max_rel_diff = 0.0;
};
SweepSummary summarize(const std::vector<OutputRow>& rows);

/// The default oracle sweep grid for one system and space selection.
struct SweepBounds {
  int n_max = 8;                          ///< 1D n, hydrogen n
  int nr_max = 5;                         ///< 3D oscillator and PHP n_r
  int l_max = 3;                          ///< 3D oscillator l
  std::vector<double> omegas = {0.5, 1.0, 1.4142135623730951, 3.0};
  std::vector<double> charges = {1.0, 2.0, 5.0};
  ConstantsProfile constants = ConstantsProfile::paper;
  std::vector<MoleculeRecord> molecules = registry();
};
std::vector<QuantumState> sweep_states(SystemKind kind, const std::vector<Space>& spaces,
                                       const SweepBounds& bounds);

/// Hydrogen position-space cells with exact values and the printed comparison.
Table table1(int digits = 12);
/// Pseudoharmonic closed forms for the six molecules at the printed n_r.
Table table3(int digits = 6, ConstantsProfile constants = ConstantsProfile::paper);

struct Series {
  std::string file_stem;
  Table table;
};
/// IR_r and ln IR_p versus n for even l {0,2,4,6} and odd l {1,3,5,7}.
std::vector<Series> figure1(int n_max = 50, int digits = 12);

} // namespace rfisher::report
