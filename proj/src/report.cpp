#include "rfisher/report.hpp"

#include "rfisher/reference_data.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <thread>

namespace rfisher::report {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != headers.size()) throw std::logic_error("Table: row width does not match headers");
  rows.push_back(std::move(row));
}

Table::Cell text_cell(std::string s) { return {std::move(s), false}; }

Table::Cell number_cell(double v, int digits, bool fixed) {
  if (!std::isfinite(v)) return {std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf"), false};
  char buf[64];
  std::snprintf(buf, sizeof buf, fixed ? "%.*f" : "%.*g", digits, v);
  return {buf, true};
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

} // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.headers.size(); ++i)
    out += (i ? "," : "") + csv_escape(table.headers[i]);
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_escape(row[i].text);
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  std::string out = "[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out += r ? ",\n " : "\n ";
    out += '{';
    for (std::size_t i = 0; i < table.headers.size(); ++i) {
      const auto& cell = table.rows[r][i];
      out += (i ? ", " : "") + nlohmann::json(table.headers[i]).dump() + ": ";
      out += cell.numeric ? cell.text : nlohmann::json(cell.text).dump();
    }
    out += '}';
  }
  out += table.rows.empty() ? "]\n" : "\n]\n";
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write failed for " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot rename temporary file onto " + path.string());
  }
}

std::string to_string(RowStatus status) {
  switch (status) {
  case RowStatus::ok: return "ok";
  case RowStatus::quadrature_failed: return "quadrature_failed";
  case RowStatus::reference_state: return "reference_state";
  case RowStatus::mismatch: return "mismatch";
  }
  return "unknown";
}

namespace {

OutputRow evaluate_one(const QuantumState& st, const EvalOptions& opt) {
  OutputRow row;
  row.system = rfisher::to_string(st.kind());
  row.space = rfisher::to_string(st.space);
  row.quantum_numbers = numbers_label(st);
  row.params_digest = params_digest(st.system);
  row.ir_closed = opt.closed_form(st);
  const bool is_reference = reference_state(st) == st;
  if (!opt.validate) {
    row.status = is_reference ? RowStatus::reference_state : RowStatus::ok;
    return row;
  }
  quadrature::QuadratureResult q;
  try {
    q = ir_integral(st, reference_state(st), opt.quadrature);
  } catch (const quadrature::NonFiniteIntegrand&) {
    row.status = RowStatus::quadrature_failed;
    return row;
  }
  if (!q.converged) {
    row.status = RowStatus::quadrature_failed;
    return row;
  }
  row.ir_numeric = q.value;
  row.rel_diff = std::abs(q.value - row.ir_closed) / std::max(std::abs(row.ir_closed), 1e-12);
  if (is_reference)
    row.status = std::abs(q.value - row.ir_closed) <= std::max(opt.quadrature.abs_tol, 1e-12)
                     ? RowStatus::reference_state
                     : RowStatus::mismatch;
  else
    row.status = *row.rel_diff <= opt.threshold ? RowStatus::ok : RowStatus::mismatch;
  return row;
}

} // namespace

std::vector<OutputRow> evaluate(const std::vector<QuantumState>& states, const EvalOptions& options) {
  std::vector<OutputRow> rows(states.size());
  if (states.empty()) return rows;
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  if (!options.validate) threads = 1;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(states.size()));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < states.size(); i = next++) rows[i] = evaluate_one(states[i], options);
    } catch (...) {
      errors[id] = std::current_exception();
      next = states.size();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

Table rows_table(const std::vector<OutputRow>& rows, int digits) {
  Table t;
  t.headers = {"system", "space", "quantum_numbers", "params_digest", "ir_closed", "ir_numeric", "rel_diff", "status"};
  for (const auto& r : rows) {
    t.add_row({text_cell(r.system), text_cell(r.space), text_cell(r.quantum_numbers),
               text_cell(r.params_digest), number_cell(r.ir_closed, digits),
               r.ir_numeric ? number_cell(*r.ir_numeric, digits) : text_cell(""),
               r.rel_diff ? number_cell(*r.rel_diff, 3) : text_cell(""), text_cell(to_string(r.status))});
  }
  return t;
}

SweepSummary summarize(const std::vector<OutputRow>& rows) {
  SweepSummary s;
  s.cells = rows.size();
  for (const auto& r : rows) {
    if (r.status == RowStatus::quadrature_failed || r.status == RowStatus::mismatch) ++s.failures;
    if (r.rel_diff && r.status != RowStatus::reference_state) s.max_rel_diff = std::max(s.max_rel_diff, *r.rel_diff);
  }
  return s;
}

std::vector<QuantumState> sweep_states(SystemKind kind, const std::vector<Space>& spaces,
                                       const SweepBounds& b) {
  std::vector<QuantumState> out;
  for (Space sp : spaces) {
    switch (kind) {
    case SystemKind::qho1d:
      for (double w : b.omegas)
        for (int n = 1; n <= b.n_max; ++n) out.push_back(QuantumState::qho1d(w, n, sp));
      break;
    case SystemKind::qho3d:
      for (double w : b.omegas)
        for (int l = 0; l <= b.l_max; ++l)
          for (int nr = 1; nr <= b.nr_max; ++nr) out.push_back(QuantumState::qho3d(w, nr, l, sp));
      break;
    case SystemKind::hydrogen:
      for (double Z : b.charges)
        for (int n = 2; n <= b.n_max; ++n)
          for (int l = 0; l <= n - 1; ++l) out.push_back(QuantumState::hydrogenic(Z, n, l, sp));
      break;
    case SystemKind::php:
      for (const auto& m : b.molecules)
        for (int nr = 1; nr <= b.nr_max; ++nr)
          out.push_back(QuantumState::pseudoharmonic(to_atomic_units(m, b.constants), nr, 0, sp));
      break;
    }
  }
  return out;
}

Table table1(int digits) {
  Table t;
  t.headers = {"orbital", "n", "l", "ir_exact", "ir_decimal", "printed_exact", "printed_decimal", "literature", "match", "status"};
  for (const auto& cell : reference_data::hydrogen_position_table()) {
    const auto st = QuantumState::hydrogenic(1.0, cell.n, cell.l, Space::position);
    const Rational exact = *closed_form_ir_exact(st);
    const bool match = exact == cell.printed;
    t.add_row({text_cell(std::string(cell.orbital)), number_cell(cell.n, 10), number_cell(cell.l, 10),
               text_cell(exact.to_string()), number_cell(exact.to_double(), digits),
               text_cell(cell.printed.to_string()), number_cell(cell.printed.to_double(), digits),
               cell.literature ? number_cell(*cell.literature, digits) : text_cell(""),
               text_cell(match ? "true" : "false"),
               text_cell(match ? "ok" : "printed_value_differs")});
  }
  return t;
}

Table table3(int digits, ConstantsProfile constants) {
  Table t;
  t.headers = {"molecule", "state", "nr", "space", "ir", "printed", "abs_diff", "status"};
  for (const auto& m : registry()) {
    const auto params = to_atomic_units(m, constants);
    for (Space sp : {Space::position, Space::momentum}) {
      for (int nr : reference_data::kTableNr) {
        const double ir = closed_form_ir(QuantumState::pseudoharmonic(params, nr, 0, sp));
        std::optional<double> printed;
        for (const auto& c : reference_data::pseudoharmonic_table())
          if (c.molecule == m.name && c.nr == nr) printed = sp == Space::position ? c.position : c.momentum;
        // Printed values carry six decimals; allow half a unit in the last place plus truncation.
        const double diff = printed ? std::abs(ir - *printed) : 0.0;
        const bool ok = printed && diff <= 5e-6;
        t.add_row({text_cell(m.name), text_cell(m.state_label), number_cell(nr, 10),
                   text_cell(rfisher::to_string(sp)), number_cell(ir, digits, true),
                   printed ? number_cell(*printed, 6, true) : text_cell(""),
                   printed ? number_cell(diff, 3) : text_cell(""),
                   text_cell(constants == ConstantsProfile::paper ? (ok ? "ok" : "printed_value_differs")
                                                                  : "modern_constants")});
      }
    }
  }
  return t;
}

std::vector<Series> figure1(int n_max, int digits) {
  std::vector<Series> out;
  struct Spec {
    const char* stem;
    Space space;
    std::array<int, 4> ls;
  };
  const std::array<Spec, 4> specs = {{{"figure1_ir_r_even_l", Space::position, {0, 2, 4, 6}},
                                      {"figure1_ir_r_odd_l", Space::position, {1, 3, 5, 7}},
                                      {"figure1_ln_ir_p_even_l", Space::momentum, {0, 2, 4, 6}},
                                      {"figure1_ln_ir_p_odd_l", Space::momentum, {1, 3, 5, 7}}}};
  for (const auto& s : specs) {
    Table t;
    const bool pos = s.space == Space::position;
    t.headers = {"l", "n", pos ? "ir_r" : "ln_ir_p"};
    for (int l : s.ls) {
      // ln IR_p is undefined at the circular state itself.
      for (int n = pos ? l + 1 : l + 2; n <= n_max; ++n) {
        const double ir = closed_form_ir(QuantumState::hydrogenic(1.0, n, l, s.space));
        t.add_row({number_cell(l, 10), number_cell(n, 10), number_cell(pos ? ir : std::log(ir), digits)});
      }
    }
    out.push_back({s.stem, std::move(t)});
  }
  return out;
}

} // namespace rfisher::report
