#include "rfisher/cli.hpp"

#include "rfisher/molecules.hpp"
#include "rfisher/relative_fisher.hpp"
#include "rfisher/report.hpp"
#include "rfisher/systems.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <optional>

namespace rfisher::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError("not an integer: '" + std::string(s) + "'");
  return v;
}

struct Common {
  std::string format = "csv";
  int digits = -1;
  std::string out_path;
  std::string constants = "paper";
  std::string molecule_file;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--digits", c.digits, "significant digits (decimals for table3)")->check(CLI::Range(1, 17));
  cmd->add_option("--out", c.out_path, "output file (directory for figure1)");
  cmd->add_option("--constants", c.constants, "unit conversion profile")->check(CLI::IsMember({"paper", "modern"}));
}

std::vector<MoleculeRecord> molecules_for(const Common& c) {
  if (c.molecule_file.empty()) return registry();
  try {
    return merged_registry(load_molecule_file(c.molecule_file));
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

std::string render(const report::Table& t, const Common& c) {
  return c.format == "json" ? report::to_json(t) : report::to_csv(t);
}

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  try {
    report::write_atomic(path, content);
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

std::vector<Space> spaces_of(const std::string& s) {
  if (s == "both") return {Space::position, Space::momentum};
  return {parse_space(s)};
}

struct ComputeArgs {
  Common common;
  std::string system;
  std::string space = "position";
  double omega = 1.0;
  double Z = 1.0;
  std::string n, l, nr;
  std::string molecule;
  std::optional<double> mu_amu, de_ev, re_angstrom;
  bool validate = false;
  double rel_tol = 1e-10;
  double threshold = 1e-8;
};

Pseudoharmonic php_params(const ComputeArgs& a) {
  const auto profile = parse_constants_profile(a.common.constants);
  const bool adhoc = a.mu_amu || a.de_ev || a.re_angstrom;
  if (adhoc && !a.molecule.empty()) throw UsageError("--molecule conflicts with --mu-amu/--de-ev/--re-angstrom");
  if (adhoc) {
    if (!(a.mu_amu && a.de_ev && a.re_angstrom))
      throw UsageError("ad-hoc PHP parameters need all of --mu-amu, --de-ev, --re-angstrom");
    return to_atomic_units({"adhoc", "", *a.mu_amu, *a.de_ev, *a.re_angstrom, ""}, profile);
  }
  if (a.molecule.empty()) throw UsageError("php needs --molecule or --mu-amu/--de-ev/--re-angstrom");
  const auto mols = molecules_for(a.common);
  try {
    return to_atomic_units(find_molecule(a.molecule, mols), profile);
  } catch (const MoleculeNotFound& e) {
    throw UsageError(e.what());
  }
}

std::vector<QuantumState> compute_states(const ComputeArgs& a) {
  const SystemKind kind = parse_system_kind(a.system);
  const auto spaces = spaces_of(a.space);
  auto need = [](const std::string& v, const char* flag) {
    if (v.empty()) throw UsageError(std::string("missing ") + flag);
    return parse_int_list(v);
  };
  std::vector<QuantumState> out;
  for (Space sp : spaces) {
    switch (kind) {
    case SystemKind::qho1d:
      for (int n : need(a.n, "--n")) out.push_back(QuantumState::qho1d(a.omega, n, sp));
      break;
    case SystemKind::qho3d: {
      const auto ls = a.l.empty() ? std::vector<int>{0} : parse_int_list(a.l);
      for (int l : ls)
        for (int nr : need(a.nr, "--nr")) out.push_back(QuantumState::qho3d(a.omega, nr, l, sp));
      break;
    }
    case SystemKind::hydrogen: {
      const auto ns = need(a.n, "--n");
      const auto ls = a.l.empty() ? std::vector<int>{0} : parse_int_list(a.l);
      const bool single = ns.size() == 1 && ls.size() == 1;
      for (int n : ns)
        for (int l : ls) {
          // Ranges skip combinations with l >= n; a single explicit pair must be valid.
          if (!single && (l > n - 1 || l < 0)) continue;
          out.push_back(QuantumState::hydrogenic(a.Z, n, l, sp));
        }
      break;
    }
    case SystemKind::php: {
      const auto params = php_params(a);
      const auto ls = a.l.empty() ? std::vector<int>{0} : parse_int_list(a.l);
      for (int l : ls)
        for (int nr : need(a.nr, "--nr")) out.push_back(QuantumState::pseudoharmonic(params, nr, l, sp));
      break;
    }
    }
  }
  if (out.empty()) throw UsageError("no valid states in the requested ranges");
  return out;
}

struct ValidateArgs {
  Common common;
  std::string system = "all";
  std::string space = "both";
  int n_max = 8;
  int nr_max = 5;
  int l_max = 3;
  std::vector<double> omegas;
  std::vector<double> charges;
  double rel_tol = 1e-10;
  double threshold = 1e-8;
};

} // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string_view rest = text;
  if (rest.empty()) throw UsageError("empty integer list");
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const int lo = parse_int(item.substr(0, dots));
    const int hi = parse_int(item.substr(dots + 2));
    if (hi < lo) throw UsageError("empty range: " + std::string(item));
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative Fisher information of exactly solvable quantum systems"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "closed-form IR for one state or a range");
  add_common(compute, ca.common);
  compute->add_option("--system", ca.system, "qho1d, qho3d, hydrogen or php")
      ->required()
      ->check(CLI::IsMember({"qho1d", "qho3d", "hydrogen", "php"}));
  compute->add_option("--space", ca.space)->check(CLI::IsMember({"position", "momentum", "both"}));
  compute->add_option("--omega", ca.omega, "oscillator frequency (a.u.)");
  compute->add_option("--Z", ca.Z, "nuclear charge");
  compute->add_option("--n", ca.n, "index or principal number; ranges like 1..5");
  compute->add_option("--l", ca.l, "azimuthal number; ranges allowed");
  compute->add_option("--nr", ca.nr, "radial number; ranges allowed");
  compute->add_option("--molecule", ca.molecule, "registry molecule for php");
  compute->add_option("--molecule-file", ca.common.molecule_file, "extra molecule records");
  compute->add_option("--mu-amu", ca.mu_amu);
  compute->add_option("--de-ev", ca.de_ev);
  compute->add_option("--re-angstrom", ca.re_angstrom);
  compute->add_flag("--validate", ca.validate, "also integrate numerically");
  compute->add_option("--rel-tol", ca.rel_tol, "quadrature relative tolerance");
  compute->add_option("--threshold", ca.threshold, "rel_diff limit for status ok");

  ValidateArgs va;
  auto* validate_cmd = app.add_subcommand("validate", "numeric oracle sweep over the closed forms");
  add_common(validate_cmd, va.common);
  validate_cmd->add_option("--system", va.system)->check(CLI::IsMember({"all", "qho1d", "qho3d", "hydrogen", "php"}));
  validate_cmd->add_option("--space", va.space)->check(CLI::IsMember({"position", "momentum", "both"}));
  validate_cmd->add_option("--n-max", va.n_max, "largest n (1D, hydrogen)")->check(CLI::Range(1, 40));
  validate_cmd->add_option("--nr-max", va.nr_max, "largest n_r (3D oscillator, php)")->check(CLI::Range(1, 40));
  validate_cmd->add_option("--l-max", va.l_max, "largest l (3D oscillator)")->check(CLI::Range(0, 20));
  validate_cmd->add_option("--omega", va.omegas, "oscillator frequencies");
  validate_cmd->add_option("--Z", va.charges, "nuclear charges");
  validate_cmd->add_option("--molecule-file", va.common.molecule_file, "extra molecule records");
  validate_cmd->add_option("--rel-tol", va.rel_tol, "quadrature relative tolerance");
  validate_cmd->add_option("--threshold", va.threshold, "maximum accepted rel_diff");

  Common ra;
  std::string which;
  auto* reproduce = app.add_subcommand("reproduce", "regenerate the reference tables and figure series");
  add_common(reproduce, ra);
  reproduce->add_option("which", which, "table1, table3 or figure1")
      ->required()
      ->check(CLI::IsMember({"table1", "table3", "figure1"}));

  Common ma;
  auto* molecules = app.add_subcommand("molecules", "list the molecule registry");
  add_common(molecules, ma);
  molecules->add_option("--molecule-file", ma.molecule_file, "extra molecule records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*compute) {
      const auto states = compute_states(ca);
      report::EvalOptions opt;
      opt.validate = ca.validate;
      opt.quadrature.rel_tol = ca.rel_tol;
      opt.threshold = ca.threshold;
      const auto rows = report::evaluate(states, opt);
      emit(render(report::rows_table(rows, ca.common.digits > 0 ? ca.common.digits : 12), ca.common),
           ca.common.out_path, out);
      for (const auto& r : rows)
        if (r.status == report::RowStatus::quadrature_failed) return kValidationFailed;
      return kOk;
    }
    if (*validate_cmd) {
      report::SweepBounds b;
      b.n_max = va.n_max;
      b.nr_max = va.nr_max;
      b.l_max = va.l_max;
      if (!va.omegas.empty()) b.omegas = va.omegas;
      if (!va.charges.empty()) b.charges = va.charges;
      b.constants = parse_constants_profile(va.common.constants);
      b.molecules = molecules_for(va.common);
      std::vector<SystemKind> kinds = {SystemKind::qho1d, SystemKind::qho3d, SystemKind::hydrogen, SystemKind::php};
      if (va.system != "all") kinds = {parse_system_kind(va.system)};
      std::vector<QuantumState> states;
      for (auto k : kinds) {
        auto s = report::sweep_states(k, spaces_of(va.space), b);
        states.insert(states.end(), s.begin(), s.end());
      }
      report::EvalOptions opt;
      opt.validate = true;
      opt.quadrature.rel_tol = va.rel_tol;
      opt.threshold = va.threshold;
      const auto rows = report::evaluate(states, opt);
      emit(render(report::rows_table(rows, va.common.digits > 0 ? va.common.digits : 12), va.common),
           va.common.out_path, out);
      const auto sum = report::summarize(rows);
      char line[160];
      std::snprintf(line, sizeof line, "summary: cells=%zu failures=%zu max_rel_diff=%.3e threshold=%.3e\n",
                    sum.cells, sum.failures, sum.max_rel_diff, va.threshold);
      err << line;
      return (sum.failures > 0 || sum.max_rel_diff > va.threshold) ? kValidationFailed : kOk;
    }
    if (*reproduce) {
      const auto profile = parse_constants_profile(ra.constants);
      if (which == "table1") {
        emit(render(report::table1(ra.digits > 0 ? ra.digits : 12), ra), ra.out_path, out);
      } else if (which == "table3") {
        emit(render(report::table3(ra.digits > 0 ? ra.digits : 6, profile), ra), ra.out_path, out);
      } else {
        namespace fs = std::filesystem;
        const fs::path dir = ra.out_path.empty() ? fs::path(".") : fs::path(ra.out_path);
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw IoError("cannot create directory " + dir.string());
        for (const auto& s : report::figure1(50, ra.digits > 0 ? ra.digits : 12)) {
          const fs::path file = dir / (s.file_stem + (ra.format == "json" ? ".json" : ".csv"));
          emit(render(s.table, ra), file.string(), out);
          out << file.string() << "\n";
        }
      }
      return kOk;
    }
    if (*molecules) {
      const auto profile = parse_constants_profile(ma.constants);
      report::Table t;
      t.headers = {"name", "state_label", "mu_amu", "de_ev", "re_angstrom", "source", "mu_au", "de_au", "re_au", "gamma0", "lambda"};
      const int d = ma.digits > 0 ? ma.digits : 12;
      for (const auto& m : molecules_for(ma)) {
        const auto p = to_atomic_units(m, profile);
        const auto der = php_derived(p, 0);
        t.add_row({report::text_cell(m.name), report::text_cell(m.state_label), report::number_cell(m.mu_amu, d),
                   report::number_cell(m.de_ev, d), report::number_cell(m.re_angstrom, d),
                   report::text_cell(m.source), report::number_cell(p.mu, d), report::number_cell(p.De, d),
                   report::number_cell(p.re, d), report::number_cell(der.gamma_l, d),
                   report::number_cell(der.lambda, d)});
      }
      emit(render(t, ma), ma.out_path, out);
      return kOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace rfisher::cli
