#include "rfisher/molecules.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rfisher {

UnitConstants unit_constants(ConstantsProfile profile) {
  if (profile == ConstantsProfile::paper) return {1.82289e3, 0.03615384, 1.88971616};
  return {1822.888486209, 0.036749322175655, 1.889726124626};
}

ConstantsProfile parse_constants_profile(const std::string& text) {
  if (text == "paper") return ConstantsProfile::paper;
  if (text == "modern") return ConstantsProfile::modern;
  throw std::invalid_argument("unknown constants profile: " + text);
}

Pseudoharmonic to_atomic_units(const MoleculeRecord& record, ConstantsProfile profile) {
  const auto c = unit_constants(profile);
  Pseudoharmonic p{record.mu_amu * c.amu, record.de_ev * c.ev, record.re_angstrom * c.angstrom};
  validate(SystemParams{p});
  return p;
}

const std::vector<MoleculeRecord>& registry() {
  static const std::vector<MoleculeRecord> records = {
      {"H2", "X ¹Σg⁺", 0.50391, 4.7446, 0.7416, "oyewumi12"},
      {"Na2", "X ¹Σg⁺", 11.4948845, 0.746707167, 3.079, "yahya15"},
      {"Cl2", "X ¹Σg⁺", 17.7275, 2.513903386, 1.987, "yahya15"},
      {"O2+", "X ²Πg", 7.9995, 6.780447346, 1.116, "yahya15"},
      {"CO", "X ¹Σ⁺", 6.860586000, 10.845073641, 1.1283, "oyewumi12"},
      {"NO", "X ²Σr", 7.46844100, 8.043729855, 1.1508, "oyewumi12"},
  };
  return records;
}

const MoleculeRecord& find_molecule(const std::string& name,
                                    const std::vector<MoleculeRecord>& records) {
  for (const auto& r : records)
    if (r.name == name) return r;
  throw MoleculeNotFound("unknown molecule: " + name);
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_positive(const std::string& field, int line_no, const char* what) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !(v > 0.0) || !std::isfinite(v))
    throw std::runtime_error("molecule file line " + std::to_string(line_no) + ": " + what +
                             " must be a positive number, got '" + field + "'");
  return v;
}

} // namespace

std::vector<MoleculeRecord> parse_molecule_file(const std::string& text) {
  std::vector<MoleculeRecord> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream row(body);
    while (std::getline(row, field, ',')) fields.push_back(trim(field));
    if (body.back() == ',') fields.emplace_back();
    if (fields.size() != 6)
      throw std::runtime_error("molecule file line " + std::to_string(line_no) +
                               ": expected 6 comma-separated fields, got " +
                               std::to_string(fields.size()));
    if (fields[0].empty())
      throw std::runtime_error("molecule file line " + std::to_string(line_no) + ": empty name");
    out.push_back({fields[0], fields[1], parse_positive(fields[2], line_no, "mu_amu"),
                   parse_positive(fields[3], line_no, "de_ev"),
                   parse_positive(fields[4], line_no, "re_angstrom"), fields[5]});
  }
  return out;
}

std::vector<MoleculeRecord> load_molecule_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open molecule file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_molecule_file(buf.str());
}

std::vector<MoleculeRecord> merged_registry(const std::vector<MoleculeRecord>& extra) {
  std::vector<MoleculeRecord> out = registry();
  for (const auto& r : extra) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& m) { return m.name == r.name; });
    if (it != out.end())
      *it = r;
    else
      out.push_back(r);
  }
  return out;
}

} // namespace rfisher
