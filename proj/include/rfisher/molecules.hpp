#pragma once

#include "rfisher/systems.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace rfisher {

/// Spectroscopic parameters of one diatomic molecule in laboratory units.
struct MoleculeRecord {
  std::string name;
  std::string state_label;
  double mu_amu = 0.0;
  double de_ev = 0.0;
  double re_angstrom = 0.0;
  std::string source;
};

/// Laboratory-to-atomic-unit factors.
struct UnitConstants {
  double amu;      ///< electron masses per amu
  double ev;       ///< hartree per eV
  double angstrom; ///< bohr per angstrom
};

enum class ConstantsProfile { paper, modern };

/// `paper` reproduces the reference tables (1 amu = 1822.89, 1 eV = 0.03615384,
/// 1 A = 1.88971616); `modern` uses CODATA 2018.
UnitConstants unit_constants(ConstantsProfile profile);
ConstantsProfile parse_constants_profile(const std::string& text);

Pseudoharmonic to_atomic_units(const MoleculeRecord& record,
                               ConstantsProfile profile = ConstantsProfile::paper);

class MoleculeNotFound : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// The six built-in molecules, in table order.
const std::vector<MoleculeRecord>& registry();

/// Case-sensitive lookup in `records`. Throws MoleculeNotFound.
const MoleculeRecord& find_molecule(const std::string& name,
                                    const std::vector<MoleculeRecord>& records = registry());

/// Parse "name,state_label,mu_amu,de_ev,re_angstrom,source" lines; '#' starts
/// a comment, blank lines are skipped. Throws std::runtime_error with the line
/// number on malformed input.
std::vector<MoleculeRecord> parse_molecule_file(const std::string& text);
std::vector<MoleculeRecord> load_molecule_file(const std::filesystem::path& path);

/// Built-in registry followed by the file's records; file entries replace
/// built-ins of the same name.
std::vector<MoleculeRecord> merged_registry(const std::vector<MoleculeRecord>& extra);

} // namespace rfisher
