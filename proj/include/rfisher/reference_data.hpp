#pragma once

// Reference values the reproduction commands compare against.

#include "rfisher/rational.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace rfisher::reference_data {

struct HydrogenCell {
  std::string_view orbital;
  int n;
  int l;
  Rational printed;
  std::optional<double> literature; ///< earlier numerical value, s series only
};

/// The 16 printed hydrogen position-space cells (ns, np, nd, nf series).
const std::array<HydrogenCell, 16>& hydrogen_position_table();

struct MoleculeCell {
  std::string_view molecule;
  int nr;
  double position;
  double momentum;
};

constexpr std::array<int, 7> kTableNr = {1, 2, 3, 10, 25, 50, 100};

/// 6 molecules x 7 radial numbers, printed to six decimals.
const std::array<MoleculeCell, 42>& pseudoharmonic_table();

} // namespace rfisher::reference_data
