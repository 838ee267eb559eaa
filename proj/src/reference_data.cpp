#include "rfisher/reference_data.hpp"

namespace rfisher::reference_data {

const std::array<HydrogenCell, 16>& hydrogen_position_table() {
  static const std::array<HydrogenCell, 16> cells = {{
      {"2s", 2, 0, Rational(1), 1.0},
      {"3s", 3, 0, Rational(16, 27), 0.5925},
      {"4s", 4, 0, Rational(3, 8), 0.375},
      {"5s", 5, 0, Rational(32, 125), 0.256},
      {"3p", 3, 1, Rational(8, 27), std::nullopt},
      {"4p", 4, 1, Rational(1, 4), std::nullopt},
      {"5p", 5, 1, Rational(24, 125), std::nullopt},
      {"6p", 6, 1, Rational(4, 27), std::nullopt},
      {"4d", 4, 2, Rational(1, 8), std::nullopt},
      {"5d", 5, 2, Rational(16, 125), std::nullopt},
      {"6d", 6, 2, Rational(1, 9), std::nullopt},
      {"7d", 7, 2, Rational(32, 343), std::nullopt},
      {"5f", 5, 3, Rational(8, 125), std::nullopt},
      {"6f", 6, 3, Rational(2, 27), std::nullopt},
      {"7f", 7, 3, Rational(24, 343), std::nullopt},
      {"8f", 8, 3, Rational(1, 6), std::nullopt},
  }};
  return cells;
}

const std::array<MoleculeCell, 42>& pseudoharmonic_table() {
  static const std::array<MoleculeCell, 42> cells = {{
      {"H2", 1, 202.676044, 1.263099},      {"H2", 2, 405.352089, 2.526198},
      {"H2", 3, 608.028133, 3.789298},      {"H2", 10, 2026.760446, 12.630994},
      {"H2", 25, 5066.901116, 31.577486},   {"H2", 50, 10133.802233, 63.154972},
      {"H2", 100, 20267.604466, 126.309944},

      {"Na2", 1, 92.494014, 2.767746},      {"Na2", 2, 184.988028, 5.535493},
      {"Na2", 3, 277.482042, 8.303240},     {"Na2", 10, 924.940140, 27.677466},
      {"Na2", 25, 2312.350352, 69.193666},  {"Na2", 50, 4624.700704, 138.387333},
      {"Na2", 100, 9249.401408, 276.774667},

      {"Cl2", 1, 326.584840, 0.783869},     {"Cl2", 2, 653.169681, 1.567739},
      {"Cl2", 3, 979.754522, 2.351609},     {"Cl2", 10, 3265.848407, 7.838698},
      {"Cl2", 25, 8164.621018, 19.596745},  {"Cl2", 50, 16329.242036, 39.193490},
      {"Cl2", 100, 32658.484073, 78.386981},

      {"O2+", 1, 641.493486, 0.399068},     {"O2+", 2, 1282.986973, 0.798137},
      {"O2+", 3, 1924.480460, 1.197206},    {"O2+", 10, 6414.934868, 3.990687},
      {"O2+", 25, 16037.337170, 9.976718},  {"O2+", 50, 32074.674340, 19.953437},
      {"O2+", 100, 64149.348680, 39.906874},

      {"CO", 1, 743.135693, 0.344486},      {"CO", 2, 1486.271387, 0.688972},
      {"CO", 3, 2229.407081, 1.033458},     {"CO", 10, 7431.356937, 3.444862},
      {"CO", 25, 18578.392343, 8.612155},   {"CO", 50, 37156.784686, 17.224310},
      {"CO", 100, 74313.569373, 34.448621},

      {"NO", 1, 654.696038, 0.391021},      {"NO", 2, 1309.392076, 0.782042},
      {"NO", 3, 1964.088114, 1.173063},     {"NO", 10, 6546.960382, 3.910211},
      {"NO", 25, 16367.400957, 9.775528},   {"NO", 50, 32734.801914, 19.551057},
      {"NO", 100, 65469.603828, 39.102115},
  }};
  return cells;
}

} // namespace rfisher::reference_data
