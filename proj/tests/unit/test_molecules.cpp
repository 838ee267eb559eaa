#include "rfisher/molecules.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>

using namespace rfisher;
using rfisher::test::rel_err;

TEST_CASE("registry contents") {
  const auto& r = registry();
  REQUIRE(r.size() == 6);
  CHECK(r[0].name == "H2");
  CHECK(find_molecule("H2").mu_amu == 0.50391);
  CHECK(find_molecule("NO").de_ev == 8.043729855);
  CHECK(find_molecule("O2+").state_label == "X ²Πg");
  CHECK(find_molecule("NO").state_label == "X ²Σr");
  CHECK_THROWS_AS(find_molecule("HeH+"), MoleculeNotFound);
  CHECK_THROWS_AS(find_molecule("h2"), std::out_of_range);
  for (const auto& m : r) {
    CHECK(m.mu_amu > 0.0);
    CHECK(m.de_ev > 0.0);
    CHECK(m.re_angstrom > 0.0);
    CHECK_FALSE(m.source.empty());
  }
}

TEST_CASE("conversion to atomic units") {
  const auto h2 = to_atomic_units(find_molecule("H2"));
  CHECK(rel_err(h2.mu, 0.50391 * 1822.89) < 1e-15);
  CHECK(rel_err(h2.mu, 918.5724999) < 1e-9);
  const auto co = to_atomic_units(find_molecule("CO"));
  CHECK(rel_err(co.De, 10.845073641 * 0.03615384) < 1e-15);
  const MoleculeRecord unit{"X", "", 1.0, 1.0, 1.0, ""};
  CHECK(to_atomic_units(unit).re == 1.88971616);
  const auto modern = to_atomic_units(unit, ConstantsProfile::modern);
  CHECK(rel_err(modern.mu, 1822.888486209) < 1e-12);
  CHECK(rel_err(modern.De, 1.0 / 27.211386245988) < 1e-12);
  CHECK(rel_err(modern.re, 1.0 / 0.529177210903) < 1e-12);
  CHECK(parse_constants_profile("paper") == ConstantsProfile::paper);
  CHECK_THROWS_AS(parse_constants_profile("cgs"), std::invalid_argument);
}

TEST_CASE("conversion is linear") {
  for (int i = 0; i < 50; ++i) {
    const MoleculeRecord r{"M", "", test::uniform(0.1, 50.0), test::uniform(0.1, 20.0), test::uniform(0.3, 3.0), ""};
    const double k = test::uniform(0.1, 10.0);
    const MoleculeRecord s{"M", "", k * r.mu_amu, k * r.de_ev, k * r.re_angstrom, ""};
    const auto a = to_atomic_units(r);
    const auto b = to_atomic_units(s);
    CHECK(rel_err(b.mu, k * a.mu) < 1e-14);
    CHECK(rel_err(b.De, k * a.De) < 1e-14);
    CHECK(rel_err(b.re, k * a.re) < 1e-14);
  }
}

TEST_CASE("parameter files") {
  const auto recs = parse_molecule_file("# extra molecules\n\nLiH,X 1S+,0.8801,2.515,1.5956,huber79\nH2,X,1,2,3,test\n");
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].name == "LiH");
  CHECK(recs[0].re_angstrom == 1.5956);
  CHECK(recs[0].source == "huber79");

  const auto merged = merged_registry(recs);
  CHECK(merged.size() == 7);
  CHECK(find_molecule("H2", merged).mu_amu == 1.0);
  CHECK(find_molecule("LiH", merged).de_ev == 2.515);

  auto error_of = [](const std::string& text) {
    try {
      parse_molecule_file(text);
    } catch (const std::runtime_error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(error_of("A,B,1,2\n").find("line 1") != std::string::npos);
  CHECK(error_of("# c\nA,B,1,x,3,s\n").find("line 2") != std::string::npos);
  CHECK(error_of("A,B,1,-2,3,s\n").find("line 1") != std::string::npos);
  CHECK(error_of("A,B,1,2,3,s,extra\n").find("line 1") != std::string::npos);

  const auto dir = std::filesystem::temp_directory_path() / "rfisher_molecules_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "extra.csv";
  std::ofstream(path) << "LiH,X,0.8801,2.515,1.5956,huber79\n";
  CHECK(load_molecule_file(path).size() == 1);
  CHECK_THROWS_AS(load_molecule_file(dir / "missing.csv"), std::runtime_error);
  std::filesystem::remove_all(dir);
}
