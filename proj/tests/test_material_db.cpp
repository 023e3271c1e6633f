#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "chipnoise/error.hpp"
#include "chipnoise/material_db.hpp"

using namespace chipnoise;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinRel;

namespace {

const char* kSmall = R"({
  "metals": [
    {"name": "Cu", "theta_K": 343, "rho_room_uOhm_cm": 1.7, "rrr_default": 100},
    {"name": "Ag", "theta_K": 225, "rho_room_uOhm_cm": 1.63, "rrr_default": 50,
     "rho_ph_table": [[50, 0.2], [100, 0.5]]}
  ],
  "alloys": [
    {"solvent": "Ag", "solute": "Au", "slope_uOhm_cm_per_atpct": 0.4}
  ]
})";

}  // namespace

TEST_CASE("bundled database", "[material_db]") {
  const auto& db = MaterialDatabase::bundled();
  CHECK(db.metal_count() == 14);
  CHECK(db.alloy_count() == 3);
  for (const char* name : {"Al", "W", "Au", "Ir", "Cu", "Mo", "Nb", "Pt", "Rh", "Ag", "Ta", "Ti", "Zn", "Zr"}) {
    CHECK(db.has_metal(name));
  }
  CHECK_THAT(db.metal("Au").rho_room, WithinRel(2.21, 1e-15));
  CHECK_THAT(db.alloy("Ag", "Au", 6.0).residual_slope * 6.0, WithinRel(2.21, 1e-12));
  CHECK_THAT(db.alloy("Cu", "Au", 4.5).residual_slope * 4.5, WithinRel(2.21, 1e-12));
  CHECK_THAT(db.alloy("Cu", "Ge", 0.52).residual_slope * 0.52, WithinRel(2.21, 1e-12));
  const auto names = db.metal_names();
  CHECK(std::is_sorted(names.begin(), names.end()));
}

TEST_CASE("parse a small database", "[material_db]") {
  const auto db = MaterialDatabase::parse(kSmall);
  CHECK(db.metal_count() == 2);
  CHECK(db.metal("Ag").rrr == 50.0);
  CHECK(db.metal("Ag").rho_ph_table.size() == 2);
  CHECK(db.alloy("Ag", "Au", 2.0).concentration == 2.0);
  CHECK_THROWS_AS(db.alloy("Cu", "Au", 2.0), UnknownNameError);
}

TEST_CASE("unknown names list what is available", "[material_db]") {
  const auto db = MaterialDatabase::parse(kSmall);
  try {
    (void)db.metal("Fe");
    FAIL("expected UnknownNameError");
  } catch (const UnknownNameError& e) {
    CHECK_THAT(e.what(), ContainsSubstring("Ag") && ContainsSubstring("Cu"));
  }
}

TEST_CASE("schema violations report line and field", "[material_db]") {
  const std::string bad_field = "{\n\"metals\": [\n{\"name\": \"Cu\", \"theta_K\": 343, \"rho_room_uOhm_cm\": 1.7,"
                                " \"rrr_default\": 100, \"colour\": 1}\n],\n\"alloys\": []\n}";
  try {
    (void)MaterialDatabase::parse(bad_field);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.field() == "colour");
  }

  CHECK_THROWS_AS(MaterialDatabase::parse(R"({"metals": []})"), ParseError);
  CHECK_THROWS_AS(MaterialDatabase::parse(R"({"metals": [], "alloys": [], "extra": 1})"), ParseError);
  CHECK_THROWS_AS(MaterialDatabase::parse("{\"metals\": [,]}"), ParseError);
  CHECK_THROWS_AS(MaterialDatabase::parse(R"({"metals": [{"name": "Cu", "theta_K": "hot",
      "rho_room_uOhm_cm": 1.7, "rrr_default": 100}], "alloys": []})"),
                  ParseError);
  CHECK_THROWS_AS(MaterialDatabase::parse(R"({"metals": [
      {"name": "Cu", "theta_K": 343, "rho_room_uOhm_cm": 1.7, "rrr_default": 100},
      {"name": "Cu", "theta_K": 343, "rho_room_uOhm_cm": 1.7, "rrr_default": 100}], "alloys": []})"),
                  ParseError);
  CHECK_THROWS_AS(MaterialDatabase::parse(R"({"metals": [], "alloys": [
      {"solvent": "Ag", "solute": "Au", "slope_uOhm_cm_per_atpct": 0.4}]})"),
                  ParseError);
  CHECK_THROWS_AS(MaterialDatabase::parse(R"({"metals": [
      {"name": "Cu", "theta_K": -1, "rho_room_uOhm_cm": 1.7, "rrr_default": 100}], "alloys": []})"),
                  ParseError);
}

TEST_CASE("file and environment loading", "[material_db]") {
  const std::filesystem::path dir = CHIPNOISE_TEST_WORK_DIR;
  std::filesystem::create_directories(dir);
  const auto path = dir / "small_db.json";
  std::ofstream(path) << kSmall;

  CHECK(MaterialDatabase::load_file(path).metal_count() == 2);
  CHECK_THROWS_AS(MaterialDatabase::load_file(dir / "missing.json"), IoError);

  ::setenv("CHIPNOISE_DB", path.c_str(), 1);
  CHECK(MaterialDatabase::from_environment().metal_count() == 2);
  ::unsetenv("CHIPNOISE_DB");
  CHECK(MaterialDatabase::from_environment().metal_count() == 14);
}
