#pragma once

// Curated material database: pure-metal records and dilute-alloy residual
// slopes, loaded from a JSON document of the form
//
//   { "notes":  ["free text", ...],                         (optional)
//     "metals": [ { "name": "Cu", "theta_K": 343, "rho_room_uOhm_cm": 1.7,
//                   "rrr_default": 100,
//                   "rho_ph_table": [[T_K, rho], ...],      (optional)
//                   "source": "..." } ],                    (optional)
//     "alloys": [ { "solvent": "Ag", "solute": "Au",
//                   "slope_uOhm_cm_per_atpct": 0.368,
//                   "source": "..." } ] }                   (optional)
//
// Unknown keys are rejected. The database is immutable once built.

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chipnoise/materials.hpp"

namespace chipnoise {

struct AlloyEntry {
  std::string solvent;
  std::string solute;
  double slope = 0.0;  // µΩ·cm per at.%
};

class MaterialDatabase {
 public:
  MaterialDatabase() = default;

  /// Throws ParseError carrying the offending line and field name.
  static MaterialDatabase parse(std::string_view json);
  static MaterialDatabase load(std::istream& in);
  /// Throws IoError when the file cannot be read.
  static MaterialDatabase load_file(const std::filesystem::path& path);

  /// The database compiled into the library.
  static const MaterialDatabase& bundled();

  /// $CHIPNOISE_DB when set, otherwise the bundled database.
  static MaterialDatabase from_environment();

  std::size_t metal_count() const noexcept { return metals_.size(); }
  std::size_t alloy_count() const noexcept { return alloys_.size(); }
  bool empty() const noexcept { return metals_.empty() && alloys_.empty(); }

  bool has_metal(std::string_view name) const;
  /// Throws UnknownNameError listing the available names.
  const MaterialRecord& metal(std::string_view name) const;
  std::vector<std::string> metal_names() const;

  const std::vector<AlloyEntry>& alloys() const noexcept { return alloys_; }
  /// Builds an AlloySpec for the (solvent, solute) family at concentration x.
  AlloySpec alloy(std::string_view solvent, std::string_view solute, double concentration) const;

  const std::vector<std::string>& notes() const noexcept { return notes_; }

 private:
  std::map<std::string, MaterialRecord, std::less<>> metals_;
  std::vector<AlloyEntry> alloys_;
  std::vector<std::string> notes_;
};

/// Raw JSON of the bundled database (generated at build time).
std::string_view bundled_database_json() noexcept;

}  // namespace chipnoise
