#include "chipnoise/material_db.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include <json.hpp>

#include "chipnoise/error.hpp"

namespace chipnoise {

namespace {

using nlohmann::json;

// Line numbers of the objects inside the top-level arrays, keyed by the
// array's name. nlohmann::json does not keep source positions, so the raw
// text is scanned once for them.
std::map<std::string, std::vector<std::size_t>> entry_lines(std::string_view text) {
  std::map<std::string, std::vector<std::size_t>> out;
  std::size_t line = 1;
  int depth = 0;
  bool in_string = false;
  bool escaped = false;
  std::string current;
  std::string last_key;
  for (char c : text) {
    if (c == '\n') ++line;
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
        if (depth == 1) last_key = current;
      } else {
        current.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        in_string = true;
        current.clear();
        break;
      case '{':
      case '[':
        if (c == '{' && depth == 2) out[last_key].push_back(line);
        ++depth;
        break;
      case '}':
      case ']':
        --depth;
        break;
      default:
        break;
    }
  }
  return out;
}

std::size_t line_of(std::size_t byte, std::string_view text) {
  const auto end = text.begin() + static_cast<std::ptrdiff_t>(std::min(byte, text.size()));
  return 1 + static_cast<std::size_t>(std::count(text.begin(), end, '\n'));
}

class EntryReader {
 public:
  EntryReader(const json& obj, std::string where, std::size_t line)
      : obj_(obj), where_(std::move(where)), line_(line) {
    if (!obj_.is_object()) throw ParseError(where_ + " must be an object", line_, "");
  }

  void allow_only(std::initializer_list<std::string_view> keys) const {
    for (const auto& [key, _] : obj_.items()) {
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        throw ParseError(where_ + ": unknown field", line_, key);
      }
    }
  }

  std::string string(const char* key) const {
    const json& v = required(key);
    if (!v.is_string()) throw ParseError(where_ + ": expected a string", line_, key);
    return v.get<std::string>();
  }

  double number(const char* key) const {
    const json& v = required(key);
    if (!v.is_number()) throw ParseError(where_ + ": expected a number", line_, key);
    return v.get<double>();
  }

  const json* optional(const char* key) const {
    auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  [[noreturn]] void fail(const std::string& msg, const char* key) const {
    throw ParseError(where_ + ": " + msg, line_, key);
  }

 private:
  const json& required(const char* key) const {
    auto it = obj_.find(key);
    if (it == obj_.end()) throw ParseError(where_ + ": missing required field", line_, key);
    return *it;
  }

  const json& obj_;
  std::string where_;
  std::size_t line_;
};

std::vector<PhononSample> read_table(const json& v, const EntryReader& reader) {
  if (!v.is_array()) reader.fail("expected an array of [T_K, rho] pairs", "rho_ph_table");
  std::vector<PhononSample> table;
  for (const auto& row : v) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number()) {
      reader.fail("expected [T_K, rho] pairs", "rho_ph_table");
    }
    table.emplace_back(row[0].get<double>(), row[1].get<double>());
  }
  return table;
}

}  // namespace

MaterialDatabase MaterialDatabase::parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), line_of(e.byte, text), "");
  }
  if (!doc.is_object()) throw ParseError("database must be a JSON object", 1, "");

  for (const auto& [key, _] : doc.items()) {
    if (key != "metals" && key != "alloys" && key != "notes") {
      throw ParseError("unknown top-level field", 1, key);
    }
  }
  if (!doc.contains("metals")) throw ParseError("missing top-level array", 1, "metals");
  if (!doc.contains("alloys")) throw ParseError("missing top-level array", 1, "alloys");
  if (!doc["metals"].is_array()) throw ParseError("expected an array", 1, "metals");
  if (!doc["alloys"].is_array()) throw ParseError("expected an array", 1, "alloys");

  const auto lines = entry_lines(text);
  auto line_for = [&lines](const std::string& array, std::size_t index) -> std::size_t {
    auto it = lines.find(array);
    if (it == lines.end() || index >= it->second.size()) return 0;
    return it->second[index];
  };

  MaterialDatabase db;

  if (auto it = doc.find("notes"); it != doc.end()) {
    if (it->is_string()) {
      db.notes_.push_back(it->get<std::string>());
    } else if (it->is_array() && std::all_of(it->begin(), it->end(), [](const json& n) { return n.is_string(); })) {
      for (const auto& n : *it) db.notes_.push_back(n.get<std::string>());
    } else {
      throw ParseError("expected a string or array of strings", 1, "notes");
    }
  }

  const auto& metals = doc["metals"];
  for (std::size_t i = 0; i < metals.size(); ++i) {
    const std::size_t line = line_for("metals", i);
    EntryReader r(metals[i], "metals[" + std::to_string(i) + "]", line);
    r.allow_only({"name", "theta_K", "rho_room_uOhm_cm", "rrr_default", "rho_ph_table", "source"});
    std::string name = r.string("name");
    const double theta = r.number("theta_K");
    const double rho_room = r.number("rho_room_uOhm_cm");
    const double rrr = r.number("rrr_default");
    std::vector<PhononSample> table;
    if (const json* t = r.optional("rho_ph_table")) table = read_table(*t, r);
    if (const json* s = r.optional("source"); s && !s->is_string()) r.fail("expected a string", "source");
    if (db.metals_.count(name) != 0) throw ParseError("duplicate metal name '" + name + "'", line, "name");

    MaterialRecord rec;
    try {
      rec = MaterialRecord::make(name, theta, rho_room, rrr, std::move(table));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), line, "");
    }
    db.metals_.emplace(std::move(name), std::move(rec));
  }

  const auto& alloys = doc["alloys"];
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t i = 0; i < alloys.size(); ++i) {
    const std::size_t line = line_for("alloys", i);
    EntryReader r(alloys[i], "alloys[" + std::to_string(i) + "]", line);
    r.allow_only({"solvent", "solute", "slope_uOhm_cm_per_atpct", "source"});
    AlloyEntry entry{r.string("solvent"), r.string("solute"), r.number("slope_uOhm_cm_per_atpct")};
    if (const json* s = r.optional("source"); s && !s->is_string()) r.fail("expected a string", "source");
    if (!(entry.slope > 0.0)) r.fail("slope must be > 0", "slope_uOhm_cm_per_atpct");
    if (db.metals_.count(entry.solvent) == 0) r.fail("solvent '" + entry.solvent + "' is not a listed metal", "solvent");
    if (!seen.emplace(entry.solvent, entry.solute).second) {
      throw ParseError("duplicate alloy '" + entry.solvent + "-" + entry.solute + "'", line, "solute");
    }
    db.alloys_.push_back(std::move(entry));
  }

  return db;
}

MaterialDatabase MaterialDatabase::load(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("failed reading material database stream");
  return parse(text);
}

MaterialDatabase MaterialDatabase::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open material database '" + path.string() + "'");
  return load(in);
}

const MaterialDatabase& MaterialDatabase::bundled() {
  static const MaterialDatabase db = parse(bundled_database_json());
  return db;
}

MaterialDatabase MaterialDatabase::from_environment() {
  if (const char* path = std::getenv("CHIPNOISE_DB"); path != nullptr && *path != '\0') {
    return load_file(path);
  }
  return bundled();
}

bool MaterialDatabase::has_metal(std::string_view name) const { return metals_.find(name) != metals_.end(); }

const MaterialRecord& MaterialDatabase::metal(std::string_view name) const {
  auto it = metals_.find(name);
  if (it == metals_.end()) {
    std::string msg = "unknown metal '" + std::string(name) + "'; available:";
    for (const auto& n : metal_names()) msg += " " + n;
    throw UnknownNameError(msg);
  }
  return it->second;
}

std::vector<std::string> MaterialDatabase::metal_names() const {
  std::vector<std::string> names;
  names.reserve(metals_.size());
  for (const auto& [name, _] : metals_) names.push_back(name);
  return names;
}

AlloySpec MaterialDatabase::alloy(std::string_view solvent, std::string_view solute, double concentration) const {
  for (const auto& a : alloys_) {
    if (a.solvent == solvent && a.solute == solute) {
      return AlloySpec::make(metal(solvent), a.solute, concentration, a.slope);
    }
  }
  std::string msg = "unknown alloy '" + std::string(solvent) + "-" + std::string(solute) + "'; available:";
  for (const auto& a : alloys_) msg += " " + a.solvent + "-" + a.solute;
  throw UnknownNameError(msg);
}

}  // namespace chipnoise
