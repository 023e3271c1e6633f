#include "chipnoise_cli/parse.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace chipnoise::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view what, std::string_view text) {
  throw std::invalid_argument("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
}

// Leading number and the remaining suffix.
std::pair<double, std::string_view> split_number(std::string_view text, std::string_view what) {
  const std::string_view s = trim(text);
  if (s == "inf" || s == "+inf") return {INFINITY, {}};
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr == first) fail(what, text);
  return {value, trim(std::string_view(ptr, static_cast<std::size_t>(last - ptr)))};
}

struct Unit {
  std::string_view suffix;
  double scale;
};

double with_units(std::string_view text, std::string_view what, std::initializer_list<Unit> units) {
  const auto [value, suffix] = split_number(text, what);
  if (suffix.empty()) return value;
  for (const auto& u : units) {
    if (suffix == u.suffix) return value * u.scale;
  }
  fail(what, text);
}

}  // namespace

std::variant<BiasFieldGauss, LarmorMHz> parse_field(std::string_view text) {
  const auto [value, suffix] = split_number(text, "field");
  if (suffix.empty() || suffix == "G") return BiasFieldGauss{value};
  if (suffix == "mG") return BiasFieldGauss{value * 1e-3};
  if (suffix == "T") return BiasFieldGauss{value * 1e4};
  if (suffix == "mT") return BiasFieldGauss{value * 10.0};
  if (suffix == "uT") return BiasFieldGauss{value * 1e-2};
  if (suffix == "MHz") return LarmorMHz{value};
  if (suffix == "kHz") return LarmorMHz{value * 1e-3};
  if (suffix == "Hz") return LarmorMHz{value * 1e-6};
  fail("field", text);
}

double parse_length_um(std::string_view text) {
  return with_units(text, "length", {{"um", 1.0}, {"mm", 1e3}, {"nm", 1e-3}, {"m", 1e6}});
}

double parse_temperature(std::string_view text) { return with_units(text, "temperature", {{"K", 1.0}}); }

double parse_frequency_mhz(std::string_view text) {
  return with_units(text, "frequency", {{"MHz", 1.0}, {"kHz", 1e-3}, {"Hz", 1e-6}, {"GHz", 1e3}});
}

double parse_time_s(std::string_view text) {
  return with_units(text, "time", {{"s", 1.0}, {"ms", 1e-3}, {"min", 60.0}, {"h", 3600.0}});
}

double parse_number(std::string_view text) { return with_units(text, "number", {}); }

SlabGeometry parse_wire(std::string_view text) {
  const auto pos = text.find('x');
  if (pos == std::string_view::npos) fail("wire (expected WIDTHxTHICKNESS)", text);
  return SlabGeometry::make(parse_length_um(text.substr(0, pos)), parse_length_um(text.substr(pos + 1)));
}

std::vector<double> parse_list(std::string_view text, double (*item)(std::string_view)) {
  std::vector<double> out;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto end = text.find(',', start);
      const auto piece = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
      out.push_back(item(piece));
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    return out;
  }
  const auto c1 = text.find(':');
  if (c1 == std::string_view::npos) return {item(text)};

  const auto c2 = text.find(':', c1 + 1);
  const double lo = item(text.substr(0, c1));
  const double hi = item(text.substr(c1 + 1, c2 == std::string_view::npos ? text.npos : c2 - c1 - 1));
  const double step = c2 == std::string_view::npos ? 1.0 : item(text.substr(c2 + 1));
  if (!(step > 0.0) || !std::isfinite(step)) fail("range step", text);
  if (!(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) fail("range (expected lo <= hi)", text);
  // Integer stepping avoids accumulating round-off; the end point is kept
  // when it lies on the grid to within a small fraction of a step.
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  if (n > 10'000'000) fail("range (too many points)", text);
  for (long i = 0; i <= n; ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

AlloyArg parse_alloy(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) fail("alloy (expected SOLVENT:SOLUTE:x)", text);
  AlloyArg a;
  a.solvent = std::string(trim(text.substr(0, c1)));
  a.solute = std::string(trim(text.substr(c1 + 1, c2 - c1 - 1)));
  auto x = text.substr(c2 + 1);
  if (!x.empty() && x.back() == '%') x.remove_suffix(1);
  a.concentration = parse_number(x);
  if (a.solvent.empty() || a.solute.empty()) fail("alloy (expected SOLVENT:SOLUTE:x)", text);
  return a;
}

}  // namespace chipnoise::cli
