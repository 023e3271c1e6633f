#pragma once

// Flag values with inline units. Every physical flag of the CLI goes through
// one of these; they throw std::invalid_argument with a readable message.
//
//   field        0.57G  57mG  0.057mT  5.7uT  0.79MHz  790kHz   (bare: gauss)
//   length       5  5um  0.005mm  500nm                          (bare: µm)
//   temperature  4.2  4.2K                                       (bare: K)
//   frequency    0.79  0.79MHz  790kHz  790000Hz                 (bare: MHz)
//   time         30  30s  500ms  2min                            (bare: s)
//   wire         10x2.15  10umx2.15um                            width × thickness
//   list         a:b[:step]  or  a,b,c  or  a single value
//   alloy        Ag:Au:5                                         solvent:solute:x

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chipnoise/geometry.hpp"
#include "chipnoise/noise.hpp"

namespace chipnoise::cli {

std::variant<BiasFieldGauss, LarmorMHz> parse_field(std::string_view text);
double parse_length_um(std::string_view text);
double parse_temperature(std::string_view text);
double parse_frequency_mhz(std::string_view text);
double parse_time_s(std::string_view text);
/// Plain number; "inf" accepted.
double parse_number(std::string_view text);
SlabGeometry parse_wire(std::string_view text);

/// Expands a range or list, applying `item` to each element.
std::vector<double> parse_list(std::string_view text, double (*item)(std::string_view));

struct AlloyArg {
  std::string solvent;
  std::string solute;
  double concentration = 0.0;
};
AlloyArg parse_alloy(std::string_view text);

}  // namespace chipnoise::cli
