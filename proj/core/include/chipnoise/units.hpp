#pragma once

// Physical constants (CODATA 2018) and the unit conversions used at the
// library boundary. Public functions take and return µΩ·cm, µm, MHz, gauss,
// A/cm²; everything is converted to SI here and nowhere else.

#include <numbers>

namespace chipnoise {

namespace constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double mu0 = 1.25663706212e-6;        // N/A²
inline constexpr double k_B = 1.380649e-23;            // J/K
inline constexpr double hbar = 1.054571817e-34;        // J·s
inline constexpr double mu_B = 9.2740100783e-24;       // J/T

}  // namespace constants

namespace units {

inline constexpr double uohm_cm_to_ohm_m(double rho) { return rho * 1e-8; }
inline constexpr double ohm_m_to_uohm_cm(double rho) { return rho * 1e8; }

inline constexpr double um_to_m(double x) { return x * 1e-6; }
inline constexpr double m_to_um(double x) { return x * 1e6; }

inline constexpr double mhz_to_hz(double f) { return f * 1e6; }
inline constexpr double hz_to_mhz(double f) { return f * 1e-6; }

inline constexpr double gauss_to_tesla(double b) { return b * 1e-4; }

inline constexpr double a_per_cm2_to_a_per_m2(double j) { return j * 1e4; }

}  // namespace units

/// Room-temperature gold resistivity, the normalization standard for every
/// "noise_norm" / "rho_norm" value in the library (µΩ·cm).
inline constexpr double kGoldRoomResistivity = 2.21;
inline constexpr double kRoomTemperature = 300.0;

}  // namespace chipnoise
