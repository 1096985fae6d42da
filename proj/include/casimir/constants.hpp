#pragma once

#include <numbers>

namespace casimir::constants {

// CODATA 2018 (exact SI definitions where applicable).
inline constexpr double k_B = 1.380649e-23;          // J/K
inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double c = 299792458.0;             // m/s
inline constexpr double eV = 1.602176634e-19;        // J
inline constexpr double hbar_c = hbar * c;           // J m
inline constexpr double hbar_c_eV_nm = 197.3269804;  // eV nm
inline constexpr double k_B_eV = k_B / eV;           // eV/K
inline constexpr double kT300_eV = 300.0 * k_B_eV;   // 0.0258520 eV

inline constexpr double pi = std::numbers::pi;
inline constexpr double sqrt_pi = 1.7724538509055160273;
inline constexpr double zeta3 = 1.2020569031595942854;

inline constexpr double default_temperature = 300.0;  // K

}  // namespace casimir::constants
