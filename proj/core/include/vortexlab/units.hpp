#pragma once

namespace vortexlab {

namespace constants {
inline constexpr double c = 299'792'458.0;            // m/s
inline constexpr double epsilon0 = 8.8541878128e-12;  // F/m
inline constexpr double mu0 = 1.25663706212e-6;       // N/A^2
/// Reduced Compton wavelength of the electron, hbar / (m_e c), as used for the electron packets.
inline constexpr double lambda_bar_e = 3.86e-13;  // m
inline constexpr double pi = 3.14159265358979323846;
}  // namespace constants

/// Physical size of one internal length / time unit. Internally c = 1.
struct Scales {
  double length_m = 1.0;
  double time_s = 1.0 / constants::c;
};

}  // namespace vortexlab
