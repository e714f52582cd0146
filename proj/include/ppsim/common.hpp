// common.hpp
// Shared aliases and tolerance defaults for the ppsim library.

#pragma once

#include <complex>

namespace ppsim {

using Complex = std::complex<double>;

// Default tolerance for floating-point assertions layered on exact
// integer structure (balance sums, Gram identities, path agreement).
inline constexpr double kDefaultTolerance = 1e-9;

// Tighter bound used where two float paths differ only by reassociation.
inline constexpr double kTightTolerance = 1e-12;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace ppsim
