#pragma once

namespace jjline::constants {

// Magnetic flux quantum h/2e [Wb] (2018 CODATA, exact).
inline constexpr double flux_quantum = 2.067833848e-15;

// Reduced Planck constant [J s] (2018 CODATA, exact).
inline constexpr double hbar = 1.054571817e-34;

inline constexpr double pi = 3.141592653589793238462643383279502884;

} // namespace jjline::constants
