#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "jjline/scattering.hpp"

namespace jjline {

enum class ScanAxis { frequency, length };

struct ResonanceSet {
    std::vector<double> roots;  // ascending, deduplicated
    ScanAxis axis = ScanAxis::frequency;
};

struct CouplingResult {
    double omega_minus = 0;
    double omega_plus = 0;  // > omega_minus
    double g = 0;           // omega_plus - omega_minus
    double omega0 = 0;      // (omega_plus + omega_minus) / 2
};

// Lossless two-mirror resonance condition tan(d w) = (2 z / w)(1 - w^2),
// solved for w in [lo, hi]. One root per tangent branch; each branch is
// bracketed between consecutive poles d w = (m +- 1/2) pi and refined by
// Brent. lo > hi yields an empty set.
ResonanceSet cavity_resonances_in_frequency(double z, double d, double lo,
                                            double hi);

// Same condition solved for the mirror separation at fixed w:
// d_m = [atan((2 z / w)(1 - w^2)) + m pi] / w intersected with [lo, hi].
ResonanceSet cavity_resonances_in_length(double z, double omega, double lo,
                                         double hi);

// Q = w d / (2 v_g (1 - |r|^2)) with v_g = 1.
// Throws infinite_q_error when |r| >= 1.
double quality_factor(double omega, double d, cplx r_mirror);

// Doublet of the three-mirror chain [J(z), Gap(d), J(z_in), Gap(d), J(z)]:
// |t_tot|^2 on a dense grid over [lo, hi] (points >= 4096), the two
// largest local maxima with prominence >= 1e-3, each refined to 1e-8.
// Throws unresolved_doublet_error when fewer than two peaks qualify.
CouplingResult coupled_cavity_coupling(double z, double z_in, double d,
                                       double gamma, double lo, double hi,
                                       std::size_t points = 16384);

} // namespace jjline
