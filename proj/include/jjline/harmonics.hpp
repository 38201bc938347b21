#pragma once

#include <complex>
#include <vector>

#include "jjline/scattering.hpp"

namespace jjline {

// Driven lossless junction in the line, fifth-order sine expansion,
// harmonics n = 1, 3, 5 of the drive.

struct DrivePoint {
    double omega = 1.0;      // reduced drive frequency, > 0
    double amplitude = 0.0;  // reduced flux amplitude A_phi / Phi0, >= 0
    double z = 1.0;          // impedance ratio, > 0
};

// Converged solutions satisfy Re(r_n) + Re(t_n) = delta_{n,1} and
// Im(r_n) = Im(t_n); as amplitude -> 0, r1 tends to the linear r.
struct HarmonicResponse {
    cplx r1, r3, r5;
    cplx t1, t3, t5;
    bool converged = false;
    double residual = 0.0;          // final max-norm of the balance system
    bool amplitude_warning = false; // amplitude > 0.1, outside the expansion's comfort zone
};

struct DiagnosticResponse {
    std::vector<int> harmonics;  // e.g. {1, 2, 3, 4, 5}
    std::vector<cplx> r;         // one per harmonic
    bool converged = false;
    double residual = 0.0;
};

struct HarmonicMap {
    std::vector<double> omega;
    std::vector<double> amplitude;
    // row-major over (omega outer, amplitude inner):
    // index = i_omega * amplitude.size() + i_amp
    std::vector<double> r1_sq, r3_sq, r5_sq;
    std::vector<unsigned char> converged;
};

struct PhotonEstimate {
    double photons = 0.0;
    bool sub_single_photon = false;  // drive too weak for one photon; clamped
};

// Newton solution of the harmonic-balance system (6 real unknowns,
// analytic Jacobian, step-halving damping, residual target 1e-12).
// Non-convergence is reported through the flags, not thrown.
HarmonicResponse harmonic_balance(const DrivePoint& point);

// Same solver over harmonics {1..5} with the even ones seeded at
// even_seed; a healthy system drives them back to zero.
DiagnosticResponse harmonic_balance_diagnostic(const DrivePoint& point,
                                               double even_seed = 1e-3);

// Oscillation period of the full pendulum at swing amplitude 2 pi abar,
// in units of the small-swing value's 2 pi / w_J. AGM evaluation.
// Throws std::domain_error when 2 pi abar >= 1.
double pendulum_period(double abar);

// Adaptive-quadrature evaluation of the same integral, for cross-checks.
double pendulum_period_quadrature(double abar);

// Amplitude-dependent resonance frequency 2 pi / pendulum_period(abar).
double resonance_shift(double abar);

// Pointwise harmonic_balance over the grid; per-point non-convergence is
// recorded in the map, never thrown.
HarmonicMap harmonic_map(double z, const std::vector<double>& omega_grid,
                         const std::vector<double>& amplitude_grid);

// n = (abar^2 Phi0^2 / (hbar Z) - 1) / 2, scaled by N^2 for an N-junction
// mirror; negative estimates clamp to zero with the flag set.
PhotonEstimate photon_number_estimate(double abar, double impedance_ohms,
                                      int n_junctions);

} // namespace jjline
