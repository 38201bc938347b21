#pragma once

#include <complex>
#include <vector>

namespace jjline {

using cplx = std::complex<double>;

// One mirror element: N identical junctions seen by the line as a single
// scatterer with effective impedance ratio z_eff = z / n_junctions.
struct JunctionSpec {
    double z = 1.0;       // impedance ratio Z0 / Z_J, > 0
    double gamma = 0.0;   // subgap loss rate Z_J / R, >= 0
    int n_junctions = 1;  // junction count N, >= 1
};

struct ReflectionTransmission {
    cplx r;
    cplx t;  // t = 1 - r always
};

struct Spectrum {
    std::vector<double> omega;                    // strictly increasing
    std::vector<ReflectionTransmission> values;   // one per grid point
};

// Flux-tunable junction mapped onto line units.
struct SquidResult {
    JunctionSpec spec;   // n_junctions = 1
    double omega_p = 0;  // plasma frequency 1/sqrt(L_J C_J), rad/s
    double l_j = 0;      // effective inductance, H
};

void validate(const JunctionSpec& spec);

// Reflection/transmission at reduced frequency omega = w/w_p.
//   r = 1 / (1 - i (2 z_eff / w) (w^2 + i gamma w - 1)),  t = 1 - r.
// Throws std::domain_error for omega <= 0.
ReflectionTransmission scatter(const JunctionSpec& spec, double omega);

// Fraction of incident power absorbed by the subgap resistance,
// 1 - |r|^2 - |t|^2. Identically (4 z_eff gamma) |r|^2.
double leakage_fraction(const JunctionSpec& spec, double omega);

// Cycle-averaged absorbed power for a drive of flux amplitude a_phi on a
// line of impedance z0 (caller units): (a_phi^2 w^2 / 2 z0) * leakage.
double average_power(const JunctionSpec& spec, double omega, double a_phi,
                     double z0);

// Maps a flux-biased squid (two parallel junctions) onto (z, gamma, w_p):
//   L_J = Phi0 / (4 pi I_C cos(pi flux_ratio)), Z_J = sqrt(L_J / C_J),
//   z = Z0 / Z_J, gamma = Z_J / R, Z0 = sqrt(l0 / c0).
// Throws tuning_singularity_error within 1e-6 of a half flux quantum and
// std::invalid_argument when cos(pi flux_ratio) < 0 (negative inductance).
SquidResult squid_spec(double critical_current, double capacitance,
                       double line_l0, double line_c0, double flux_ratio,
                       double resistance);

// Pointwise scatter over a strictly increasing grid.
Spectrum scatter_spectrum(const JunctionSpec& spec,
                          const std::vector<double>& grid);

} // namespace jjline
