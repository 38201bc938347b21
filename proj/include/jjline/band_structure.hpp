#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace jjline {

// Lossless infinite array: allowed Bloch states satisfy
//   cos k = bloch_rhs(w) = cos(d w) + w sin(d w) / (2 z (w^2 - 1)).
// Only the k >= 0 half is computed; the spectrum is even in k.

struct BandPoint {
    double k = 0;      // quasimomentum in [0, pi]
    double omega = 0;  // reduced frequency
};

struct Band {
    double omega_min = 0;  // refined lower edge (or window edge if clipped)
    double omega_max = 0;
    std::vector<BandPoint> points;  // ascending in omega
};

struct BandDiagram {
    std::vector<Band> bands;                      // ascending in omega
    std::vector<std::pair<double, double>> gaps;  // between adjacent bands
};

// Right-hand side of the dispersion relation. The pole at w = 1 is
// reported as a signed infinity sentinel (a gap, not a failure); when
// d = m pi the pole cancels and the analytic limit (-1)^m (1 + d/(4 z))
// is returned instead.
double bloch_rhs(double z, double d, double omega);

// Segments [lo, hi] into bands (|rhs| <= 1) on a resolution-point scan,
// refines interior edges by Brent on rhs -+ 1 and samples k = acos(rhs).
// resolution >= 1024.
BandDiagram allowed_bands(double z, double d, double lo, double hi,
                          std::size_t resolution = 8192);

// w on band band_index (0-based from the bottom of the spectrum) with
// cos k matching; root of bloch_rhs(w) - cos(k) inside the band.
double dispersion_at(double z, double d, double k, int band_index);

// Half the band width: hopping strength of the equivalent tight-binding
// chain of localized cavity modes.
double tight_binding_coupling(const BandDiagram& diagram, int band_index);

} // namespace jjline
