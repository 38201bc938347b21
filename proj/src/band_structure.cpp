#include "jjline/band_structure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "jjline/constants.hpp"
#include "jjline/numerics.hpp"

namespace jjline {

namespace {
constexpr double pi = constants::pi;

void check_zd(double z, double d) {
    if (!(z > 0.0)) throw std::invalid_argument("z must be > 0");
    if (!(d > 0.0)) throw std::invalid_argument("d must be > 0");
}
} // namespace

double bloch_rhs(double z, double d, double omega) {
    check_zd(z, d);
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be > 0");
    if (std::abs(omega - 1.0) < 1e-8) {
        const double sd = std::sin(d);
        if (std::abs(sd) < 1e-12) {
            // d = m pi: the pole cancels, limit (-1)^m (1 + d/(4z))
            const long m = std::lround(d / pi);
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            return sign * (1.0 + d / (4.0 * z));
        }
        const double s =
            (omega >= 1.0 ? 1.0 : -1.0) * (sd > 0.0 ? 1.0 : -1.0);
        return s * std::numeric_limits<double>::infinity();
    }
    return std::cos(d * omega) +
           omega * std::sin(d * omega) / (2.0 * z * (omega * omega - 1.0));
}

namespace {

// rhs evaluated at w, nudged toward `toward` until outside the sentinel
// ball around w = 1 (the true band edge is never inside it).
std::pair<double, double> finite_rhs(double z, double d, double w,
                                     double toward) {
    double v = bloch_rhs(z, d, w);
    const double step = (toward > w ? 1.0 : -1.0) * 3e-8;
    while (!std::isfinite(v)) {
        w += step;
        v = bloch_rhs(z, d, w);
    }
    return {w, v};
}

double refine_edge(double z, double d, double w_out, double w_in) {
    const auto [a, fa] = finite_rhs(z, d, w_out, w_in);
    const double target = fa > 1.0 ? 1.0 : -1.0;
    const auto f = [z, d, target](double w) {
        return bloch_rhs(z, d, w) - target;
    };
    return num::brent_root(f, a, w_in, 1e-12);
}

} // namespace

BandDiagram allowed_bands(double z, double d, double lo, double hi,
                          std::size_t resolution) {
    check_zd(z, d);
    if (!(lo > 0.0) || !(hi > lo))
        throw std::invalid_argument("bad frequency window");
    if (resolution < 1024)
        throw std::invalid_argument("resolution must be >= 1024");

    const auto grid = num::linspace(lo, hi, resolution);
    std::vector<double> rhs(resolution);
    std::vector<char> inside(resolution);
    for (std::size_t i = 0; i < resolution; ++i) {
        rhs[i] = bloch_rhs(z, d, grid[i]);
        inside[i] = std::isfinite(rhs[i]) && std::abs(rhs[i]) <= 1.0;
    }

    BandDiagram out;
    std::size_t i = 0;
    while (i < resolution) {
        if (!inside[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < resolution && inside[j + 1]) ++j;

        Band band;
        band.omega_min =
            (i == 0) ? grid[0] : refine_edge(z, d, grid[i - 1], grid[i]);
        band.omega_max = (j + 1 == resolution)
                             ? grid[j]
                             : refine_edge(z, d, grid[j + 1], grid[j]);
        if (band.omega_min < grid[i] - 1e-15) {
            const double edge_rhs = bloch_rhs(z, d, band.omega_min);
            band.points.push_back(
                {std::acos(std::clamp(edge_rhs, -1.0, 1.0)), band.omega_min});
        }
        for (std::size_t p = i; p <= j; ++p)
            band.points.push_back(
                {std::acos(std::clamp(rhs[p], -1.0, 1.0)), grid[p]});
        if (band.omega_max > grid[j] + 1e-15) {
            const double edge_rhs = bloch_rhs(z, d, band.omega_max);
            band.points.push_back(
                {std::acos(std::clamp(edge_rhs, -1.0, 1.0)), band.omega_max});
        }
        out.bands.push_back(std::move(band));
        i = j + 1;
    }
    for (std::size_t b = 1; b < out.bands.size(); ++b)
        out.gaps.emplace_back(out.bands[b - 1].omega_max,
                              out.bands[b].omega_min);
    return out;
}

double dispersion_at(double z, double d, double k, int band_index) {
    check_zd(z, d);
    if (!(k >= 0.0 && k <= pi))
        throw std::invalid_argument("k must lie in [0, pi]");
    if (band_index < 0) throw std::invalid_argument("band_index must be >= 0");
    const double lo = 1e-4;
    const double hi = (static_cast<double>(band_index) + 3.0) * pi / d;
    const std::size_t res = std::max<std::size_t>(
        8192, 2048 * (static_cast<std::size_t>(band_index) + 3));
    const BandDiagram diagram = allowed_bands(z, d, lo, hi, res);
    if (static_cast<std::size_t>(band_index) >= diagram.bands.size())
        throw std::invalid_argument("dispersion_at: band not found in scan");
    const Band& band = diagram.bands[static_cast<std::size_t>(band_index)];
    const double target = std::cos(k);
    const auto f = [z, d, target](double w) {
        return bloch_rhs(z, d, w) - target;
    };
    const double fa = f(band.omega_min), fb = f(band.omega_max);
    if (fa == 0.0) return band.omega_min;
    if (fb == 0.0) return band.omega_max;
    if ((fa > 0.0) == (fb > 0.0))
        throw std::invalid_argument(
            "dispersion_at: k not reachable on this (clipped) band");
    return num::brent_root(f, band.omega_min, band.omega_max, 1e-12);
}

double tight_binding_coupling(const BandDiagram& diagram, int band_index) {
    if (band_index < 0 ||
        static_cast<std::size_t>(band_index) >= diagram.bands.size())
        throw std::invalid_argument("tight_binding_coupling: no such band");
    const Band& b = diagram.bands[static_cast<std::size_t>(band_index)];
    return 0.5 * (b.omega_max - b.omega_min);
}

} // namespace jjline
