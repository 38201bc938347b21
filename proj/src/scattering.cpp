#include "jjline/scattering.hpp"

#include <cmath>
#include <stdexcept>

#include "jjline/constants.hpp"
#include "jjline/errors.hpp"

namespace jjline {

void validate(const JunctionSpec& spec) {
    if (!(spec.z > 0.0))
        throw std::invalid_argument("JunctionSpec: z must be > 0");
    if (!(spec.gamma >= 0.0))
        throw std::invalid_argument("JunctionSpec: gamma must be >= 0");
    if (spec.n_junctions < 1)
        throw std::invalid_argument("JunctionSpec: n_junctions must be >= 1");
}

ReflectionTransmission scatter(const JunctionSpec& spec, double omega) {
    validate(spec);
    if (!(omega > 0.0))
        throw std::domain_error("scatter: omega must be > 0");
    const double z_eff = spec.z / spec.n_junctions;
    const cplx bracket(omega * omega - 1.0, spec.gamma * omega);
    const cplx denom = 1.0 - cplx(0.0, 2.0 * z_eff / omega) * bracket;
    const cplx r = 1.0 / denom;
    return {r, 1.0 - r};
}

double leakage_fraction(const JunctionSpec& spec, double omega) {
    const auto [r, t] = scatter(spec, omega);
    return 1.0 - std::norm(r) - std::norm(t);
}

double average_power(const JunctionSpec& spec, double omega, double a_phi,
                     double z0) {
    if (!(a_phi >= 0.0))
        throw std::invalid_argument("average_power: amplitude must be >= 0");
    if (!(z0 > 0.0))
        throw std::invalid_argument("average_power: line impedance must be > 0");
    const auto [r, t] = scatter(spec, omega);
    const double z_eff = spec.z / spec.n_junctions;
    // (a^2 w^2 / 2 z0) * (1 - |r|^2 - |t|^2), written through the leakage
    // identity so gamma = 0 gives exactly zero.
    return (a_phi * a_phi * omega * omega / (2.0 * z0)) * 4.0 * z_eff *
           spec.gamma * std::norm(r);
}

SquidResult squid_spec(double critical_current, double capacitance,
                       double line_l0, double line_c0, double flux_ratio,
                       double resistance) {
    if (!(critical_current > 0.0))
        throw std::invalid_argument("squid_spec: critical current must be > 0");
    if (!(capacitance > 0.0))
        throw std::invalid_argument("squid_spec: capacitance must be > 0");
    if (!(line_l0 > 0.0) || !(line_c0 > 0.0))
        throw std::invalid_argument("squid_spec: line constants must be > 0");
    if (!(resistance > 0.0))
        throw std::invalid_argument("squid_spec: resistance must be > 0");
    const double c = std::cos(constants::pi * flux_ratio);
    if (std::abs(c) < 1e-6)
        throw tuning_singularity_error(
            "squid_spec: flux bias within 1e-6 of a half flux quantum; "
            "effective inductance diverges");
    if (c < 0.0)
        throw std::invalid_argument(
            "squid_spec: working point has negative effective inductance");
    const double l_j =
        constants::flux_quantum / (4.0 * constants::pi * critical_current * c);
    const double z_j = std::sqrt(l_j / capacitance);
    const double z0 = std::sqrt(line_l0 / line_c0);
    SquidResult out;
    out.spec = {z0 / z_j, z_j / resistance, 1};
    out.omega_p = 1.0 / std::sqrt(l_j * capacitance);
    out.l_j = l_j;
    return out;
}

Spectrum scatter_spectrum(const JunctionSpec& spec,
                          const std::vector<double>& grid) {
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument(
                "scatter_spectrum: grid must be strictly increasing");
    Spectrum out;
    out.omega = grid;
    out.values.reserve(grid.size());
    for (double w : grid) out.values.push_back(scatter(spec, w));
    return out;
}

} // namespace jjline
