#include "jjline/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jjline/constants.hpp"
#include "jjline/errors.hpp"
#include "jjline/numerics.hpp"
#include "jjline/transfer_matrix.hpp"

namespace jjline {

namespace {
constexpr double pi = constants::pi;
}

ResonanceSet cavity_resonances_in_frequency(double z, double d, double lo,
                                            double hi) {
    if (!(z > 0.0)) throw std::invalid_argument("z must be > 0");
    if (!(d > 0.0)) throw std::invalid_argument("d must be > 0");
    ResonanceSet out;
    out.axis = ScanAxis::frequency;
    if (!(lo > 0.0))
        throw std::invalid_argument("frequency window must start above 0");
    if (lo > hi) return out;

    const auto f = [z, d](double w) {
        return std::tan(d * w) - (2.0 * z / w) * (1.0 - w * w);
    };
    // f is strictly increasing on each tangent branch
    // (f' = d sec^2(dw) + 2z(1/w^2 + 1) > 0), so each branch holds at most
    // one root of the truncated interval.
    const long m_lo = static_cast<long>(std::floor(d * lo / pi - 0.5));
    const long m_hi = static_cast<long>(std::ceil(d * hi / pi - 0.5));
    for (long m = m_lo; m <= m_hi; ++m) {
        const double pole_l = (static_cast<double>(m) - 0.5) * pi / d;
        const double pole_r = (static_cast<double>(m) + 0.5) * pi / d;
        const double off_l = 1e-12 * (1.0 + std::abs(pole_l));
        const double off_r = 1e-12 * (1.0 + std::abs(pole_r));
        const double a = std::max(lo, pole_l + off_l);
        const double b = std::min(hi, pole_r - off_r);
        if (!(a < b)) continue;
        const double fa = f(a), fb = f(b);
        if (fa > 0.0 || fb < 0.0) continue;  // root outside the window slice
        out.roots.push_back(num::brent_root(f, a, b, 1e-12));
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

ResonanceSet cavity_resonances_in_length(double z, double omega, double lo,
                                         double hi) {
    if (!(z > 0.0)) throw std::invalid_argument("z must be > 0");
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be > 0");
    ResonanceSet out;
    out.axis = ScanAxis::length;
    if (!(lo >= 0.0))
        throw std::invalid_argument("length window must start at >= 0");
    if (lo > hi) return out;
    const double base = std::atan((2.0 * z / omega) * (1.0 - omega * omega));
    const long m_lo = static_cast<long>(std::ceil((lo * omega - base) / pi));
    const long m_hi = static_cast<long>(std::floor((hi * omega - base) / pi));
    for (long m = m_lo; m <= m_hi; ++m) {
        const double dm = (base + static_cast<double>(m) * pi) / omega;
        if (dm >= lo && dm <= hi) out.roots.push_back(dm);
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

double quality_factor(double omega, double d, cplx r_mirror) {
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be > 0");
    if (!(d > 0.0)) throw std::invalid_argument("d must be > 0");
    const double loss = 1.0 - std::norm(r_mirror);
    if (loss <= 0.0)
        throw infinite_q_error(
            "quality_factor: |r| >= 1, the mode never leaks");
    return omega * d / (2.0 * loss);
}

CouplingResult coupled_cavity_coupling(double z, double z_in, double d,
                                       double gamma, double lo, double hi,
                                       std::size_t points) {
    if (!(z > 0.0) || !(z_in > 0.0))
        throw std::invalid_argument("impedance ratios must be > 0");
    if (!(d > 0.0)) throw std::invalid_argument("d must be > 0");
    if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be >= 0");
    if (!(lo > 0.0) || !(hi > lo))
        throw std::invalid_argument("bad frequency window");
    if (points < 4096)
        throw std::invalid_argument("dense scan needs >= 4096 points");

    const ChainSpec chain = {Junction{{z, gamma, 1}}, Gap{d},
                             Junction{{z_in, gamma, 1}}, Gap{d},
                             Junction{{z, gamma, 1}}};
    const auto t2 = [&chain](double w) {
        return std::norm(scattering_from_matrix(chain_matrix(chain, w)).t);
    };

    const auto grid = num::linspace(lo, hi, points);
    std::vector<double> val(points);
    for (std::size_t i = 0; i < points; ++i) val[i] = t2(grid[i]);

    // local maxima with valley-to-valley prominence >= 1e-3
    struct Peak {
        std::size_t idx;
        double height;
    };
    std::vector<Peak> peaks;
    for (std::size_t i = 1; i + 1 < points; ++i) {
        if (!(val[i] > val[i - 1] && val[i] >= val[i + 1])) continue;
        double left_min = val[i];
        for (std::size_t j = i; j-- > 0;) {
            left_min = std::min(left_min, val[j]);
            if (val[j] > val[i]) break;
        }
        double right_min = val[i];
        for (std::size_t j = i + 1; j < points; ++j) {
            right_min = std::min(right_min, val[j]);
            if (val[j] > val[i]) break;
        }
        if (val[i] - std::max(left_min, right_min) >= 1e-3)
            peaks.push_back({i, val[i]});
    }
    if (peaks.size() < 2)
        throw unresolved_doublet_error(
            "coupled_cavity_coupling: fewer than two peaks in the window; "
            "reduce gamma or use a denser grid");
    std::sort(peaks.begin(), peaks.end(),
              [](const Peak& a, const Peak& b) { return a.height > b.height; });

    const auto refine = [&](std::size_t idx) {
        const double a = grid[idx - 1], b = grid[idx + 1];
        return num::brent_minimize([&t2](double w) { return -t2(w); }, a, b,
                                   1e-8 / std::max(1.0, 0.5 * (a + b)));
    };
    double w1 = refine(peaks[0].idx);
    double w2 = refine(peaks[1].idx);
    if (w2 < w1) std::swap(w1, w2);
    if (!(w2 - w1 > 1e-8))
        throw unresolved_doublet_error(
            "coupled_cavity_coupling: the two maxima coincide");
    CouplingResult out;
    out.omega_minus = w1;
    out.omega_plus = w2;
    out.g = w2 - w1;
    out.omega0 = 0.5 * (w1 + w2);
    return out;
}

} // namespace jjline
