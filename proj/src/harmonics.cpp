#include "jjline/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jjline/constants.hpp"
#include "jjline/numerics.hpp"

namespace jjline {

namespace {

constexpr double pi = constants::pi;

// Two-sided trigonometric spectrum: coefficient of e^{-i n w tau} for
// n in [-h, h]. A real signal has c(-n) = conj(c(n)).
class Spec {
public:
    explicit Spec(int h) : h_(h), c_(2 * h + 1) {}
    int h() const { return h_; }
    cplx get(int n) const {
        return (std::abs(n) <= h_) ? c_[static_cast<std::size_t>(n + h_)]
                                   : cplx{};
    }
    void add(int n, cplx v) { c_[static_cast<std::size_t>(n + h_)] += v; }

private:
    int h_;
    std::vector<cplx> c_;
};

Spec conv(const Spec& a, const Spec& b) {
    Spec out(a.h() + b.h());
    for (int p = -a.h(); p <= a.h(); ++p) {
        const cplx ap = a.get(p);
        if (ap == cplx{}) continue;
        for (int q = -b.h(); q <= b.h(); ++q) out.add(p + q, ap * b.get(q));
    }
    return out;
}

struct SolveResult {
    std::vector<cplx> r;
    double residual = 0.0;
    bool converged = false;
};

// Current matching per harmonic n, with the flux jump written as
// u(tau) = Re[sum_n (-4 pi abar r_n) e^{-i n w tau}] and sin u expanded
// through fifth order:
//   G_n = (i n w / 2z)(r_n - d_{n1}) + (n^2 w^2 - 1) r_n
//         + (lam^2/3) C3_n - (lam^4/60) C5_n,   lam = 4 pi abar,
// where C3, C5 are the cubic/quintic convolutions of the two-sided
// spectrum rho (rho_n = r_n/2, rho_{-n} = conj(r_n)/2). The linear part
// reproduces the closed-form r exactly.
SolveResult solve_system(double z, double w, double abar,
                         const std::vector<int>& harmonics,
                         std::vector<cplx> r) {
    const std::size_t m = harmonics.size();
    const double lam2 = 16.0 * pi * pi * abar * abar;
    const double lam4 = lam2 * lam2;
    const int hmax = *std::max_element(harmonics.begin(), harmonics.end());

    struct Eval {
        std::vector<cplx> g;
        Spec c2, c4;
    };
    const auto eval = [&](const std::vector<cplx>& rv) {
        Spec rho(hmax);
        for (std::size_t i = 0; i < m; ++i) {
            rho.add(harmonics[i], rv[i] / 2.0);
            rho.add(-harmonics[i], std::conj(rv[i]) / 2.0);
        }
        const Spec c2 = conv(rho, rho);
        const Spec c3 = conv(c2, rho);
        const Spec c4 = conv(c2, c2);
        const Spec c5 = conv(c4, rho);
        Eval out{std::vector<cplx>(m), c2, c4};
        for (std::size_t i = 0; i < m; ++i) {
            const int n = harmonics[i];
            const double nw = n * w;
            const cplx lin = cplx(0.0, nw / (2.0 * z)) *
                                 (rv[i] - (n == 1 ? 1.0 : 0.0)) +
                             (nw * nw - 1.0) * rv[i];
            out.g[i] = lin + (lam2 / 3.0) * c3.get(n) -
                       (lam4 / 60.0) * c5.get(n);
        }
        return out;
    };
    const auto max_abs = [](const std::vector<cplx>& v) {
        double s = 0.0;
        for (const cplx& x : v) s = std::max(s, std::abs(x));
        return s;
    };

    Eval cur = eval(r);
    double res = max_abs(cur.g);
    for (int iter = 0; iter < 100 && res >= 1e-12; ++iter) {
        // Wirtinger blocks: dG_n/dr_j and dG_n/dconj(r_j)
        std::vector<cplx> A(m * m), B(m * m);
        for (std::size_t i = 0; i < m; ++i) {
            const int n = harmonics[i];
            const double nw = n * w;
            for (std::size_t j = 0; j < m; ++j) {
                const int nm = n - harmonics[j];
                const int np = n + harmonics[j];
                cplx a = (lam2 / 2.0) * cur.c2.get(nm) -
                         (lam4 / 24.0) * cur.c4.get(nm);
                if (i == j) a += cplx(nw * nw - 1.0, nw / (2.0 * z));
                A[i * m + j] = a;
                B[i * m + j] = (lam2 / 2.0) * cur.c2.get(np) -
                               (lam4 / 24.0) * cur.c4.get(np);
            }
        }
        // real 2m x 2m system in (Re r, Im r)
        const std::size_t dim = 2 * m;
        std::vector<double> jac(dim * dim), rhs(dim);
        for (std::size_t i = 0; i < m; ++i) {
            rhs[i] = -cur.g[i].real();
            rhs[m + i] = -cur.g[i].imag();
            for (std::size_t j = 0; j < m; ++j) {
                const cplx sum = A[i * m + j] + B[i * m + j];
                const cplx dif = A[i * m + j] - B[i * m + j];
                jac[i * dim + j] = sum.real();
                jac[i * dim + (m + j)] = -dif.imag();
                jac[(m + i) * dim + j] = sum.imag();
                jac[(m + i) * dim + (m + j)] = dif.real();
            }
        }
        const std::vector<double> step = num::solve_dense(std::move(jac), rhs);
        double lambda = 1.0;
        for (int halve = 0; halve < 30; ++halve) {
            std::vector<cplx> trial(m);
            for (std::size_t i = 0; i < m; ++i)
                trial[i] = r[i] + lambda * cplx(step[i], step[m + i]);
            Eval next = eval(trial);
            const double next_res = max_abs(next.g);
            if (next_res < res || halve == 29) {
                r = std::move(trial);
                cur = std::move(next);
                res = next_res;
                break;
            }
            lambda *= 0.5;
        }
    }
    return {std::move(r), res, res < 1e-12};
}

void check_point(const DrivePoint& p) {
    if (!(p.z > 0.0)) throw std::invalid_argument("DrivePoint: z must be > 0");
    if (!(p.omega > 0.0))
        throw std::invalid_argument("DrivePoint: omega must be > 0");
    if (!(p.amplitude >= 0.0))
        throw std::invalid_argument("DrivePoint: amplitude must be >= 0");
}

} // namespace

HarmonicResponse harmonic_balance(const DrivePoint& point) {
    check_point(point);
    const cplx r_lin = scatter({point.z, 0.0, 1}, point.omega).r;
    const SolveResult sol = solve_system(point.z, point.omega, point.amplitude,
                                         {1, 3, 5}, {r_lin, 0.0, 0.0});
    HarmonicResponse out;
    out.r1 = sol.r[0];
    out.r3 = sol.r[1];
    out.r5 = sol.r[2];
    // transmitted harmonics from the current-matching constraints:
    // Re(t_n) = d_{n1} - Re(r_n), Im(t_n) = Im(r_n)
    out.t1 = std::conj(1.0 - sol.r[0]);
    out.t3 = std::conj(-sol.r[1]);
    out.t5 = std::conj(-sol.r[2]);
    out.converged = sol.converged;
    out.residual = sol.residual;
    out.amplitude_warning = point.amplitude > 0.1;
    return out;
}

DiagnosticResponse harmonic_balance_diagnostic(const DrivePoint& point,
                                               double even_seed) {
    check_point(point);
    const cplx r_lin = scatter({point.z, 0.0, 1}, point.omega).r;
    const std::vector<int> harmonics = {1, 2, 3, 4, 5};
    std::vector<cplx> seed = {r_lin, even_seed, 0.0, even_seed, 0.0};
    SolveResult sol =
        solve_system(point.z, point.omega, point.amplitude, harmonics, seed);
    return {harmonics, std::move(sol.r), sol.converged, sol.residual};
}

double pendulum_period(double abar) {
    if (!(abar >= 0.0))
        throw std::invalid_argument("pendulum_period: amplitude must be >= 0");
    const double k = 2.0 * pi * abar;
    if (k >= 1.0)
        throw std::domain_error(
            "pendulum_period: swing amplitude reaches the separatrix");
    return 2.0 * pi / num::agm(1.0, std::sqrt(1.0 - k * k));
}

double pendulum_period_quadrature(double abar) {
    if (!(abar >= 0.0))
        throw std::invalid_argument("pendulum_period: amplitude must be >= 0");
    const double k2 = 4.0 * pi * pi * abar * abar;
    if (k2 >= 1.0)
        throw std::domain_error(
            "pendulum_period: swing amplitude reaches the separatrix");
    return 4.0 * num::adaptive_simpson(
                     [k2](double th) {
                         const double s = std::sin(th);
                         return 1.0 / std::sqrt(1.0 - k2 * s * s);
                     },
                     0.0, pi / 2.0, 1e-14);
}

double resonance_shift(double abar) {
    return 2.0 * pi / pendulum_period(abar);
}

HarmonicMap harmonic_map(double z, const std::vector<double>& omega_grid,
                         const std::vector<double>& amplitude_grid) {
    HarmonicMap map;
    map.omega = omega_grid;
    map.amplitude = amplitude_grid;
    const std::size_t total = omega_grid.size() * amplitude_grid.size();
    map.r1_sq.resize(total);
    map.r3_sq.resize(total);
    map.r5_sq.resize(total);
    map.converged.resize(total);
    for (std::size_t iw = 0; iw < omega_grid.size(); ++iw) {
        for (std::size_t ia = 0; ia < amplitude_grid.size(); ++ia) {
            const HarmonicResponse h =
                harmonic_balance({omega_grid[iw], amplitude_grid[ia], z});
            const std::size_t idx = iw * amplitude_grid.size() + ia;
            map.r1_sq[idx] = std::norm(h.r1);
            map.r3_sq[idx] = std::norm(h.r3);
            map.r5_sq[idx] = std::norm(h.r5);
            map.converged[idx] = h.converged ? 1 : 0;
        }
    }
    return map;
}

PhotonEstimate photon_number_estimate(double abar, double impedance_ohms,
                                      int n_junctions) {
    if (!(abar >= 0.0))
        throw std::invalid_argument("photon_number_estimate: amplitude >= 0");
    if (!(impedance_ohms > 0.0))
        throw std::invalid_argument("photon_number_estimate: impedance > 0");
    if (n_junctions < 1)
        throw std::invalid_argument("photon_number_estimate: n_junctions >= 1");
    const double x = abar * abar * constants::flux_quantum *
                     constants::flux_quantum /
                     (constants::hbar * impedance_ohms);
    const double n_single = 0.5 * (x - 1.0);
    if (n_single < 0.0) return {0.0, true};
    const double nn = static_cast<double>(n_junctions);
    return {n_single * nn * nn, false};
}

} // namespace jjline
