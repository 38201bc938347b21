#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "jjline/constants.hpp"
#include "jjline/errors.hpp"
#include "jjline/numerics.hpp"
#include "jjline/scattering.hpp"
#include "oracles.hpp"

using namespace jjline;

namespace {

// circuit realization of z = 1.25, gamma = 0.01: a 40-ohm junction on a
// 50-ohm line with a 4-kilo-ohm subgap resistance
constexpr double kZj = 40.0;
constexpr double kZ0 = 50.0;
constexpr double kR = 4000.0;
constexpr double kCj = 1e-12;
constexpr double kLj = kZj * kZj * kCj;
const double kWp = 1.0 / std::sqrt(kLj * kCj);

} // namespace

TEST_SUITE_BEGIN("scattering");

TEST_CASE("reflection matches the lumped-element route") {
    const JunctionSpec spec{1.25, 0.01, 1};
    for (double w : {0.3, 0.5, 0.8, 1.0, 1.3, 2.0, 2.5}) {
        const cplx expected =
            oracle::shunt_reflection(kLj, kCj, kR, kZ0, w * kWp);
        const auto [r, t] = scatter(spec, w);
        CHECK(std::abs(r - expected) < 1e-12);
        CHECK(std::abs(t - (1.0 - r)) == 0.0);
    }
    // anchored value so both routes cannot drift together
    const cplx r_anchor(0.0678218435962119, -0.2481286960837021);
    CHECK(std::abs(scatter(spec, 0.5).r - r_anchor) < 1e-12);
}

TEST_CASE("lossless junction is a perfect mirror at the plasma frequency") {
    for (double z : {0.3, 1.25, 4.0}) {
        for (int n : {1, 2, 8}) {
            const JunctionSpec spec{z, 0.0, n};
            CHECK(std::abs(std::norm(scatter(spec, 1.0).r) - 1.0) < 1e-14);
            for (double w : {0.5, 0.9, 1.1, 2.0})
                CHECK(std::norm(scatter(spec, w).r) < 1.0);
        }
    }
}

TEST_CASE("energy balance ties leakage to |r|^2") {
    for (double z : {0.2, 1.25, 3.0}) {
        for (double gamma : {0.0, 0.01, 0.15}) {
            for (int n : {1, 4}) {
                const JunctionSpec spec{z, gamma, n};
                const double zeff = z / n;
                for (double w : {0.3, 1.0, 1.7, 2.9}) {
                    const auto [r, t] = scatter(spec, w);
                    const double direct = 1.0 - std::norm(r) - std::norm(t);
                    const double identity = 4.0 * zeff * gamma * std::norm(r);
                    CHECK(std::abs(direct - identity) < 1e-14);
                    CHECK(std::abs(leakage_fraction(spec, w) - identity) <
                          1e-14);
                }
            }
        }
    }
}

TEST_CASE("resonant peak height follows the closed form") {
    for (double z : {0.5, 1.25}) {
        for (double gamma : {0.005, 0.05}) {
            for (int n : {1, 2, 8}) {
                const JunctionSpec spec{z, gamma, n};
                const double peak = std::norm(scatter(spec, 1.0).r);
                const double expected =
                    1.0 / std::pow(1.0 + 2.0 * z * gamma / n, 2);
                CHECK(std::abs(peak - expected) < 1e-12);
            }
        }
    }
}

TEST_CASE("half-maximum width equals (N + 2 z gamma) / (2 z)") {
    // |r|^2 = peak/2 at w - 1/w = +-(1 + 2 zeff gamma)/(2 zeff), so the
    // two crossings differ by exactly that ratio
    const double z = 1.25, gamma = 0.01;
    for (int n : {1, 2, 4, 8}) {
        const JunctionSpec spec{z, gamma, n};
        const double half = 0.5 * std::norm(scatter(spec, 1.0).r);
        const auto f = [&](double w) {
            return std::norm(scatter(spec, w).r) - half;
        };
        const double left = num::brent_root(f, 0.05, 1.0);
        const double right = num::brent_root(f, 1.0, 8.0);
        const double width = right - left;
        const double expected = (n + 2.0 * z * gamma) / (2.0 * z);
        CHECK(std::abs(width - expected) < 1e-9);
    }
}

TEST_CASE("average power: dual forms agree, zero when lossless") {
    const double a = 0.7, z0 = 50.0;
    for (double gamma : {0.0, 0.02}) {
        const JunctionSpec spec{1.25, gamma, 2};
        for (double w : {0.5, 1.0, 1.8}) {
            const auto [r, t] = scatter(spec, w);
            const double direct = (a * a * w * w / (2.0 * z0)) *
                                  (1.0 - std::norm(r) - std::norm(t));
            const double p = average_power(spec, w, a, z0);
            CHECK(std::abs(p - direct) < 1e-14);
        }
    }
    const JunctionSpec lossless{0.8, 0.0, 1};
    CHECK(average_power(lossless, 1.0, 1.0, 1.0) == 0.0);
    // quadratic in amplitude, quadratic in frequency through the prefactor
    const JunctionSpec lossy{0.8, 0.03, 1};
    const double p1 = average_power(lossy, 1.0, 1.0, 1.0);
    const double p2 = average_power(lossy, 1.0, 2.0, 1.0);
    CHECK(p2 == doctest::Approx(4.0 * p1).epsilon(1e-12));
}

TEST_CASE("squid mapping reproduces hand computation at zero flux") {
    const auto sq = squid_spec(1e-6, 1e-12, 4e-7, 1.6e-10, 0.0, 5000.0);
    const double l_j =
        constants::flux_quantum / (4.0 * constants::pi * 1e-6);
    const double z_j = std::sqrt(l_j / 1e-12);
    const double z0 = std::sqrt(4e-7 / 1.6e-10);
    CHECK(sq.l_j == doctest::Approx(l_j).epsilon(1e-14));
    CHECK(sq.spec.z == doctest::Approx(z0 / z_j).epsilon(1e-14));
    CHECK(sq.spec.gamma == doctest::Approx(z_j / 5000.0).epsilon(1e-14));
    CHECK(sq.omega_p ==
          doctest::Approx(1.0 / std::sqrt(l_j * 1e-12)).epsilon(1e-14));
    CHECK(sq.spec.n_junctions == 1);
}

TEST_CASE("squid tuning: flux bias softens the junction") {
    double prev_z = 1e300;
    double prev_wp = 1e300;
    for (double f : {0.0, 0.1, 0.2, 0.3, 0.4, 0.45, 0.49}) {
        const auto sq = squid_spec(1e-6, 1e-12, 4e-7, 1.6e-10, f, 5000.0);
        CHECK(sq.spec.z < prev_z);
        CHECK(sq.omega_p < prev_wp);
        prev_z = sq.spec.z;
        prev_wp = sq.omega_p;
    }
    CHECK_THROWS_AS(squid_spec(1e-6, 1e-12, 4e-7, 1.6e-10, 0.5, 5000.0),
                    tuning_singularity_error);
    CHECK_THROWS_AS(
        squid_spec(1e-6, 1e-12, 4e-7, 1.6e-10, 0.5 + 1e-8, 5000.0),
        tuning_singularity_error);
    CHECK_THROWS_AS(squid_spec(1e-6, 1e-12, 4e-7, 1.6e-10, 0.7, 5000.0),
                    std::invalid_argument);
}

TEST_CASE("spectrum helper is pointwise scatter") {
    const JunctionSpec spec{0.9, 0.02, 3};
    const auto grid = num::linspace(0.4, 2.2, 37);
    const auto sp = scatter_spectrum(spec, grid);
    REQUIRE(sp.omega.size() == 37);
    REQUIRE(sp.values.size() == 37);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(sp.omega[i] == grid[i]);
        CHECK(sp.values[i].r == scatter(spec, grid[i]).r);
    }
    CHECK_THROWS_AS(scatter_spectrum(spec, std::vector<double>{1.0, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(scatter({0.0, 0.0, 1}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(scatter({1.0, -0.1, 1}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(scatter({1.0, 0.0, 0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(scatter({1.0, 0.0, 1}, 0.0), std::domain_error);
    CHECK_THROWS_AS(scatter({1.0, 0.0, 1}, -2.0), std::domain_error);
}

TEST_SUITE_END();
