#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "doctest.h"

#include "jjline/band_structure.hpp"
#include "jjline/scattering.hpp"
#include "jjline/transfer_matrix.hpp"

using namespace jjline;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Lcg {
    std::uint64_t s;
    double next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(s >> 11) * 0x1.0p-53;
    }
    double in(double lo, double hi) { return lo + (hi - lo) * next(); }
};

double half_trace(double z, double d, double w) {
    const TransferMatrix m =
        junction_matrix({z, 0.0, 1}, w) * propagation_matrix(d, w);
    return 0.5 * (m.m00 + m.m11).real();
}

} // namespace

TEST_SUITE_BEGIN("band_structure");

TEST_CASE("dispersion rhs equals half the cell trace") {
    Lcg rng{31337};
    for (int i = 0; i < 500; ++i) {
        const double z = rng.in(0.05, 2.0);
        const double d = rng.in(0.5, 6.0);
        double w = rng.in(0.05, 4.0);
        if (std::abs(w - 1.0) < 1e-3) w += 2e-3;
        CHECK(std::abs(bloch_rhs(z, d, w) - half_trace(z, d, w)) < 1e-10);
    }
}

TEST_CASE("plasma pole: sentinel off the special lengths, limit on them") {
    CHECK(std::isinf(bloch_rhs(0.3, 2.0, 1.0)));
    CHECK(std::isinf(bloch_rhs(0.3, 2.0, 1.0 + 1e-12)));
    // d = m pi cancels the pole
    for (double z : {0.1, 0.7}) {
        CHECK(bloch_rhs(z, kPi, 1.0) ==
              doctest::Approx(-1.0 - kPi / (4.0 * z)).epsilon(1e-14));
        CHECK(bloch_rhs(z, 2.0 * kPi, 1.0) ==
              doctest::Approx(1.0 + 2.0 * kPi / (4.0 * z)).epsilon(1e-14));
        // symmetric numerical approach converges to the same value
        const double mean = 0.5 * (bloch_rhs(z, kPi, 1.0 + 1e-5) +
                                   bloch_rhs(z, kPi, 1.0 - 1e-5));
        CHECK(std::abs(mean - (-1.0 - kPi / (4.0 * z))) < 1e-8);
    }
}

TEST_CASE("band diagram at d = pi has edges on the integers") {
    const auto diagram = allowed_bands(0.1, kPi, 0.1, 4.0, 8192);
    REQUIRE(diagram.bands.size() == 4);
    // interior edges: acoustic top, then (lower, upper) per optical band
    CHECK(diagram.bands[1].omega_max == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(diagram.bands[2].omega_max == doctest::Approx(3.0).epsilon(1e-8));
    for (const auto& band : diagram.bands) {
        CHECK(band.omega_min < band.omega_max);
        REQUIRE(band.points.size() >= 8);
        for (const auto& pt : band.points) {
            CHECK(pt.k >= 0.0);
            CHECK(pt.k <= kPi);
        }
        // omega ascending within the band
        for (std::size_t i = 1; i < band.points.size(); ++i)
            CHECK(band.points[i].omega > band.points[i - 1].omega);
    }
    // the plasma frequency sits inside a spectral gap
    bool gap_holds_one = false;
    for (const auto& [lo, hi] : diagram.gaps)
        if (lo < 1.0 && 1.0 < hi) gap_holds_one = true;
    CHECK(gap_holds_one);
    REQUIRE(diagram.gaps.size() == diagram.bands.size() - 1);
    for (std::size_t i = 0; i + 1 < diagram.bands.size(); ++i) {
        CHECK(diagram.gaps[i].first ==
              doctest::Approx(diagram.bands[i].omega_max).epsilon(1e-12));
        CHECK(diagram.gaps[i].second ==
              doctest::Approx(diagram.bands[i + 1].omega_min).epsilon(1e-12));
    }
}

TEST_CASE("optical band widths grow with the band index") {
    const auto diagram = allowed_bands(0.1, kPi, 0.1, 4.0, 8192);
    REQUIRE(diagram.bands.size() == 4);
    double prev = 0.0;
    for (std::size_t b = 1; b < diagram.bands.size(); ++b) {
        const double width =
            diagram.bands[b].omega_max - diagram.bands[b].omega_min;
        CHECK(width > prev);
        prev = width;
    }
}

TEST_CASE("weaker junctions flatten every band") {
    const auto narrow = allowed_bands(0.1, kPi, 0.1, 4.0, 8192);
    const auto wide = allowed_bands(1.0, kPi, 0.1, 4.0, 8192);
    REQUIRE(narrow.bands.size() == wide.bands.size());
    for (std::size_t b = 0; b < narrow.bands.size(); ++b) {
        const double wn =
            narrow.bands[b].omega_max - narrow.bands[b].omega_min;
        const double ww = wide.bands[b].omega_max - wide.bands[b].omega_min;
        CHECK(wn < ww);
    }
}

TEST_CASE("dispersion_at inverts the relation band by band") {
    const double z = 0.1, d = kPi;
    for (int band : {0, 1, 2}) {
        for (double k : {0.3, 0.5 * kPi, 2.8}) {
            const double w = dispersion_at(z, d, k, band);
            CHECK(std::abs(bloch_rhs(z, d, w) - std::cos(k)) < 1e-10);
        }
    }
    // returned frequencies are ordered by band index at fixed k
    const double w0 = dispersion_at(z, d, 1.0, 0);
    const double w1 = dispersion_at(z, d, 1.0, 1);
    const double w2 = dispersion_at(z, d, 1.0, 2);
    CHECK(w0 < w1);
    CHECK(w1 < w2);
}

TEST_CASE("tight-binding coupling is half the band width") {
    const auto diagram = allowed_bands(0.1, kPi, 0.1, 4.0, 8192);
    for (int b : {0, 1, 2, 3}) {
        const auto& band = diagram.bands[static_cast<std::size_t>(b)];
        CHECK(tight_binding_coupling(diagram, b) ==
              doctest::Approx(0.5 * (band.omega_max - band.omega_min))
                  .epsilon(1e-14));
    }
    CHECK_THROWS_AS(tight_binding_coupling(diagram, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(tight_binding_coupling(diagram, -1),
                    std::invalid_argument);
}

TEST_CASE("scan validation") {
    CHECK_THROWS_AS(allowed_bands(0.1, kPi, 0.1, 4.0, 512),
                    std::invalid_argument);
    CHECK_THROWS_AS(allowed_bands(-0.1, kPi, 0.1, 4.0, 2048),
                    std::invalid_argument);
}

TEST_SUITE_END();
