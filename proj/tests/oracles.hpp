// Reference results computed by routes independent of the library:
// a lumped-element impedance division for the linear response and a
// time-domain integration for the driven phase dynamics.
#pragma once

#include <complex>

namespace oracle {

// Reflection of a parallel R-L-C shunt inserted in a matched line of
// impedance z0, convention e^{-i w t}: r = Z_shunt / (Z_shunt + 2 Z0).
std::complex<double> shunt_reflection(double l_j, double c_j, double r_shunt,
                                      double z0, double omega);

struct TimeDomainHarmonics {
    std::complex<double> r1, r3, r5;
};

// Integrates u'' + u'/(2z) + sin(u) = (2 pi A w / z) sin(w tau) from rest
// with fixed-step RK4, lets the transient decay, then projects the orbit
// onto e^{-i n w tau} over whole periods. The reported coefficients use
// the same normalization as the frequency-domain solver: r_n = -b_n/(4 pi A).
TimeDomainHarmonics time_domain_harmonics(double z, double omega,
                                          double amplitude,
                                          int total_periods = 400,
                                          int average_periods = 8,
                                          int steps_per_period = 4096);

} // namespace oracle
