#pragma once

#include <complex>
#include <stdexcept>

namespace walks {

using Cplx = std::complex<double>;

// Jacobi theta function
//   th(z,tau) = sum_{n>=0} (-1)^n e^{i pi tau n(n+1)} (e^{(2n+1)iz} - e^{-(2n+1)iz}),
// odd in z, with th(z+pi) = -th(z) and th(z+pi tau) = -e^{-2iz-i pi tau} th(z).
// Values are returned together with the first two z-derivatives; the argument
// is first reduced into the base strip by the quasi-periodicity relations so
// the series converges super-exponentially.
struct ThetaValue {
    Cplx f, df, d2f;
};

ThetaValue theta_full(Cplx z, Cplx tau);
inline Cplx theta(Cplx z, Cplx tau) { return theta_full(z, tau).f; }
inline Cplx theta_prime(Cplx z, Cplx tau) { return theta_full(z, tau).df; }

// Value of th'''(0,tau)/th'(0,tau) (used by the Weierstrass-function bridge).
Cplx theta_d3_over_d1_at0(Cplx tau);

}  // namespace walks
