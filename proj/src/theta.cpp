#include "walks/theta.hpp"

#include <cmath>

namespace walks {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Raw series with derivatives, valid near the base strip |Im z| <~ Im(pi tau)/2.
ThetaValue theta_series(Cplx z, Cplx tau) {
    const Cplx iptau(0.0, 0.0);
    ThetaValue out{0.0, 0.0, 0.0};
    const Cplx I(0.0, 1.0);
    for (int n = 0; n < 64; ++n) {
        Cplx qn = std::exp(I * kPi * tau * static_cast<double>(n) * static_cast<double>(n + 1));
        double m = 2.0 * n + 1.0;
        Cplx ep = std::exp(I * m * z), em = std::exp(-I * m * z);
        Cplx sgn = (n % 2 == 0) ? Cplx(1.0) : Cplx(-1.0);
        Cplx term = sgn * qn * (ep - em);
        Cplx dterm = sgn * qn * (I * m) * (ep + em);
        Cplx d2term = sgn * qn * (I * m) * (I * m) * (ep - em);
        out.f += term;
        out.df += dterm;
        out.d2f += d2term;
        double mag = std::abs(qn) * (std::abs(ep) + std::abs(em)) * (1.0 + m) * (1.0 + m);
        if (n > 2 && mag < 1e-18 * (std::abs(out.f) + std::abs(out.df) + 1.0)) break;
    }
    return out;
}

}  // namespace

ThetaValue theta_full(Cplx z, Cplx tau) {
    if (tau.imag() <= 0) throw std::domain_error("theta: Im(tau) must be positive");
    const Cplx I(0.0, 1.0);
    const double piti = kPi * tau.imag();

    // Reduce Re z modulo pi (theta picks up (-1)^k).
    double kre = std::floor(z.real() / kPi + 0.5);
    double sign = (static_cast<long long>(kre) % 2) ? -1.0 : 1.0;
    z -= kre * kPi;

    // Reduce Im z modulo pi*Im(tau) using th(z + k pi tau) = c(z) th(z) with
    // c(z) = (-1)^k e^{-2ikz - i k^2 pi tau}; track derivative factors.
    double kim = std::floor(z.imag() / piti + 0.5);
    long long k = static_cast<long long>(kim);
    Cplx zr = z - static_cast<double>(k) * kPi * tau;
    ThetaValue base = theta_series(zr, tau);
    if (k == 0) {
        base.f *= sign;
        base.df *= sign;
        base.d2f *= sign;
        return base;
    }
    // th(z) = s * e^{a z + b} th(zr) with zr = z - k pi tau,
    // a = -2ik, b = +i k^2 pi tau, s = (-1)^k.
    Cplx a = -2.0 * I * static_cast<double>(k);
    Cplx b = I * static_cast<double>(k) * static_cast<double>(k) * kPi * tau;
    double s = (k % 2) ? -1.0 : 1.0;
    Cplx pref = sign * s * std::exp(a * z + b);
    ThetaValue out;
    out.f = pref * base.f;
    out.df = pref * (a * base.f + base.df);
    out.d2f = pref * (a * a * base.f + 2.0 * a * base.df + base.d2f);
    return out;
}

Cplx theta_d3_over_d1_at0(Cplx tau) {
    const Cplx I(0.0, 1.0);
    Cplx d1 = 0.0, d3 = 0.0;
    for (int n = 0; n < 64; ++n) {
        Cplx qn = std::exp(I * kPi * tau * static_cast<double>(n) * static_cast<double>(n + 1));
        double m = 2.0 * n + 1.0;
        Cplx sgn = (n % 2 == 0) ? Cplx(1.0) : Cplx(-1.0);
        // th = sum sgn qn (e^{imz} - e^{-imz}): odd derivatives at 0: 2 (im)^j
        d1 += sgn * qn * (I * m) * 2.0;
        d3 += sgn * qn * (I * m) * (I * m) * (I * m) * 2.0;
        if (n > 2 && std::abs(qn) * m * m * m < 1e-20 * std::abs(d1)) break;
    }
    return d3 / d1;
}

}  // namespace walks
