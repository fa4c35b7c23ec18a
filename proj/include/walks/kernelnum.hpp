#pragma once

#include <array>
#include <complex>
#include <optional>

#include "walks/stepset.hpp"
#include "walks/upoly.hpp"

namespace walks {

struct KernelNumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// D(x) = x^2((A0(x)-1/t)^2 - 4 A_{-1}(x) A_1(x)) and the mirror E(y).
struct Discriminants {
    UPoly D, E;  // exact coefficients; degree 4 or 3
};
Discriminants kernel_discriminants(const StepSet& s, const Rat& t);

// Branch points of the kernel curve plus the elliptic periods that
// parameterise it. All floating point; the exact layers live elsewhere.
struct KernelNumerics {
    Rat t;
    Discriminants disc;
    std::array<double, 4> a{};  // -1<a1<a2<1<a3; a4 finite or +inf
    std::array<double, 4> b{};
    bool a4_infinite = false, b4_infinite = false;
    double x4 = 0;               // K(x4, b4) = 0
    double omega1_im = 0;        // omega1 = i*omega1_im, omega1_im > 0
    double omega2 = 0, omega3 = 0;  // 0 < omega3 < omega2
    double tau_im = 0;           // tau = i*tau_im
    double gamma_im = 0;         // gamma = i*gamma_im
    double ratio = 0;            // gamma/(pi tau) = omega3/(2 omega2)

    std::complex<double> tau() const { return {0.0, tau_im}; }
    std::complex<double> gamma() const { return {0.0, gamma_im}; }
};

// Roots of D isolated inside the intervals guaranteed by the theory
// (bisection seeded at -1, a-gaps, then Newton refinement).
std::array<double, 4> branch_points(const UPoly& D, bool& a4_infinite);

// Elliptic periods by quadrature with singularity-absorbing substitutions.
// rel_tol is the step-halving convergence target.
struct Periods {
    double omega1_im, omega2, omega3;
};
Periods periods(const UPoly& D, const std::array<double, 4>& a, bool a4_infinite, double x4,
                double rel_tol = 1e-13);

// Full numeric bundle for a model at rational t in (0, 1/P(1,1)).
KernelNumerics kernel_numerics(const StepSet& s, const Rat& t);

// Continued-fraction rational detection; heuristic only.
struct RatioDetect {
    bool rational = false;
    long num = 0, den = 1;
};
RatioDetect ratio_detect(double r, long max_den, double tol);

// gamma_j ladder of the M-quadrant treatment: gamma_{2k} = gamma + k*pi*tau,
// gamma_{2k-1} = -gamma + k*pi*tau; hat_tau = (gamma_K - gamma_{-L-1})/pi.
struct ConeAngles {
    std::complex<double> gamma_K, gamma_mLm1;
    std::complex<double> hat_tau;  // (gamma_K - gamma_{-L-1})/pi
};
ConeAngles cone_angles(const KernelNumerics& kn, int L, int K);

}  // namespace walks
