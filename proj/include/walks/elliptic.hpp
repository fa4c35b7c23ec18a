#pragma once

#include <optional>

#include "walks/kernelnum.hpp"
#include "walks/theta.hpp"

namespace walks {

struct EllipticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric bundle for evaluating the uniformisation X(z), Y(z), the region
// chart, and the auxiliary function W(z) at fixed t.
class EllipticContext {
public:
    KernelNumerics kn;
    StepSet steps;
    Cplx tau, gamma;   // purely imaginary
    Cplx tau2;         // 2 tau - 2 gamma / pi (nome parameter of W)
    Cplx alpha, beta, delta, eps;  // roots/poles of X and Y in their strips
    Cplx xc, yc, omc;  // normalising constants
    bool omc_degenerate = false;

    double boundary_tol = 1e-8;

    // Uniformisation via the Weierstrass route; kernel residual is the
    // accuracy contract.
    Cplx X(Cplx z) const;
    Cplx Y(Cplx z) const;
    // Rotated coordinates: X_{4k}=X, X_{4k+1}=Y, X_{4k+2}=1/X, X_{4k+3}=1/Y.
    Cplx Xj(int j, Cplx z) const;
    Cplx Yj(int j, Cplx z) const { return Xj(j + 1, z); }

    // Region index: z in Omega_j. nullopt when z is numerically on a border.
    std::optional<int> region_index(Cplx z) const;

    Cplx W(Cplx z) const;
    Cplx W_log_deriv(Cplx z) const;  // W'/W
    Cplx W_prime(Cplx z) const { return W(z) * W_log_deriv(z); }

    // Theta-product form of X (Prop-2.5-type), for residual checks.
    Cplx X_theta_form(Cplx z) const;
    Cplx Y_theta_form(Cplx z) const;

    double kernel_residual(Cplx z) const;  // |t P(X,Y) - 1|

    // Weierstrass evaluation on the (omega1, omega2) lattice.
    Cplx wp(Cplx u) const;
    Cplx omega_of_z(Cplx z) const;

private:
    friend EllipticContext build_elliptic_context(const StepSet&, const Rat&);
    Cplx x_of_omega(Cplx w) const;
    Cplx y_of_omega(Cplx w) const;
    double wp_c0_ = 0;  // cached th'''(0)/(3 th'(0)) for the wp bridge
    Cplx wp_c0_cplx_;
    Cplx tau_wp_;
};

EllipticContext build_elliptic_context(const StepSet& s, const Rat& t);

// CSV grid dump of |X|, |Y| over one fundamental cell (region-chart data).
std::string region_chart_csv(const EllipticContext& ctx, int nre, int nim);

}  // namespace walks
