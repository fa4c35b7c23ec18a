#pragma once

#include "walks/elliptic.hpp"
#include "walks/enumerate.hpp"

namespace walks {

struct ContourError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ContourSpec {
    Cplx z0;            // base point in Omega_0
    int min_nodes = 256;
    int max_nodes = 65536;
    double tol = 1e-10;
};

// Scans the imaginary axis inside Omega_0 for a point with both |X|,|Y|
// comfortably below 1.
Cplx find_base_point(const EllipticContext& ctx, double margin = 0.01);

struct IntegralResult {
    Cplx value;
    double est_error = 0;   // step-halving difference
    int nodes = 0;
    bool converged = false;
};

// Integral expressions determining F, B(u), A(u) from the base-point
// contour z0 -> z0+pi:
//   F    = -(1/2 pi i) Int X^p Y^q W'/W dz
//   B(u) =  (1/2 pi i) Int X^p Y^q W'/(W - W(u)) dz,        u in Omega_1 u Omega_2
//   A(u) = -(1/2 pi i) Int X^p Y^q W(u) (W'/W)/(W - W(u)) dz, u in Omega_-1 u Omega_-2
IntegralResult integral_F(const EllipticContext& ctx, int p, int q, const ContourSpec& spec);
IntegralResult integral_B(const EllipticContext& ctx, Cplx u, int p, int q,
                          const ContourSpec& spec);
IntegralResult integral_A(const EllipticContext& ctx, Cplx u, int p, int q,
                          const ContourSpec& spec);

// Numeric evaluation of the enumerated boundary series with its geometric
// tail bound: |sum_{n>N}| <= (t P(1,1) r)^{N+1} / (1 - t P(1,1) r) with
// r = max(1, |w|).
struct SeriesValue {
    Cplx value;
    double tail_bound = 0;
};
SeriesValue eval_boundary_series(const std::vector<LaurentPoly>& coeffs, Cplx w, double t,
                                 double weight_sum);
SeriesValue eval_scalar_series(const std::vector<Rat>& coeffs, double t, double weight_sum);

}  // namespace walks
