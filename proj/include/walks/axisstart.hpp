#pragma once

#include "walks/enumerate.hpp"

namespace walks {

// t-series with Laurent-polynomial layers (index = t-order).
using TSeriesL = std::vector<LaurentPoly>;

struct AxisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed-form machinery for walks starting on the x-axis:
//   W_B(1/x;t) = x - F_1(t) - B_1(1/x;t),   W_A(1/y;t) = A_1(1/y;t),
//   I(w;t) the compositional inverse of W_B, H_p = [w^{>=0}] I^p,
//   and the boundary series A_p, B_p, F_p for starts (p,0).
struct AxisSeries {
    int N = 0;
    int p_max = 0;
    TSeriesL WB;  // layers in x (exponents <= 1)
    TSeriesL WA;  // layers in y (exponents <= -1 for n >= 1)
    TSeriesL I;   // layers in w (w + polynomials in 1/w)
    // per p in 1..p_max:
    std::vector<TSeriesL> H;    // H_p(w;t): polynomial part of I^p
    std::vector<TSeriesL> B;    // B_p as series in x (exponents <= -1)
    std::vector<TSeriesL> A;    // A_p as series in y (exponents <= -1)
    std::vector<std::vector<Rat>> F;  // F_p(t) coefficients
};

AxisSeries build_axis_series(const StepSet& s, int N, int p_max);

// Boundary series from a direct (p,0)-start enumeration, for cross-checks.
struct AxisEnumerated {
    TSeriesL B;  // exponents of x (<= -1)
    TSeriesL A;  // exponents of y (<= -1)
    std::vector<Rat> F;
};
AxisEnumerated enumerate_axis_start(const StepSet& s, int p, int N);

// Max t-order with a nonzero residual of I(W_B(1/x;t);t) = x; -1 when exact.
int reversion_selfcheck(const AxisSeries& as);

// Walks (2,0) -> (-1,0) of length n touching the boundary set
// D = {(x,0):x<=0} u {(0,y):y<=0} only at the endpoint: exactly half touch
// the ray T = {(1,y): y<=0}. Checked exactly for every n <= n_max.
struct CombiReport {
    bool holds = true;
    int n_max = 0;
    std::vector<Rat> total, touching;  // per length
};
CombiReport combi_check(const StepSet& s, int n_max);

}  // namespace walks
