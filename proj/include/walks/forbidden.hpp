#pragma once

#include "walks/enumerate.hpp"

namespace walks {

// Three-quadrant tables with the step from (0,1) to (1,0) suppressed (and,
// for the M-variant, also (1,0) to (0,1)).
struct ForbiddenSeries {
    int N = 0;
    int p = 1, q = 1;
    // endpoint tables per length over C
    std::vector<std::map<std::pair<int, int>, Rat>> L, M, C, C_from_10;
    std::vector<Rat> L1;  // forbidden-step-free walks ending at (0,1)
};

ForbiddenSeries forbidden_step_series(const StepSet& s, int p, int q, int N);

// Residual of L = C - w_{(1,-1)} t L1(t) C~ ; returns the first t-order with
// a nonzero residual, or -1 when the relation holds exactly to t^N.
int check_forbidden_relation(const StepSet& s, const ForbiddenSeries& fs);

}  // namespace walks
