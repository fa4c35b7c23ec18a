#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "walks/stepset.hpp"

namespace walks {

struct ConeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An M-quadrant cone: quadrant indices -L..K glued in a spiral; index -L is
// the open quadrant, the others include their lower boundary ray. The start
// lies in quadrant 0.
struct ConeSpec {
    int L = 1, K = 1;
    int p = 1, q = 1;  // start point, local coordinates of quadrant 0

    int M() const { return L + K + 1; }
    static ConeSpec three_quadrant(int p = 1, int q = 1) { return ConeSpec{1, 1, p, q}; }
    void validate() const {
        if (L < 0 || K < 0) throw ConeError("cone: L,K must be nonnegative");
        if (p < 1 || q < 0) throw ConeError("cone: start must satisfy p>=1, q>=0");
        if (L == 0 && q < 1)
            throw ConeError("cone: start on the x-axis requires L>=1 (quadrant -L is open)");
    }
};

// Dense per-length table over local quadrant coordinates (a>=0, b>=0).
struct Grid {
    int amax = 0, bmax = 0;
    std::vector<Rat> v;  // (a,b) -> v[a*(bmax+1)+b]
    void init(int am, int bm) {
        amax = am;
        bmax = bm;
        v.assign(static_cast<std::size_t>(am + 1) * (bm + 1), Rat(0));
    }
    Rat& at(int a, int b) { return v[static_cast<std::size_t>(a) * (bmax + 1) + b]; }
    const Rat& at(int a, int b) const {
        return v[static_cast<std::size_t>(a) * (bmax + 1) + b];
    }
    bool in_range(int a, int b) const { return a >= 0 && a <= amax && b >= 0 && b <= bmax; }
};

// Everything the cone DP produces, exactly, to order N.
struct TruncatedWalkSeries {
    StepSet steps;
    ConeSpec cone;
    int N = 0;

    // quad[j+L][n]: weights of walks of length n ending at local (a,b) of
    // quadrant j.
    std::vector<std::vector<Grid>> quad;

    // s_up[j]: S_{j-1,j} (last step j-1 -> j), exponent a of local-j (a,0).
    // s_down[j]: S_{j+1,j} (last step j+1 -> j), exponent b of local-j (1,b).
    std::map<int, std::vector<LaurentPoly>> s_up;
    std::map<int, std::vector<LaurentPoly>> s_down;

    // Dead-walk tables, indexed by the quadrant the final step left from.
    std::vector<std::vector<Rat>> TF;  // deaths at the local origin
    std::vector<LaurentPoly> U0;       // j=-L, deaths at local (a,0), a>=1
    std::vector<Rat> U1;               // j=1-L, deaths at local (0,-1)
    std::vector<LaurentPoly> U2;       // j=K, deaths at local (0,b), b>=1

    const Grid& grid(int j, int n) const {
        return quad[static_cast<std::size_t>(j + cone.L)][static_cast<std::size_t>(n)];
    }

    // Boundary series of the analytic treatment.
    // a_series: A(x_{-L};t) = U0 + x_{-L}*U1, coefficient of t^n, exponent k>=1.
    LaurentPoly a_series(int n) const;
    // b_series: B(y_K;t) = U2.
    LaurentPoly b_series(int n) const;
    // f_total: sum of all F_j.
    Rat f_total(int n) const;
    Rat f_of(int j, int n) const {
        return TF[static_cast<std::size_t>(j + cone.L)][static_cast<std::size_t>(n)];
    }

    // R_j(x_j) = x_j^{-1} S_{j-1,j}, exponent k>=0; defined for -L<j<=K.
    LaurentPoly r_series(int j, int n) const;
    // L_j(y_j) = x_j^{-1} S_{j+1,j} + [j==-L] U1, exponent k>=0; -L<=j<K.
    LaurentPoly l_series(int j, int n) const;

    // Plane endpoint table for one length: local coordinates rotated back to
    // Z^2. Valid when the cone embeds in the plane (M<=4, and M=4 only once
    // around); callers use it for M<=4 cross-checks.
    std::map<std::pair<int, int>, Rat> plane_table(int n) const;

    // Total weight of alive walks of length n.
    Rat alive_mass(int n) const;
    // Total weight of walks that die at exactly length n.
    Rat dead_mass(int n) const;
};

// Exact DP over the spiral cone.
TruncatedWalkSeries count_cone(const StepSet& s, const ConeSpec& cone, int N);

// Exhaustive path enumeration (oracle). Throws if |S|^n exceeds the budget.
std::vector<std::map<std::pair<int, int>, Rat>> brute_force_count(const StepSet& s,
                                                                  const ConeSpec& cone, int n,
                                                                  double budget = 2e8);

// Three-quadrant boundary split of Lemma-2.2 type: V1,V2 in y, H1,H2 in x.
struct VHSplit {
    int N = 0;
    std::vector<LaurentPoly> V1, V2, H1, H2;  // per t-order
};
VHSplit extract_vh(const TruncatedWalkSeries& series);

// Coefficientwise residual report for the kernel functional equations.
struct ResidualReport {
    bool exact = true;
    int worst_n = -1, worst_j = 0;
    Rat worst_value = Rat(0);
    std::string detail;
};
ResidualReport verify_functional_equation(const TruncatedWalkSeries& series);

// Mass conservation: alive(n) + dead(n) == P(1,1) * alive(n-1), exactly.
bool check_mass_conservation(const TruncatedWalkSeries& series);

}  // namespace walks
