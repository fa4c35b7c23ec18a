#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walks/birational.hpp"
#include "walks/stepset.hpp"

namespace walks {

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The two birational involutions generating the group of the walk:
//   psi(x,y) = (x, A_{-1}(x)/(A_1(x) y)),  phi(x,y) = (B_{-1}(y)/(B_1(y) x), y).
struct GroupGenerators {
    BiRational psi_y;  // y-image of psi (x-image is x)
    BiRational phi_x;  // x-image of phi (y-image is y)
};
GroupGenerators group_generators(const StepSet& s);

struct GroupReport {
    bool finite = false;
    int order = 0;   // group order 2k when finite
    int bound = 0;   // iteration bound used
    // orbit of (x,y) under powers of theta = psi.phi, when finite
    std::vector<std::pair<BiRational, BiRational>> theta_orbit;
    GroupGenerators gens;
};

// Decides finiteness of the group by iterating theta = psi.phi. Infinite
// verdicts are conditional on the bound: candidate orders are screened by
// exact orbit iteration at random points in two prime fields, and any
// candidate is confirmed by exact symbolic composition.
GroupReport group_order(const StepSet& s, int bound = 200, unsigned seed = 12345);

// Alternating orbit sum of x^p y^q over the finite group; sign = parity of
// the alternating psi/phi word length.
BiRational orbit_sum(const StepSet& s, int p, int q, const GroupReport& report);

struct DecouplingCertificate {
    bool found = false;
    bool t_dependent = false;  // solvable at some sampled t but not all
    int degree_bound = 0;
    std::vector<Rat> t_samples;
    // Certificate at the first sample: x^p y^q = R1(x) + R2(y) on the curve.
    // R1 involves only x, R2 only y.
    BiRational R1, R2;
    std::string description;  // e.g. "trivial q=0", "laurent d<=12", "orbit telescope"
    BiRational witness;       // Q with x^p y^q - R1 - R2 = K * Q at the first sample
};

// Searches for rational functions R1(x), R2(y) with x^p y^q = R1 + R2 on the
// kernel curve at each sampled t. Stages: trivial axis cases; Laurent linear
// solve up to degree d; orbit-sum telescoping for finite groups.
DecouplingCertificate decoupling_search(const StepSet& s, int p, int q, int d,
                                        const std::vector<Rat>& t_samples,
                                        const GroupReport* group = nullptr);

// Exact verification that x^p y^q - R1(x) - R2(y) vanishes on the kernel
// curve at the given t (divisibility by the kernel numerator).
bool verify_laurent_certificate(const StepSet& s, int p, int q, const Rat& t,
                                const LaurentPoly& R1, const LaurentPoly& R2,
                                BiRational* witness = nullptr);

// Parity data for M-quadrant cones: for M even the orbit object tilde-E is
// N2 * tilde-J, which vanishes iff (q=0 and L even) or (p=0 and L odd); for
// M odd tilde-E equals the ordinary orbit sum.
struct MqcOrbitVerdict {
    bool even_M = false;
    bool tilde_e_zero = false;   // meaningful when even_M
    bool delegates_to_orbit_sum = false;  // true when M odd
};
MqcOrbitVerdict mqc_orbit_objects(int M, int L, int p, int q);

}  // namespace walks
