#pragma once

#include <string>
#include <vector>

#include "walks/catalog.hpp"
#include "walks/enumerate.hpp"
#include "walks/groupalg.hpp"

namespace walks {

enum class Nature {
    Algebraic,
    DFiniteNotAlgebraic,
    DAlgebraicNotDFinite,
    NotDAlgebraicUpToBound,
    AlgebraicBySingularity,  // singular step sets reduce to half-plane models
    Inconclusive,
};

std::string nature_name(Nature n);

struct Classification {
    Nature verdict = Nature::Inconclusive;
    // evidence
    bool singular = false;
    GroupReport group;
    bool orbit_sum_zero = false;
    std::string orbit_sum_text;
    DecouplingCertificate decoupling;
    int M = 0, L = 0, K = 0, p = 0, q = 0;
    std::vector<std::string> caveats;
};

struct ClassifyOptions {
    int group_bound = 200;
    int decoupling_degree = 12;
    std::vector<Rat> t_samples = {Rat(1, 17), Rat(1, 23), Rat(2, 37)};
    unsigned seed = 12345;
};

// Decision tree over the step set and cone:
//   singular -> algebraic (half-plane reduction), reported as such;
//   M even   -> D-finite; algebraic iff the start sits on the boundary axis;
//   M odd    -> finite group? (orbit sum zero ? algebraic : D-finite)
//               : (decoupling ? D-algebraic : not D-algebraic up to bound).
Classification classify(const StepSet& s, const ConeSpec& cone,
                        const ClassifyOptions& opt = {});

struct CatalogClassification {
    CatalogEntry entry;
    Classification result;
    bool matches_expected = true;  // false only when an expectation exists and differs
};
std::vector<CatalogClassification> classify_catalog(const std::vector<CatalogEntry>& entries,
                                                    const ConeSpec& cone,
                                                    const ClassifyOptions& opt = {},
                                                    int jobs = 1);

// Rendering of expected-nature labels used by catalog files.
std::string nature_label(Nature n);

}  // namespace walks
