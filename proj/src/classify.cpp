#include "walks/classify.hpp"

#include <future>
#include <sstream>

namespace walks {

std::string nature_name(Nature n) {
    switch (n) {
        case Nature::Algebraic: return "Algebraic";
        case Nature::DFiniteNotAlgebraic: return "DFiniteNotAlgebraic";
        case Nature::DAlgebraicNotDFinite: return "DAlgebraicNotDFinite";
        case Nature::NotDAlgebraicUpToBound: return "NotDAlgebraicUpToBound";
        case Nature::AlgebraicBySingularity: return "AlgebraicBySingularity";
        case Nature::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string nature_label(Nature n) {
    switch (n) {
        case Nature::Algebraic:
        case Nature::AlgebraicBySingularity: return "alg";
        case Nature::DFiniteNotAlgebraic: return "DF";
        case Nature::DAlgebraicNotDFinite: return "D-alg";
        case Nature::NotDAlgebraicUpToBound: return "D-trans";
        case Nature::Inconclusive: return "incl";
    }
    return "?";
}

Classification classify(const StepSet& s, const ConeSpec& cone, const ClassifyOptions& opt) {
    Classification out;
    out.M = cone.M();
    out.L = cone.L;
    out.K = cone.K;
    out.p = cone.p;
    out.q = cone.q;
    cone.validate();

    if (!is_nonsingular(s)) {
        out.singular = true;
        out.verdict = Nature::AlgebraicBySingularity;
        out.caveats.push_back("singular step set: model reduces to half-plane walks");
        return out;
    }

    if (out.M % 2 == 0) {
        MqcOrbitVerdict v = mqc_orbit_objects(out.M, out.L, out.p, out.q);
        out.verdict = v.tilde_e_zero ? Nature::Algebraic : Nature::DFiniteNotAlgebraic;
        out.orbit_sum_zero = v.tilde_e_zero;
        out.orbit_sum_text = v.tilde_e_zero ? "tilde-E = 0 (start on boundary axis)"
                                            : "tilde-E = N2 * tilde-J != 0";
        return out;
    }

    try {
        out.group = group_order(s, opt.group_bound, opt.seed);
    } catch (const ExpressionSwell& e) {
        out.verdict = Nature::Inconclusive;
        out.caveats.push_back(std::string("group iteration aborted: ") + e.what());
        return out;
    }

    if (out.group.finite) {
        BiRational osum = orbit_sum(s, out.p, out.q, out.group);
        out.orbit_sum_zero = osum.is_zero();
        out.orbit_sum_text = out.orbit_sum_zero ? "0" : osum.num().str() + " / " + osum.den().str();
        out.verdict = out.orbit_sum_zero ? Nature::Algebraic : Nature::DFiniteNotAlgebraic;
        // cross-check Prop-4.3 style equivalence: decoupling iff orbit sum 0
        out.decoupling =
            decoupling_search(s, out.p, out.q, opt.decoupling_degree, opt.t_samples, &out.group);
        if (out.decoupling.found != out.orbit_sum_zero)
            out.caveats.push_back(
                "orbit sum and decoupling search disagree; verdict follows the orbit sum");
        if (out.decoupling.t_dependent)
            out.caveats.push_back("decoupling search was t-dependent across samples");
        return out;
    }

    out.decoupling =
        decoupling_search(s, out.p, out.q, opt.decoupling_degree, opt.t_samples, &out.group);
    if (out.decoupling.t_dependent) {
        out.verdict = Nature::NotDAlgebraicUpToBound;
        out.caveats.push_back(
            "decoupling found at some sampled t only; possible t-dependent decoupling "
            "(open question), verdict kept bound-conditional");
        return out;
    }
    out.verdict = out.decoupling.found ? Nature::DAlgebraicNotDFinite
                                       : Nature::NotDAlgebraicUpToBound;
    if (!out.decoupling.found)
        out.caveats.push_back("group bound " + std::to_string(opt.group_bound) +
                              ", decoupling degree bound " +
                              std::to_string(opt.decoupling_degree) +
                              ": non-D-algebraicity is conditional on these bounds");
    return out;
}

std::vector<CatalogClassification> classify_catalog(const std::vector<CatalogEntry>& entries,
                                                    const ConeSpec& cone,
                                                    const ClassifyOptions& opt, int jobs) {
    std::vector<CatalogClassification> out(entries.size());
    auto work = [&](std::size_t i) {
        out[i].entry = entries[i];
        out[i].result = classify(entries[i].steps, cone, opt);
        const std::string& exp = entries[i].expected_nature;
        if (exp != "?" && !exp.empty())
            out[i].matches_expected = (exp == nature_label(out[i].result.verdict));
    };
    if (jobs <= 1) {
        for (std::size_t i = 0; i < entries.size(); ++i) work(i);
        return out;
    }
    std::vector<std::future<void>> futs;
    std::size_t next = 0;
    while (next < entries.size()) {
        futs.clear();
        for (int j = 0; j < jobs && next < entries.size(); ++j, ++next)
            futs.push_back(std::async(std::launch::async, work, next));
        for (auto& f : futs) f.get();
    }
    return out;
}

}  // namespace walks
