#include "walks/contour.hpp"

#include <cmath>

namespace walks {

namespace {
constexpr double kPi = 3.14159265358979323846;

template <typename F>
IntegralResult trapezoid_period(F&& f, const ContourSpec& spec) {
    // The integrands are pi-periodic and analytic near the path, so the
    // periodic trapezoid rule converges geometrically.
    IntegralResult res;
    int n = spec.min_nodes;
    Cplx prev = 0;
    double h = kPi / n;
    Cplx sum = 0;
    for (int i = 0; i < n; ++i) sum += f(spec.z0 + h * static_cast<double>(i));
    prev = sum * h;
    while (n < spec.max_nodes) {
        Cplx add = 0;
        for (int i = 0; i < n; ++i) add += f(spec.z0 + h * (static_cast<double>(i) + 0.5));
        Cplx cur = 0.5 * prev + 0.5 * h * add;
        n *= 2;
        h *= 0.5;
        res.est_error = std::abs(cur - prev);
        prev = cur;
        if (res.est_error <= spec.tol * (1.0 + std::abs(cur))) {
            res.converged = true;
            break;
        }
    }
    res.value = prev;
    res.nodes = n;
    return res;
}

Cplx xy_pow(const EllipticContext& ctx, Cplx z, int p, int q) {
    return std::pow(ctx.X(z), p) * std::pow(ctx.Y(z), q);
}

}  // namespace

Cplx find_base_point(const EllipticContext& ctx, double margin) {
    const double G = ctx.kn.gamma_im;
    Cplx best = 0;
    double best_score = 2.0;
    for (int i = -40; i <= 40; ++i) {
        for (int re = 0; re < 8; ++re) {
            Cplx z(kPi * re / 8.0, G * 0.49 * i / 40.0);
            double ax = std::abs(ctx.X(z)), ay = std::abs(ctx.Y(z));
            double score = std::max(ax, ay);
            if (score < best_score) {
                best_score = score;
                best = z;
            }
        }
    }
    if (best_score >= 1.0 - margin)
        throw ContourError("find_base_point: no interior point of Omega_0 found");
    auto reg = ctx.region_index(best);
    if (!reg || *reg != 0)
        throw ContourError("find_base_point: candidate not recognised as Omega_0");
    return best;
}

IntegralResult integral_F(const EllipticContext& ctx, int p, int q, const ContourSpec& spec) {
    auto f = [&](Cplx z) { return xy_pow(ctx, z, p, q) * ctx.W_log_deriv(z); };
    IntegralResult r = trapezoid_period(f, spec);
    r.value *= -1.0 / (2.0 * kPi * Cplx(0.0, 1.0));
    r.est_error /= 2.0 * kPi;
    return r;
}

IntegralResult integral_B(const EllipticContext& ctx, Cplx u, int p, int q,
                          const ContourSpec& spec) {
    Cplx Wu = ctx.W(u);
    auto f = [&](Cplx z) {
        return xy_pow(ctx, z, p, q) * ctx.W_prime(z) / (ctx.W(z) - Wu);
    };
    IntegralResult r = trapezoid_period(f, spec);
    r.value *= 1.0 / (2.0 * kPi * Cplx(0.0, 1.0));
    r.est_error /= 2.0 * kPi;
    return r;
}

IntegralResult integral_A(const EllipticContext& ctx, Cplx u, int p, int q,
                          const ContourSpec& spec) {
    Cplx Wu = ctx.W(u);
    auto f = [&](Cplx z) {
        Cplx Wz = ctx.W(z);
        return xy_pow(ctx, z, p, q) * Wu * (ctx.W_prime(z) / Wz) / (Wz - Wu);
    };
    IntegralResult r = trapezoid_period(f, spec);
    r.value *= -1.0 / (2.0 * kPi * Cplx(0.0, 1.0));
    r.est_error /= 2.0 * kPi;
    return r;
}

SeriesValue eval_boundary_series(const std::vector<LaurentPoly>& coeffs, Cplx w, double t,
                                 double weight_sum) {
    SeriesValue out{0.0, 0.0};
    double tn = 1.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        const LaurentPoly& lp = coeffs[n];
        Cplx layer = 0.0;
        for (int k = lp.min_exp(); k <= lp.max_exp(); ++k) {
            Rat c = lp.coeff(k);
            if (c != 0) layer += c.get_d() * std::pow(w, k);
        }
        out.value += layer * tn;
        tn *= t;
    }
    double r = std::max(1.0, std::abs(w));
    double rho = t * weight_sum * r;
    if (rho >= 1.0) {
        out.tail_bound = std::numeric_limits<double>::infinity();
    } else {
        out.tail_bound = std::pow(rho, static_cast<double>(coeffs.size())) / (1.0 - rho);
    }
    return out;
}

SeriesValue eval_scalar_series(const std::vector<Rat>& coeffs, double t, double weight_sum) {
    SeriesValue out{0.0, 0.0};
    double tn = 1.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        out.value += coeffs[n].get_d() * tn;
        tn *= t;
    }
    double rho = t * weight_sum;
    out.tail_bound = std::pow(rho, static_cast<double>(coeffs.size())) / (1.0 - rho);
    return out;
}

}  // namespace walks
