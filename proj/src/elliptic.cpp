#include "walks/elliptic.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace walks {

namespace {
constexpr double kPi = 3.14159265358979323846;
const Cplx kI(0.0, 1.0);

Cplx inf_marker() {
    return {std::numeric_limits<double>::infinity(), 0.0};
}
bool is_finite(Cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }
}  // namespace

Cplx EllipticContext::omega_of_z(Cplx z) const {
    Cplx om1 = kI * kn.omega1_im;
    return kn.omega2 / 2.0 + kn.omega3 / 4.0 - om1 / kPi * z;
}

Cplx EllipticContext::wp(Cplx u) const {
    Cplx v = kPi * u / kn.omega2;
    ThetaValue tv = theta_full(v, tau_wp_);
    if (std::abs(tv.f) == 0) return inf_marker();
    Cplx ratio = (tv.df * tv.df - tv.d2f * tv.f) / (tv.f * tv.f);
    Cplx scale = kPi / kn.omega2;
    return scale * scale * (ratio + wp_c0_cplx_);
}

Cplx EllipticContext::x_of_omega(Cplx w) const {
    const UPoly& D = kn.disc.D;
    Cplx p = wp(w);
    if (!is_finite(p)) {
        if (kn.a4_infinite) return inf_marker();
        return Cplx(kn.a[3], 0.0);
    }
    if (kn.a4_infinite) {
        double a2 = D.coeff(2).get_d(), a3 = D.coeff(3).get_d();
        return (3.0 * p - a2) / (3.0 * a3);
    }
    double a4 = kn.a[3];
    double dp = D.derivative().eval(a4);
    double dpp = D.derivative().derivative().eval(a4);
    Cplx den = p - dpp / 6.0;
    if (std::abs(den) == 0) return inf_marker();
    return a4 + dp / den;
}

Cplx EllipticContext::y_of_omega(Cplx w) const {
    const UPoly& E = kn.disc.E;
    Cplx p = wp(w - kn.omega3 / 2.0);
    if (!is_finite(p)) {
        if (kn.b4_infinite) return inf_marker();
        return Cplx(kn.b[3], 0.0);
    }
    if (kn.b4_infinite) {
        double b2 = E.coeff(2).get_d(), b3 = E.coeff(3).get_d();
        return (3.0 * p - b2) / (3.0 * b3);
    }
    double b4 = kn.b[3];
    double dp = E.derivative().eval(b4);
    double dpp = E.derivative().derivative().eval(b4);
    Cplx den = p - dpp / 6.0;
    if (std::abs(den) == 0) return inf_marker();
    return b4 + dp / den;
}

Cplx EllipticContext::X(Cplx z) const { return x_of_omega(omega_of_z(z)); }
Cplx EllipticContext::Y(Cplx z) const { return y_of_omega(omega_of_z(z)); }

Cplx EllipticContext::Xj(int j, Cplx z) const {
    switch (((j % 4) + 4) % 4) {
        case 0: return X(z);
        case 1: return Y(z);
        case 2: return 1.0 / X(z);
        default: return 1.0 / Y(z);
    }
}

std::optional<int> EllipticContext::region_index(Cplx z) const {
    double ax = std::abs(X(z)), ay = std::abs(Y(z));
    if (std::abs(ax - 1.0) < boundary_tol || std::abs(ay - 1.0) < boundary_tol)
        return std::nullopt;
    int m;
    if (ax < 1 && ay < 1) m = 0;
    else if (ax >= 1 && ay < 1) m = 1;
    else if (ax >= 1 && ay >= 1) m = 2;
    else m = 3;

    // Anchor lines: (s pi tau - gamma)/2 lies in Omega_{2s-1} u Omega_{2s},
    // (s pi tau + gamma)/2 in Omega_{2s} u Omega_{2s+1}; they ascend with s
    // interleaved, so two consecutive anchors bracket three candidate
    // regions, a unique one per residue mod 4.
    const double T = kPi * kn.tau_im, G = kn.gamma_im;
    const double h = z.imag();
    // anchor(i): i=2s -> (sT-G)/2 with top region 2s; i=2s+1 -> (sT+G)/2 with
    // top region 2s+1.
    auto anchor = [&](long i) {
        long s = (i >= 0) ? i / 2 : -((-i + 1) / 2);
        if (((i % 2) + 2) % 2 == 0) return (s * T - G) / 2.0;
        return (s * T + G) / 2.0;
    };
    // locate i with anchor(i) <= h < anchor(i+1)
    long i = static_cast<long>(std::floor(2.0 * h / T));
    while (anchor(i) > h) --i;
    while (anchor(i + 1) <= h) ++i;
    // candidates: regions (i-1, i, i+1) where region index equals the anchor
    // top index: for anchor i, regions are {i-1, i}; bracketing anchors i and
    // i+1 allow {i-1, i, i+1}.
    for (int cand = static_cast<int>(i) - 1; cand <= static_cast<int>(i) + 1; ++cand)
        if (((cand % 4) + 4) % 4 == m) return cand;
    return std::nullopt;
}

Cplx EllipticContext::W(Cplx z) const {
    Cplx pt = kPi * tau;
    Cplx n1 = theta(z - eps, tau2);
    Cplx n2 = theta(z - pt + gamma + eps, tau2);
    Cplx d1 = theta(z - delta, tau2);
    Cplx d2 = theta(z - pt + gamma + delta, tau2);
    if (std::abs(d1 * d2) == 0) return inf_marker();
    return omc * n1 * n2 / (d1 * d2);
}

Cplx EllipticContext::W_log_deriv(Cplx z) const {
    Cplx pt = kPi * tau;
    auto r = [&](Cplx w) {
        ThetaValue tv = theta_full(w, tau2);
        return tv.df / tv.f;
    };
    return r(z - eps) + r(z - pt + gamma + eps) - r(z - delta) - r(z - pt + gamma + delta);
}

Cplx EllipticContext::X_theta_form(Cplx z) const {
    return xc * theta(z - alpha, tau) * theta(z + gamma + alpha, tau) /
           (theta(z - delta, tau) * theta(z + gamma + delta, tau));
}

Cplx EllipticContext::Y_theta_form(Cplx z) const {
    return yc * theta(z - beta, tau) * theta(z - gamma + beta, tau) /
           (theta(z - eps, tau) * theta(z - gamma + eps, tau));
}

double EllipticContext::kernel_residual(Cplx z) const {
    Cplx x = X(z), y = Y(z);
    if (!is_finite(x) || !is_finite(y)) return 0.0;
    Cplx P = 0.0;
    for (auto& [st, w] : steps.steps())
        P += w.get_d() * std::pow(x, st.dx) * std::pow(y, st.dy);
    return std::abs(kn.t.get_d() * P - 1.0);
}

namespace {

// Solve wp(omega) = c on the torus: coarse grid then Newton with numeric
// derivative. Returns one solution.
Cplx solve_wp(const EllipticContext& ctx, Cplx c) {
    const double om2 = ctx.kn.omega2, om1i = ctx.kn.omega1_im;
    Cplx best = 0;
    double bestv = 1e300;
    const int NR = 48, NI = 48;
    for (int i = 1; i < NR; ++i) {
        for (int j = 1; j < NI; ++j) {
            Cplx u(om2 * i / NR, om1i * j / NI);
            Cplx v = ctx.wp(u) - c;
            if (!is_finite(v)) continue;
            double av = std::abs(v);
            if (av < bestv) {
                bestv = av;
                best = u;
            }
        }
    }
    Cplx u = best;
    const double h = 1e-7;
    for (int it = 0; it < 80; ++it) {
        Cplx f = ctx.wp(u) - c;
        if (std::abs(f) < 1e-13 * (1.0 + std::abs(c))) break;
        Cplx df = (ctx.wp(u + h) - ctx.wp(u - h)) / (2.0 * h);
        if (!is_finite(df) || std::abs(df) == 0) break;
        u -= f / df;
    }
    return u;
}

}  // namespace

EllipticContext build_elliptic_context(const StepSet& s, const Rat& t) {
    EllipticContext ctx;
    ctx.kn = kernel_numerics(s, t);
    ctx.steps = s;
    ctx.tau = Cplx(0.0, ctx.kn.tau_im);
    ctx.gamma = Cplx(0.0, ctx.kn.gamma_im);
    ctx.tau2 = 2.0 * ctx.tau - 2.0 * ctx.gamma / kPi;
    ctx.tau_wp_ = (kI * ctx.kn.omega1_im) / ctx.kn.omega2;
    ctx.wp_c0_cplx_ = theta_d3_over_d1_at0(ctx.tau_wp_) / 3.0;

    const Cplx pt = kPi * ctx.tau;
    auto z_of_omega = [&](Cplx w) {
        Cplx om1 = kI * ctx.kn.omega1_im;
        return (ctx.kn.omega2 / 2.0 + ctx.kn.omega3 / 4.0 - w) * kPi / om1;
    };

    // Locate a special point among the two wp-preimages and their lattice
    // translates, inside the required region pair.
    auto locate = [&](Cplx wp_target, bool target_is_pole_x, bool on_x_side, int rlo,
                      int rhi) -> Cplx {
        std::vector<Cplx> omegas;
        Cplx shift = on_x_side ? Cplx(0.0) : Cplx(ctx.kn.omega3 / 2.0);
        if (is_finite(wp_target)) {
            Cplx u = solve_wp(ctx, wp_target);
            omegas = {u + shift, -u + shift};
        } else {
            omegas = {shift};
        }
        (void)target_is_pole_x;
        for (Cplx w : omegas) {
            Cplx z0 = z_of_omega(w);
            // normalise the real part into [0, pi)
            double kre = std::floor(z0.real() / kPi);
            z0 -= kre * kPi;
            for (int k = -4; k <= 4; ++k) {
                Cplx zz = z0 + static_cast<double>(k) * pt;
                // nudge off the point for the region test
                Cplx probe = zz + Cplx(0.137, 0.000003);
                auto reg = ctx.region_index(probe);
                if (!reg) continue;
                if (*reg >= rlo && *reg <= rhi) return zz;
            }
        }
        throw EllipticError("special point not found in its region");
    };

    const UPoly& D = ctx.kn.disc.D;
    const UPoly& E = ctx.kn.disc.E;
    Cplx zero_target_x, pole_target_x, zero_target_y, pole_target_y;
    if (ctx.kn.a4_infinite) {
        zero_target_x = Cplx(D.coeff(2).get_d() / 3.0, 0.0);
        pole_target_x = inf_marker();
    } else {
        double a4 = ctx.kn.a[3];
        double c6 = D.derivative().derivative().eval(a4) / 6.0;
        pole_target_x = Cplx(c6, 0.0);
        zero_target_x = Cplx(c6 - D.derivative().eval(a4) / a4, 0.0);
    }
    if (ctx.kn.b4_infinite) {
        zero_target_y = Cplx(E.coeff(2).get_d() / 3.0, 0.0);
        pole_target_y = inf_marker();
    } else {
        double b4 = ctx.kn.b[3];
        double c6 = E.derivative().derivative().eval(b4) / 6.0;
        pole_target_y = Cplx(c6, 0.0);
        zero_target_y = Cplx(c6 - E.derivative().eval(b4) / b4, 0.0);
    }

    ctx.alpha = locate(zero_target_x, false, true, -1, 0);
    ctx.delta = locate(pole_target_x, true, true, 1, 2);
    ctx.beta = locate(zero_target_y, false, false, 0, 1);
    ctx.eps = locate(pole_target_y, true, false, -2, -1);

    // Newton-polish the special points on X/Y directly (numeric derivative).
    auto polish = [&](Cplx z0, bool x_side, bool pole) {
        const double h = 1e-6;
        Cplx z = z0;
        auto f = [&](Cplx w) {
            Cplx v = x_side ? ctx.X(w) : ctx.Y(w);
            if (pole) return is_finite(v) ? 1.0 / v : Cplx(0.0);
            return v;
        };
        for (int it = 0; it < 50; ++it) {
            Cplx fv = f(z);
            if (std::abs(fv) < 1e-13) break;
            Cplx df = (f(z + h) - f(z - h)) / (2.0 * h);
            if (!is_finite(df) || std::abs(df) == 0) break;
            Cplx step = fv / df;
            if (std::abs(step) > 0.5) step *= 0.5 / std::abs(step);
            z -= step;
        }
        return z;
    };
    ctx.alpha = polish(ctx.alpha, true, false);
    ctx.delta = polish(ctx.delta, true, true);
    ctx.beta = polish(ctx.beta, false, false);
    ctx.eps = polish(ctx.eps, false, true);

    // Fit the normalisers at a generic point and validate elsewhere.
    auto fit_const = [&](bool x_side) {
        Cplx ztest(0.7231, 0.31 * ctx.kn.gamma_im);
        Cplx v = x_side ? ctx.X(ztest) : ctx.Y(ztest);
        Cplx quot;
        if (x_side) {
            quot = theta(ztest - ctx.alpha, ctx.tau) * theta(ztest + ctx.gamma + ctx.alpha, ctx.tau) /
                   (theta(ztest - ctx.delta, ctx.tau) * theta(ztest + ctx.gamma + ctx.delta, ctx.tau));
        } else {
            quot = theta(ztest - ctx.beta, ctx.tau) * theta(ztest - ctx.gamma + ctx.beta, ctx.tau) /
                   (theta(ztest - ctx.eps, ctx.tau) * theta(ztest - ctx.gamma + ctx.eps, ctx.tau));
        }
        return v / quot;
    };
    ctx.xc = fit_const(true);
    ctx.yc = fit_const(false);
    for (int k = 1; k <= 20; ++k) {
        Cplx z(0.11 + 0.143 * k, (0.8 * (k % 5) / 5.0 - 0.4) * ctx.kn.gamma_im);
        double rx = std::abs(ctx.X(z) - ctx.X_theta_form(z));
        double ry = std::abs(ctx.Y(z) - ctx.Y_theta_form(z));
        double sx = std::abs(ctx.X(z)) + 1.0, sy = std::abs(ctx.Y(z)) + 1.0;
        if (rx > 1e-7 * sx || ry > 1e-7 * sy)
            throw EllipticError("theta-product form of X/Y failed validation");
    }

    // omega_c of the W-function; degenerate branch when 2 delta + gamma hits
    // pi tau + pi Z.
    Cplx num_test = theta(2.0 * ctx.delta + ctx.gamma, ctx.tau);
    Cplx th0p2 = theta_prime(Cplx(0.0), ctx.tau2);
    Cplx th0p1 = theta_prime(Cplx(0.0), ctx.tau);
    Cplx adn = theta(ctx.delta - ctx.alpha, ctx.tau) * theta(ctx.delta + ctx.gamma + ctx.alpha, ctx.tau);
    Cplx wdn = theta(ctx.delta - ctx.eps, ctx.tau2) * theta(ctx.delta - pt + ctx.gamma + ctx.eps, ctx.tau2);
    if (std::abs(num_test) > 1e-7) {
        ctx.omc = ctx.xc * th0p2 * theta(2.0 * ctx.delta - pt + ctx.gamma, ctx.tau2) * adn /
                  (wdn * th0p1 * num_test);
        ctx.omc_degenerate = false;
    } else {
        ctx.omc = -std::exp(kI * pt) * ctx.xc * th0p2 * th0p2 * adn / (wdn * th0p1 * th0p1);
        ctx.omc_degenerate = true;
    }
    return ctx;
}

std::string region_chart_csv(const EllipticContext& ctx, int nre, int nim) {
    std::ostringstream os;
    os << "re,im,absX,absY,region\n";
    double T = kPi * ctx.kn.tau_im;
    for (int i = 0; i <= nre; ++i) {
        for (int j = 0; j <= nim; ++j) {
            Cplx z(kPi * i / nre, -T + 2.0 * T * j / nim);
            auto reg = ctx.region_index(z);
            os << z.real() << "," << z.imag() << "," << std::abs(ctx.X(z)) << ","
               << std::abs(ctx.Y(z)) << "," << (reg ? std::to_string(*reg) : "boundary") << "\n";
        }
    }
    return os.str();
}

}  // namespace walks
