#include "walks/kernelnum.hpp"

#include <cmath>
#include <limits>

namespace walks {

namespace {

UPoly laurent_times_x(const LaurentPoly& lp) {
    // x * L(x) for L with exponents in [-1,1]
    std::vector<Rat> c(3);
    for (int e = -1; e <= 1; ++e) c[static_cast<std::size_t>(e + 1)] = lp.coeff(e);
    return UPoly(std::move(c));
}

UPoly reflect_poly(const UPoly& P) {  // P(-x)
    if (P.is_zero()) return P;
    std::vector<Rat> rc(static_cast<std::size_t>(P.degree()) + 1);
    for (int i = 0; i <= P.degree(); ++i)
        rc[static_cast<std::size_t>(i)] = (i % 2 ? -P.coeff(i) : P.coeff(i));
    return UPoly(std::move(rc));
}

// Double-precision image of a UPoly for hot evaluation loops.
struct DPoly {
    std::vector<double> c;
    explicit DPoly(const UPoly& p) {
        c.resize(static_cast<std::size_t>(p.degree() + 1));
        for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i)] = p.coeff(i).get_d();
    }
    double eval(double x) const {
        double acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    double leading() const { return c.empty() ? 0.0 : c.back(); }
};

// Real roots of a polynomial of degree <= 3 (trigonometric/Cardano form).
std::vector<double> real_roots_cubic(const UPoly& P) {
    std::vector<double> out;
    int d = P.degree();
    if (d <= 0) return out;
    if (d == 1) {
        out.push_back(-P.coeff(0).get_d() / P.coeff(1).get_d());
        return out;
    }
    if (d == 2) {
        double a = P.coeff(2).get_d(), b = P.coeff(1).get_d(), c = P.coeff(0).get_d();
        double disc = b * b - 4 * a * c;
        if (disc < 0) return out;
        double sq = std::sqrt(disc);
        out.push_back((-b - sq) / (2 * a));
        out.push_back((-b + sq) / (2 * a));
        std::sort(out.begin(), out.end());
        return out;
    }
    double a = P.coeff(3).get_d(), b = P.coeff(2).get_d(), c = P.coeff(1).get_d(),
           e = P.coeff(0).get_d();
    // depressed cubic u^3 + pu + q with x = u - b/(3a)
    double sh = b / (3 * a);
    double p = c / a - sh * b / a + 0.0;
    p = (3 * a * c - b * b) / (3 * a * a);
    double q = (2 * b * b * b - 9 * a * b * c + 27 * a * a * e) / (27 * a * a * a);
    double disc = -(4 * p * p * p + 27 * q * q);
    if (disc > 0) {
        double m = 2 * std::sqrt(-p / 3);
        double th = std::acos(std::clamp(3 * q / (p * m), -1.0, 1.0)) / 3.0;
        for (int k = 0; k < 3; ++k) out.push_back(m * std::cos(th - 2 * M_PI * k / 3) - sh);
    } else {
        double A = std::cbrt(-q / 2 + std::sqrt(std::max(0.0, q * q / 4 + p * p * p / 27)));
        double B = (A == 0) ? 0.0 : -p / (3 * A);
        out.push_back(A + B - sh);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double refine_root(const UPoly& D, double lo, double hi) {
    double flo = D.eval(lo), fhi = D.eval(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0)) throw KernelNumError("branch_points: bracketing failed");
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = D.eval(mid);
        if (fm == 0) return mid;
        if ((fm > 0) == (flo > 0)) lo = mid;
        else hi = mid;
    }
    UPoly Dp = D.derivative();
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 40; ++it) {
        double f = D.eval(x), df = Dp.eval(x);
        if (df == 0) break;
        double nx = x - f / df;
        if (std::abs(nx - x) <= 1e-16 * (1.0 + std::abs(x))) return nx;
        x = nx;
    }
    return x;
}

// Step-halved trapezoid over [0,1] for smooth integrands.
template <typename F>
double integrate01(F&& f, double rel_tol) {
    int n = 64;
    double h = 1.0 / n;
    double sum = 0.5 * (f(0.0) + f(1.0));
    for (int i = 1; i < n; ++i) sum += f(i * h);
    double prev = sum * h;
    for (int iter = 0; iter < 14; ++iter) {
        double add = 0;
        for (int i = 0; i < n; ++i) add += f((i + 0.5) * h);
        double cur = 0.5 * prev + (0.5 * h) * add;
        n *= 2;
        h *= 0.5;
        if (iter >= 3 && std::abs(cur - prev) <= rel_tol * (std::abs(cur) + 1e-300)) return cur;
        prev = cur;
    }
    return prev;
}

// int_a^b dx/sqrt(P) with simple roots of P at both ends; P > 0 inside.
double seg_root_root(const UPoly& Pq, double a, double b, double rel_tol) {
    DPoly P(Pq), Pp(Pq.derivative());
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    auto f = [&](double u) {
        double th = -M_PI / 2 + M_PI * u;
        double x = mid + half * std::sin(th);
        double c = std::cos(th);
        if (u <= 0.0 || u >= 1.0) {
            // limit: cos/sqrt(P) ~ sqrt(2/(half |P'(end)|)) * const; compute via
            // P(x) ~ P'(end)(x-end): cos(th)/sqrt(P) -> sqrt(2/(half*|P'|)).
            double end = u <= 0.0 ? a : b;
            double dp = std::abs(Pp.eval(end));
            if (dp == 0) return 0.0;
            return M_PI * half * std::sqrt(2.0 / (half * dp));
        }
        double g = P.eval(x);
        if (g <= 0) return 0.0;
        return M_PI * half * c / std::sqrt(g);
    };
    return integrate01(f, rel_tol);
}

// int_a^c dx/sqrt(P) with a simple root at a only; P > 0 on (a, c].
double seg_root_regular(const UPoly& Pq, double a, double c, double rel_tol) {
    DPoly P(Pq), Pp(Pq.derivative());
    double smax = std::sqrt(c - a);
    auto f = [&](double u) {
        double s = u * smax;
        double x = a + s * s;
        if (u <= 0.0) {
            double dp = Pp.eval(a);
            return dp > 0 ? 2.0 * smax / std::sqrt(dp) : 0.0;
        }
        double g = P.eval(x);
        if (g <= 0) return 0.0;
        return 2.0 * s * smax / std::sqrt(g);
    };
    return integrate01(f, rel_tol);
}

// int_c^infinity dx/sqrt(P), no singularity at c; deg P in {3,4}, P>0 on the ray.
double tail_regular(const UPoly& Pq, double c, double rel_tol) {
    DPoly P(Pq);
    double scale = 1.0 + std::abs(c);
    auto f = [&](double w) {
        // x = c + scale (1/w^2 - 1), w in (0,1]
        if (w <= 0.0) {
            if (P.degree() >= 4) return 0.0;
            double lead = P.leading();
            return lead > 0 ? 2.0 / std::sqrt(lead * scale) : 0.0;
        }
        double x = c + scale * (1.0 / (w * w) - 1.0);
        double g = P.eval(x);
        if (g <= 0) return 0.0;
        return (2.0 * scale / (w * w * w)) / std::sqrt(g);
    };
    // integrate over w from 0 to 1
    return integrate01(f, rel_tol);
}

// int_a^infinity dx/sqrt(P) with a simple root at a.
double tail_from_root(const UPoly& P, double a, double rel_tol) {
    double scale = 1.0 + std::abs(a);
    return seg_root_regular(P, a, a + scale, rel_tol) + tail_regular(P, a + scale, rel_tol);
}

}  // namespace

Discriminants kernel_discriminants(const StepSet& s, const Rat& t) {
    if (t <= 0 || t >= Rat(1) / s.total_weight())
        throw KernelNumError("t out of range (0, 1/P(1,1))");
    StepPolynomials sp = step_polynomials(s);
    auto build = [&](const LaurentPoly& m1, const LaurentPoly& z, const LaurentPoly& p1) {
        UPoly xa0 = laurent_times_x(z) - UPoly::monomial(1, Rat(1) / t);
        return xa0 * xa0 - laurent_times_x(m1) * laurent_times_x(p1) * UPoly(Rat(4));
    };
    Discriminants d;
    d.D = build(sp.A_(-1), sp.A_(0), sp.A_(1));
    d.E = build(sp.B_(-1), sp.B_(0), sp.B_(1));
    return d;
}

std::array<double, 4> branch_points(const UPoly& D, bool& a4_infinite) {
    // All real roots of D lie between consecutive critical points (roots of
    // the cubic D') or beyond the extreme ones, so critical points give
    // reliable brackets independent of how thin the sign windows are.
    std::array<double, 4> a{};
    std::vector<double> cuts = real_roots_cubic(D.derivative());
    std::vector<double> roots;
    auto add_window = [&](double lo, double hi) {
        double flo = D.eval(lo), fhi = D.eval(hi);
        if ((flo > 0) != (fhi > 0)) roots.push_back(refine_root(D, lo, hi));
    };
    // outward brackets: walk away from the extreme critical points until the
    // sign matches the leading behaviour
    if (cuts.empty()) throw KernelNumError("branch_points: no critical points");
    double L = cuts.front(), R = cuts.back();
    double lead = D.leading().get_d();
    double right_sign = lead;  // sign of D at +inf
    double left_sign = (D.degree() % 2 == 0) ? lead : -lead;
    if (D.eval(R) * right_sign < 0) {
        double step = 1.0 + std::abs(R), x = R;
        while (D.eval(x) * right_sign < 0) {
            x += step;
            step *= 2;
            if (x > 1e15) throw KernelNumError("branch_points: right tail root not found");
        }
        roots.push_back(refine_root(D, x - step / 2 < R ? R : x - step / 2, x));
    }
    if (D.eval(L) * left_sign < 0) {
        double step = 1.0 + std::abs(L), x = L;
        while (D.eval(x) * left_sign < 0) {
            x -= step;
            step *= 2;
            if (x < -1e15) throw KernelNumError("branch_points: left tail root not found");
        }
        roots.push_back(refine_root(D, x, x + step / 2 > L ? L : x + step / 2));
    }
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) add_window(cuts[i], cuts[i + 1]);
    std::sort(roots.begin(), roots.end());

    a4_infinite = (D.degree() <= 3);
    std::size_t expected = a4_infinite ? 3 : 4;
    if (roots.size() != expected)
        throw KernelNumError("branch_points: found " + std::to_string(roots.size()) +
                             " real roots, expected " + std::to_string(expected));
    // -1 < a1 < a2 < 1 < a3; a4 is the leftover root (beyond a3 or below -1)
    std::vector<double> inner, outer;
    for (double r : roots) (r > -1.0 && r < 1.0 ? inner : outer).push_back(r);
    if (inner.size() != 2)
        throw KernelNumError("branch_points: expected exactly two roots in (-1,1)");
    a[0] = inner[0];
    a[1] = inner[1];
    // a3 is the smallest root above 1
    std::vector<double> above, below;
    for (double r : outer) (r > 1.0 ? above : below).push_back(r);
    if (above.empty()) throw KernelNumError("branch_points: no root above 1");
    a[2] = above[0];
    if (a4_infinite) {
        a[3] = std::numeric_limits<double>::infinity();
    } else if (above.size() == 2) {
        a[3] = above[1];
    } else if (below.size() == 1 && below[0] < -1.0) {
        a[3] = below[0];
    } else {
        throw KernelNumError("branch_points: fourth root misplaced");
    }
    return a;
}

Periods periods(const UPoly& D, const std::array<double, 4>& a, bool a4_infinite, double x4,
                double rel_tol) {
    Periods w{};
    UPoly nD = -D;
    UPoly Dr = reflect_poly(D);
    UPoly nDr = reflect_poly(nD);

    // omega1 = i * int_{a3}^{a4} dx/sqrt(-D): -D > 0 on that cycle segment.
    if (a4_infinite) {
        w.omega1_im = tail_from_root(nD, a[2], rel_tol);
    } else if (a[3] > a[2]) {
        w.omega1_im = seg_root_root(nD, a[2], a[3], rel_tol);
    } else {
        // a4 < -1: segment passes through infinity
        w.omega1_im = tail_from_root(nD, a[2], rel_tol) + tail_from_root(nDr, -a[3], rel_tol);
    }

    // omega2 = int_{a4}^{a1} dx/sqrt(D).
    if (a4_infinite) {
        w.omega2 = tail_from_root(Dr, -a[0], rel_tol);
    } else if (a[3] > a[0]) {
        w.omega2 = tail_from_root(D, a[3], rel_tol) + tail_from_root(Dr, -a[0], rel_tol);
    } else {
        w.omega2 = seg_root_root(D, a[3], a[0], rel_tol);
    }

    // omega3 = int_{a4}^{x4} dx/sqrt(D); x4 is not a root of D.
    if (a4_infinite) {
        w.omega3 = tail_regular(Dr, -x4, rel_tol);  // int_{-inf}^{x4}
    } else if (a[3] > a[2]) {
        if (x4 > a[3]) {
            w.omega3 = seg_root_regular(D, a[3], x4, rel_tol);
        } else {
            w.omega3 = tail_from_root(D, a[3], rel_tol) + tail_regular(Dr, -x4, rel_tol);
        }
    } else {
        // a4 < -1 <= x4 < a1: direct segment
        w.omega3 = seg_root_regular(D, a[3], x4, rel_tol);
    }
    return w;
}

KernelNumerics kernel_numerics(const StepSet& s, const Rat& t) {
    KernelNumerics kn;
    kn.t = t;
    kn.disc = kernel_discriminants(s, t);
    kn.a = branch_points(kn.disc.D, kn.a4_infinite);
    kn.b = branch_points(kn.disc.E, kn.b4_infinite);

    StepPolynomials sp = step_polynomials(s);
    double td = t.get_d();
    std::vector<double> x4_candidates;
    if (!kn.b4_infinite) {
        double b4 = kn.b[3];
        auto evl = [&](const LaurentPoly& lp) {
            double acc = 0;
            for (int e = lp.min_exp(); e <= lp.max_exp(); ++e)
                acc += lp.coeff(e).get_d() * std::pow(b4, e);
            return acc;
        };
        x4_candidates = {(1.0 - td * evl(sp.B_(0))) / (2.0 * td * evl(sp.B_(1)))};
    } else {
        // b4 = inf: K(x,inf)=0 forces A1(x4)=0 (or x4=0 when the x^{-1}
        // coefficient carries the weight); candidate roots of x*A1(x).
        UPoly xa1 = laurent_times_x(sp.A_(1));
        if (xa1.degree() == 2) {
            double A = xa1.coeff(2).get_d(), B = xa1.coeff(1).get_d(), C = xa1.coeff(0).get_d();
            double disc = B * B - 4 * A * C;
            if (disc < 0) throw KernelNumError("x4: complex roots of x*A1");
            x4_candidates = {(-B - std::sqrt(disc)) / (2 * A), (-B + std::sqrt(disc)) / (2 * A)};
        } else if (xa1.degree() == 1) {
            x4_candidates = {-xa1.coeff(0).get_d() / xa1.coeff(1).get_d()};
        } else {
            throw KernelNumError("x4: degenerate A1");
        }
    }

    bool ok = false;
    for (double cand : x4_candidates) {
        bool on_cycle = kn.a4_infinite ? (cand < kn.a[0])
                                       : (kn.a[3] > kn.a[2] ? (cand > kn.a[3] || cand < kn.a[0])
                                                            : (cand > kn.a[3] && cand < kn.a[0]));
        if (!on_cycle) continue;
        Periods w{};
        try {
            w = periods(kn.disc.D, kn.a, kn.a4_infinite, cand);
        } catch (const KernelNumError&) {
            continue;
        }
        if (w.omega1_im > 0 && w.omega2 > 0 && w.omega3 > 0 && w.omega3 < w.omega2) {
            kn.x4 = cand;
            kn.omega1_im = w.omega1_im;
            kn.omega2 = w.omega2;
            kn.omega3 = w.omega3;
            ok = true;
            break;
        }
    }
    if (!ok) throw KernelNumError("periods: no admissible x4 gives 0 < omega3 < omega2");

    kn.tau_im = kn.omega2 / kn.omega1_im;
    kn.gamma_im = kn.omega3 * M_PI / (2 * kn.omega1_im);
    kn.ratio = kn.omega3 / (2 * kn.omega2);
    return kn;
}

RatioDetect ratio_detect(double r, long max_den, double tol) {
    RatioDetect out;
    double x = r;
    long p0 = 1, q0 = 0, p1 = static_cast<long>(std::floor(x)), q1 = 1;
    x -= std::floor(x);
    for (int it = 0; it < 64; ++it) {
        if (std::abs(r - static_cast<double>(p1) / static_cast<double>(q1)) <= tol) {
            out.rational = true;
            out.num = p1;
            out.den = q1;
            return out;
        }
        if (x < 1e-18) break;
        x = 1.0 / x;
        long ai = static_cast<long>(std::floor(x));
        x -= std::floor(x);
        long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den || q2 <= 0) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return out;
}

ConeAngles cone_angles(const KernelNumerics& kn, int L, int K) {
    auto gamma_j = [&](int j) -> std::complex<double> {
        std::complex<double> pt(0.0, M_PI * kn.tau_im), g(0.0, kn.gamma_im);
        if (j % 2 == 0) return g + (static_cast<double>(j) / 2.0) * pt;
        // odd j = 2k-1: gamma_j = -gamma + k pi tau
        double k = (j + 1) / 2;
        return -g + k * pt;
    };
    ConeAngles ca;
    ca.gamma_K = gamma_j(K);
    ca.gamma_mLm1 = gamma_j(-L - 1);
    ca.hat_tau = (ca.gamma_K - ca.gamma_mLm1) / M_PI;
    return ca;
}

}  // namespace walks
