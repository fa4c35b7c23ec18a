#include "walks/axisstart.hpp"

#include <cassert>

namespace walks {

namespace {

// Truncated product of t-layered Laurent series.
TSeriesL mul(const TSeriesL& a, const TSeriesL& b, int N) {
    TSeriesL out(static_cast<std::size_t>(N + 1));
    for (int i = 0; i <= N; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (b[static_cast<std::size_t>(j)].is_zero()) continue;
            LaurentPoly prod = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
            out[static_cast<std::size_t>(i + j)] = out[static_cast<std::size_t>(i + j)] + prod;
        }
    }
    return out;
}

TSeriesL one_series(int N, int exp = 0) {
    TSeriesL s(static_cast<std::size_t>(N + 1));
    s[0].add(exp, Rat(1));
    return s;
}

// Negative powers of W_B = x(1 - u), u = (F1+B1)/x with positive t-order:
// W_B^{-m} = x^{-m} sum_j binom(m+j-1,j) u^j.
std::vector<TSeriesL> wb_negative_powers(const TSeriesL& G, int N, int mmax) {
    // G = F1 + B1 (exponents <= 0); u = G shifted by x^{-1}
    TSeriesL u(static_cast<std::size_t>(N + 1));
    for (int n = 0; n <= N; ++n) {
        const LaurentPoly& g = G[static_cast<std::size_t>(n)];
        for (int k = g.min_exp(); k <= g.max_exp(); ++k)
            u[static_cast<std::size_t>(n)].add(k - 1, g.coeff(k));
    }
    // u powers (t-order of u^j is >= j since G starts at t^1)
    std::vector<TSeriesL> upow(static_cast<std::size_t>(N + 1));
    upow[0] = one_series(N);
    for (int j = 1; j <= N; ++j) upow[static_cast<std::size_t>(j)] = mul(upow[static_cast<std::size_t>(j - 1)], u, N);

    std::vector<TSeriesL> out(static_cast<std::size_t>(mmax + 1));
    for (int m = 1; m <= mmax; ++m) {
        TSeriesL acc(static_cast<std::size_t>(N + 1));
        Rat binom(1);  // binom(m+j-1, j), j=0 -> 1
        for (int j = 0; j <= N; ++j) {
            if (j > 0) binom = binom * Rat(m + j - 1) / Rat(j);
            for (int n = 0; n <= N; ++n) {
                const LaurentPoly& lay = upow[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)];
                if (lay.is_zero()) continue;
                for (int k = lay.min_exp(); k <= lay.max_exp(); ++k) {
                    Rat c = lay.coeff(k);
                    if (c != 0) acc[static_cast<std::size_t>(n)].add(k - m, c * binom);
                }
            }
        }
        out[static_cast<std::size_t>(m)] = std::move(acc);
    }
    out[0] = one_series(N);
    return out;
}

LaurentPoly part(const LaurentPoly& lp, int lo, int hi) {
    LaurentPoly out;
    for (int k = std::max(lo, lp.min_exp()); k <= std::min(hi, lp.max_exp()); ++k)
        out.add(k, lp.coeff(k));
    return out;
}

}  // namespace

AxisEnumerated enumerate_axis_start(const StepSet& s, int p, int N) {
    TruncatedWalkSeries tw = count_cone(s, ConeSpec{1, 1, p, 0}, N);
    AxisEnumerated out;
    out.B.resize(static_cast<std::size_t>(N + 1));
    out.A.resize(static_cast<std::size_t>(N + 1));
    out.F.resize(static_cast<std::size_t>(N + 1));
    for (int n = 0; n <= N; ++n) {
        // b_series exponents are powers of 1/x; store as x-exponents
        LaurentPoly b = tw.b_series(n), a = tw.a_series(n);
        for (int k = b.min_exp(); k <= b.max_exp(); ++k)
            out.B[static_cast<std::size_t>(n)].add(-k, b.coeff(k));
        for (int k = a.min_exp(); k <= a.max_exp(); ++k)
            out.A[static_cast<std::size_t>(n)].add(-k, a.coeff(k));
        out.F[static_cast<std::size_t>(n)] = tw.f_total(n);
    }
    return out;
}

AxisSeries build_axis_series(const StepSet& s, int N, int p_max) {
    if (p_max < 1) throw AxisError("build_axis_series: p_max >= 1 required");
    AxisSeries as;
    as.N = N;
    as.p_max = p_max;

    AxisEnumerated e1 = enumerate_axis_start(s, 1, N);
    // G = F1 + B1 (x-exponents <= 0); W_B = x - G.
    TSeriesL G(static_cast<std::size_t>(N + 1));
    as.WB.resize(static_cast<std::size_t>(N + 1));
    as.WA = e1.A;
    as.WB[0].add(1, Rat(1));
    for (int n = 0; n <= N; ++n) {
        G[static_cast<std::size_t>(n)] = e1.B[static_cast<std::size_t>(n)];
        G[static_cast<std::size_t>(n)].add(0, e1.F[static_cast<std::size_t>(n)]);
        as.WB[static_cast<std::size_t>(n)] = as.WB[static_cast<std::size_t>(n)] - G[static_cast<std::size_t>(n)];
    }

    // Reversion: G(x;t) = sum_{m>=0} c_m(t) W_B^{-m} determines I = w + sum c_m w^{-m}.
    auto wbneg = wb_negative_powers(G, N, N);
    as.I.resize(static_cast<std::size_t>(N + 1));
    as.I[0].add(1, Rat(1));  // I = w at t^0
    // c[m][n]
    std::vector<std::vector<Rat>> c(static_cast<std::size_t>(N + 1),
                                    std::vector<Rat>(static_cast<std::size_t>(N + 1), Rat(0)));
    for (int n = 1; n <= N; ++n) {
        LaurentPoly R = G[static_cast<std::size_t>(n)];
        for (int m = 0; m <= N; ++m) {
            for (int np = 1; np < n; ++np) {
                if (c[static_cast<std::size_t>(m)][static_cast<std::size_t>(np)] == 0) continue;
                const LaurentPoly& lay = wbneg[static_cast<std::size_t>(m)][static_cast<std::size_t>(n - np)];
                for (int k = lay.min_exp(); k <= lay.max_exp(); ++k) {
                    Rat v = lay.coeff(k) * c[static_cast<std::size_t>(m)][static_cast<std::size_t>(np)];
                    if (v != 0) R.add(k, -v);
                }
            }
        }
        // remaining layer must be supported on exponents <= 0
        if (!R.is_zero() && R.max_exp() > 0)
            throw AxisError("reversion: unexpected positive exponent in layer");
        for (int k = R.min_exp(); k <= 0 && k <= R.max_exp(); ++k) {
            c[static_cast<std::size_t>(-k)][static_cast<std::size_t>(n)] = R.coeff(k);
            as.I[static_cast<std::size_t>(n)].add(k, R.coeff(k));
        }
    }

    // Powers of I and the splits H_p, A_p, B_p, F_p.
    as.H.resize(static_cast<std::size_t>(p_max + 1));
    as.A.resize(static_cast<std::size_t>(p_max + 1));
    as.B.resize(static_cast<std::size_t>(p_max + 1));
    as.F.resize(static_cast<std::size_t>(p_max + 1));
    TSeriesL Ipow = one_series(N);
    // W_A powers for the A_p substitution
    std::vector<TSeriesL> wapow(static_cast<std::size_t>(p_max + 1));
    wapow[0] = one_series(N);
    for (int j = 1; j <= p_max; ++j)
        wapow[static_cast<std::size_t>(j)] = mul(wapow[static_cast<std::size_t>(j - 1)], as.WA, N);

    for (int p = 1; p <= p_max; ++p) {
        Ipow = mul(Ipow, as.I, N);
        as.H[static_cast<std::size_t>(p)].resize(static_cast<std::size_t>(N + 1));
        as.A[static_cast<std::size_t>(p)].assign(static_cast<std::size_t>(N + 1), LaurentPoly{});
        as.B[static_cast<std::size_t>(p)].assign(static_cast<std::size_t>(N + 1), LaurentPoly{});
        as.F[static_cast<std::size_t>(p)].assign(static_cast<std::size_t>(N + 1), Rat(0));
        for (int n = 0; n <= N; ++n) {
            const LaurentPoly& lay = Ipow[static_cast<std::size_t>(n)];
            as.H[static_cast<std::size_t>(p)][static_cast<std::size_t>(n)] = part(lay, 0, p);
            as.F[static_cast<std::size_t>(p)][static_cast<std::size_t>(n)] = lay.coeff(0);
        }
        // B_p = [w^{<0}] I^p at w = W_B; A_p = [w^{>0}] I^p at w = W_A.
        for (int n = 0; n <= N; ++n) {
            const LaurentPoly& lay = Ipow[static_cast<std::size_t>(n)];
            for (int k = lay.min_exp(); k <= std::min(-1, lay.max_exp()); ++k) {
                Rat coef = lay.coeff(k);
                if (coef == 0) continue;
                const TSeriesL& wp = wbneg[static_cast<std::size_t>(-k)];
                for (int n2 = 0; n + n2 <= N; ++n2) {
                    const LaurentPoly& wl = wp[static_cast<std::size_t>(n2)];
                    for (int kk = wl.min_exp(); kk <= wl.max_exp(); ++kk) {
                        Rat v = wl.coeff(kk) * coef;
                        if (v != 0)
                            as.B[static_cast<std::size_t>(p)][static_cast<std::size_t>(n + n2)].add(kk, v);
                    }
                }
            }
            for (int k = 1; k <= std::min(p, lay.max_exp()); ++k) {
                Rat coef = lay.coeff(k);
                if (coef == 0) continue;
                const TSeriesL& wa = wapow[static_cast<std::size_t>(k)];
                for (int n2 = 0; n + n2 <= N; ++n2) {
                    const LaurentPoly& wl = wa[static_cast<std::size_t>(n2)];
                    for (int kk = wl.min_exp(); kk <= wl.max_exp(); ++kk) {
                        Rat v = wl.coeff(kk) * coef;
                        if (v != 0)
                            as.A[static_cast<std::size_t>(p)][static_cast<std::size_t>(n + n2)].add(kk, v);
                    }
                }
            }
        }
    }
    return as;
}

int reversion_selfcheck(const AxisSeries& as) {
    const int N = as.N;
    // recompute I(W_B) and compare with x
    TSeriesL total(static_cast<std::size_t>(N + 1));
    // positive part of I is exactly w
    total = as.WB;
    // negative parts: c_m * W_B^{-m}
    // reconstruct G from WB: G = x - WB
    TSeriesL G(static_cast<std::size_t>(N + 1));
    G[0].add(1, Rat(1));
    for (int n = 0; n <= N; ++n) G[static_cast<std::size_t>(n)] = G[static_cast<std::size_t>(n)] - as.WB[static_cast<std::size_t>(n)];
    auto wbneg = wb_negative_powers(G, N, N);
    for (int n = 0; n <= N; ++n) {
        const LaurentPoly& lay = as.I[static_cast<std::size_t>(n)];
        for (int k = lay.min_exp(); k <= std::min(0, lay.max_exp()); ++k) {
            Rat coef = lay.coeff(k);
            if (coef == 0) continue;
            const TSeriesL& wp = wbneg[static_cast<std::size_t>(-k)];
            for (int n2 = 0; n + n2 <= N; ++n2) {
                const LaurentPoly& wl = wp[static_cast<std::size_t>(n2)];
                for (int kk = wl.min_exp(); kk <= wl.max_exp(); ++kk) {
                    Rat v = wl.coeff(kk) * coef;
                    if (v != 0) total[static_cast<std::size_t>(n + n2)].add(kk, v);
                }
            }
        }
    }
    int worst = -1;
    for (int n = 0; n <= N; ++n) {
        LaurentPoly expect;
        if (n == 0) expect.add(1, Rat(1));
        if (!(total[static_cast<std::size_t>(n)] == expect)) worst = n;
    }
    return worst;
}

CombiReport combi_check(const StepSet& s, int n_max) {
    CombiReport rep;
    rep.n_max = n_max;
    rep.total.assign(static_cast<std::size_t>(n_max + 1), Rat(0));
    rep.touching.assign(static_cast<std::size_t>(n_max + 1), Rat(0));

    // Plane DP over the three-quadrant cone C = {i>0 or j>0}; intermediate
    // points stay in C, so they avoid D automatically. Two runs: all walks
    // and walks avoiding T = {(1,y): y<=0}.
    const int R = n_max + 3;
    auto idx = [&](int i, int j) {
        return static_cast<std::size_t>((i + R) * (2 * R + 1) + (j + R));
    };
    auto run = [&](bool avoid_T, std::vector<Rat>& out) {
        std::vector<Rat> cur(static_cast<std::size_t>((2 * R + 1) * (2 * R + 1)), Rat(0));
        cur[idx(2, 0)] = Rat(1);
        for (int n = 1; n <= n_max; ++n) {
            std::vector<Rat> nxt(cur.size(), Rat(0));
            for (int i = -R; i <= R; ++i) {
                for (int j = -R; j <= R; ++j) {
                    const Rat& w = cur[idx(i, j)];
                    if (w == 0) continue;
                    for (auto& [st, ws] : s.steps()) {
                        int ii = i + st.dx, jj = j + st.dy;
                        if (std::abs(ii) > n_max + 2 || std::abs(jj) > n_max + 2) continue;
                        if (ii == -1 && jj == 0) {
                            out[static_cast<std::size_t>(n)] += w * ws;  // reached the endpoint
                            continue;
                        }
                        bool inC = (ii > 0 || jj > 0);
                        if (!inC) continue;
                        if (avoid_T && ii == 1 && jj <= 0) continue;
                        nxt[idx(ii, jj)] += w * ws;
                    }
                }
            }
            cur.swap(nxt);
        }
    };
    std::vector<Rat> all(static_cast<std::size_t>(n_max + 1), Rat(0));
    std::vector<Rat> avoid(static_cast<std::size_t>(n_max + 1), Rat(0));
    run(false, all);
    run(true, avoid);
    for (int n = 0; n <= n_max; ++n) {
        rep.total[static_cast<std::size_t>(n)] = all[static_cast<std::size_t>(n)];
        rep.touching[static_cast<std::size_t>(n)] =
            all[static_cast<std::size_t>(n)] - avoid[static_cast<std::size_t>(n)];
        if (rep.total[static_cast<std::size_t>(n)] !=
            Rat(2) * rep.touching[static_cast<std::size_t>(n)])
            rep.holds = false;
    }
    return rep;
}

}  // namespace walks
