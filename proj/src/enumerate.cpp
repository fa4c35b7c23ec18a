#include "walks/enumerate.hpp"

#include <cassert>
#include <cmath>
#include <functional>
#include <sstream>

namespace walks {

namespace {

// r^{-j}(v): rotate a plane step into the local frame of quadrant j.
Step rotate_step(Step v, int j) {
    int k = ((-j) % 4 + 4) % 4;  // apply r k times
    for (int i = 0; i < k; ++i) v = Step{-v.dy, v.dx};
    return v;
}

// r applied k times to a point.
std::pair<int, int> rotate_point(std::pair<int, int> p, int k) {
    k = (k % 4 + 4) % 4;
    for (int i = 0; i < k; ++i) p = {-p.second, p.first};
    return p;
}

}  // namespace

LaurentPoly TruncatedWalkSeries::a_series(int n) const {
    LaurentPoly out = U0[static_cast<std::size_t>(n)];
    out.add(1, U1[static_cast<std::size_t>(n)]);
    return out;
}

LaurentPoly TruncatedWalkSeries::b_series(int n) const { return U2[static_cast<std::size_t>(n)]; }

Rat TruncatedWalkSeries::f_total(int n) const {
    Rat s(0);
    for (const auto& col : TF) s += col[static_cast<std::size_t>(n)];
    return s;
}

LaurentPoly TruncatedWalkSeries::r_series(int j, int n) const {
    LaurentPoly out;
    auto it = s_up.find(j);
    if (it == s_up.end()) return out;
    const LaurentPoly& su = it->second[static_cast<std::size_t>(n)];
    for (int k = su.min_exp(); k <= su.max_exp(); ++k) out.add(k - 1, su.coeff(k));
    return out;
}

LaurentPoly TruncatedWalkSeries::l_series(int j, int n) const {
    LaurentPoly out;
    auto it = s_down.find(j);
    if (it != s_down.end()) out = it->second[static_cast<std::size_t>(n)];
    if (j == -cone.L) out.add(0, U1[static_cast<std::size_t>(n)]);
    return out;
}

std::map<std::pair<int, int>, Rat> TruncatedWalkSeries::plane_table(int n) const {
    std::map<std::pair<int, int>, Rat> out;
    for (int j = -cone.L; j <= cone.K; ++j) {
        const Grid& g = grid(j, n);
        for (int a = 0; a <= g.amax; ++a)
            for (int b = 0; b <= g.bmax; ++b) {
                const Rat& w = g.at(a, b);
                if (w == 0) continue;
                auto pt = rotate_point({a, b}, j);
                out[pt] += w;
            }
    }
    return out;
}

Rat TruncatedWalkSeries::alive_mass(int n) const {
    Rat s(0);
    for (int j = -cone.L; j <= cone.K; ++j) {
        const Grid& g = grid(j, n);
        for (const auto& w : g.v) s += w;
    }
    return s;
}

Rat TruncatedWalkSeries::dead_mass(int n) const {
    Rat s = f_total(n);
    s += U1[static_cast<std::size_t>(n)];
    for (const auto& c : U0[static_cast<std::size_t>(n)].c) s += c;
    for (const auto& c : U2[static_cast<std::size_t>(n)].c) s += c;
    return s;
}

TruncatedWalkSeries count_cone(const StepSet& s, const ConeSpec& cone, int N) {
    cone.validate();
    if (N < 0) throw ConeError("count_cone: negative truncation order");
    if (s.empty()) throw StepSetError("count_cone: empty step set");

    const int L = cone.L, K = cone.K;
    const int nq = L + K + 1;
    const int amax = cone.p + cone.q + N + 1;
    const int bmax = amax;

    TruncatedWalkSeries out;
    out.steps = s;
    out.cone = cone;
    out.N = N;
    out.quad.assign(static_cast<std::size_t>(nq), {});
    for (auto& col : out.quad) {
        col.resize(static_cast<std::size_t>(N + 1));
        for (auto& g : col) g.init(amax, bmax);
    }
    out.TF.assign(static_cast<std::size_t>(nq), std::vector<Rat>(static_cast<std::size_t>(N + 1)));
    out.U0.resize(static_cast<std::size_t>(N + 1));
    out.U1.assign(static_cast<std::size_t>(N + 1), Rat(0));
    out.U2.resize(static_cast<std::size_t>(N + 1));
    for (int j = -L + 1; j <= K; ++j)
        out.s_up[j].resize(static_cast<std::size_t>(N + 1));
    for (int j = -L; j <= K - 1; ++j)
        out.s_down[j].resize(static_cast<std::size_t>(N + 1));

    out.quad[static_cast<std::size_t>(L)][0].at(cone.p, cone.q) = Rat(1);

    // Precompute rotated steps per quadrant index mod 4.
    std::array<std::vector<std::pair<Step, Rat>>, 4> rsteps;
    for (int m = 0; m < 4; ++m)
        for (auto& [st, w] : s.steps()) rsteps[static_cast<std::size_t>(m)].push_back({rotate_step(st, m), w});

    for (int n = 1; n <= N; ++n) {
        for (int j = -L; j <= K; ++j) {
            const Grid& src = out.quad[static_cast<std::size_t>(j + L)][static_cast<std::size_t>(n - 1)];
            const auto& steps = rsteps[static_cast<std::size_t>((j % 4 + 4) % 4)];
            for (int a = 0; a <= src.amax; ++a) {
                for (int b = 0; b <= src.bmax; ++b) {
                    const Rat& w0 = src.at(a, b);
                    if (w0 == 0) continue;
                    for (const auto& [v, wst] : steps) {
                        const int a2 = a + v.dx, b2 = b + v.dy;
                        Rat w = w0 * wst;
                        if (a2 == 0 && b2 == 0) {
                            out.TF[static_cast<std::size_t>(j + L)][static_cast<std::size_t>(n)] += w;
                        } else if (a2 >= 1 && b2 >= 0) {
                            // stays in quadrant j; quadrant -L is open below
                            if (j == -L && b2 == 0) {
                                out.U0[static_cast<std::size_t>(n)].add(a2, w);
                            } else {
                                out.quad[static_cast<std::size_t>(j + L)][static_cast<std::size_t>(n)].at(a2, b2) += w;
                            }
                        } else if (a2 <= 0 && b2 >= 1) {
                            // counterclockwise into quadrant j+1
                            assert(a2 == 0);
                            if (j + 1 > K) {
                                assert(j == K);
                                out.U2[static_cast<std::size_t>(n)].add(b2, w);
                            } else {
                                // local coords in quadrant j+1: r^{-1}(0,b2) = (b2,0)
                                out.quad[static_cast<std::size_t>(j + 1 + L)][static_cast<std::size_t>(n)].at(b2, 0) += w;
                                out.s_up[j + 1][static_cast<std::size_t>(n)].add(b2, w);
                            }
                        } else {
                            // clockwise into quadrant j-1
                            assert(b2 == -1 && a2 >= 0);
                            if (j - 1 < -L) {
                                // unreachable: quadrant -L is open, so b>=1 there
                                assert(false);
                            } else if (j - 1 == -L && a2 == 0) {
                                assert(j == 1 - L);
                                out.U1[static_cast<std::size_t>(n)] += w;
                            } else {
                                // local coords in quadrant j-1: r(a2,-1) = (1,a2)
                                out.quad[static_cast<std::size_t>(j - 1 + L)][static_cast<std::size_t>(n)].at(1, a2) += w;
                                out.s_down[j - 1][static_cast<std::size_t>(n)].add(a2, w);
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::vector<std::map<std::pair<int, int>, Rat>> brute_force_count(const StepSet& s,
                                                                  const ConeSpec& cone, int n,
                                                                  double budget) {
    cone.validate();
    auto steps = s.steps();
    double total = std::pow(static_cast<double>(steps.size()), n);
    if (total > budget) throw ConeError("brute_force_count: n too large for exhaustive search");

    const int L = cone.L, K = cone.K;
    std::vector<std::map<std::pair<int, int>, Rat>> out(static_cast<std::size_t>(n) + 1);

    struct Frame {
        int spiral = 0;
        int a = 0, b = 0;  // local coordinates of quadrant `spiral`
        Rat w;
    };
    Frame start{0, cone.p, cone.q, Rat(1)};
    out[0][{cone.p, cone.q}] += Rat(1);

    std::function<void(const Frame&, int)> rec = [&](const Frame& f, int depth) {
        if (depth == n) return;
        for (const auto& [v, wst] : steps) {
            Step lv = rotate_step(v, f.spiral);
            int a2 = f.a + lv.dx, b2 = f.b + lv.dy;
            Frame g;
            g.w = f.w * wst;
            if (a2 >= 1 && b2 >= (f.spiral == -L ? 1 : 0)) {
                g.spiral = f.spiral;
                g.a = a2;
                g.b = b2;
            } else if (a2 == 0 && b2 >= 1 && f.spiral + 1 <= K) {
                g.spiral = f.spiral + 1;
                g.a = b2;
                g.b = 0;
            } else if (b2 == -1 && a2 >= 1 && f.spiral - 1 >= -L) {
                g.spiral = f.spiral - 1;
                g.a = 1;
                g.b = a2;
            } else {
                continue;  // walk leaves the cone and dies
            }
            auto pt = rotate_point({g.a, g.b}, g.spiral);
            out[static_cast<std::size_t>(depth + 1)][pt] += g.w;
            rec(g, depth + 1);
        }
    };
    rec(start, 0);
    return out;
}

VHSplit extract_vh(const TruncatedWalkSeries& t) {
    if (t.cone.L != 1 || t.cone.K != 1)
        throw ConeError("extract_vh: requires the three-quadrant cone (L=K=1)");
    VHSplit vh;
    vh.N = t.N;
    vh.V1.resize(static_cast<std::size_t>(t.N + 1));
    vh.V2.resize(static_cast<std::size_t>(t.N + 1));
    vh.H1.resize(static_cast<std::size_t>(t.N + 1));
    vh.H2.resize(static_cast<std::size_t>(t.N + 1));
    for (int n = 0; n <= t.N; ++n) {
        // V1(y) = F_1 - y R_1(y), V2(y) = L_0(y)
        LaurentPoly r1 = t.r_series(1, n);
        LaurentPoly v1;
        v1.add(0, t.f_of(1, n));
        for (int k = r1.min_exp(); k <= r1.max_exp(); ++k) v1.add(k + 1, -r1.coeff(k));
        vh.V1[static_cast<std::size_t>(n)] = v1;
        vh.V2[static_cast<std::size_t>(n)] = t.l_series(0, n);
        // H1(x) = F_{-1} + x R_0(x), H2(x) = -L_{-1}(x)
        LaurentPoly r0 = t.r_series(0, n);
        LaurentPoly h1;
        h1.add(0, t.f_of(-1, n));
        for (int k = r0.min_exp(); k <= r0.max_exp(); ++k) h1.add(k + 1, r0.coeff(k));
        vh.H1[static_cast<std::size_t>(n)] = h1;
        LaurentPoly lm = t.l_series(-1, n);
        LaurentPoly h2;
        for (int k = lm.min_exp(); k <= lm.max_exp(); ++k) h2.add(k, -lm.coeff(k));
        vh.H2[static_cast<std::size_t>(n)] = h2;
    }
    return vh;
}

ResidualReport verify_functional_equation(const TruncatedWalkSeries& t) {
    // K(x,y)Q_j = -d_{0j} x^p y^q - S_{j+1,j} + S_{j,j+1} - S_{j-1,j}
    //             + S_{j,j-1} + T_j, coefficientwise in t up to order N.
    // In local variables every term of quadrant j lives on the local lattice,
    // so the check runs per quadrant on local coordinates.
    ResidualReport rep;
    const auto& cone = t.cone;
    const int L = cone.L, K = cone.K;

    auto record = [&](int n, int j, const Rat& val, int a, int b) {
        if (val == 0) return;
        rep.exact = false;
        if (rep.worst_n < 0) {
            rep.worst_n = n;
            rep.worst_j = j;
            rep.worst_value = val;
            std::ostringstream os;
            os << "first nonzero residual at n=" << n << " quadrant " << j << " local (" << a
               << "," << b << ")";
            rep.detail = os.str();
        }
    };

    for (int n = 0; n <= t.N; ++n) {
        for (int j = -L; j <= K; ++j) {
            // lhs_t(n): [t^n] (tP - 1) Q_j = P*Q_j(n-1) - Q_j(n) over local grid.
            // rhs gathered from S and T tables (in local-j coordinates).
            std::map<std::pair<int, int>, Rat> resid;
            const Grid& now = t.grid(j, n);
            for (int a = 0; a <= now.amax; ++a)
                for (int b = 0; b <= now.bmax; ++b)
                    if (now.at(a, b) != 0) resid[{a, b}] -= now.at(a, b);
            if (n >= 1) {
                const Grid& prev = t.grid(j, n - 1);
                for (int a = 0; a <= prev.amax; ++a)
                    for (int b = 0; b <= prev.bmax; ++b) {
                        const Rat& w = prev.at(a, b);
                        if (w == 0) continue;
                        for (auto& [v, wst] : t.steps.steps()) {
                            Step lv = v;
                            int k = ((-j) % 4 + 4) % 4;
                            for (int i = 0; i < k; ++i) lv = Step{-lv.dy, lv.dx};
                            resid[{a + lv.dx, b + lv.dy}] += w * wst;
                        }
                    }
            }
            // rhs terms, moved to the left: resid -= rhs
            if (j == 0 && n == 0) resid[{cone.p, cone.q}] += Rat(1);
            auto sub_lp = [&](const LaurentPoly& lp, bool up_form) {
                // up_form: exponent k is local (k,0); else local (1,k)
                for (int k = lp.min_exp(); k <= lp.max_exp(); ++k) {
                    Rat c = lp.coeff(k);
                    if (c == 0) continue;
                    if (up_form) resid[{k, 0}] -= c;
                    else resid[{1, k}] -= c;
                }
            };
            // +S_{j,j+1}: stored as s_up[j+1] in local-(j+1) coords (a,0);
            // in local-j coords the same endpoint is (0,a).
            if (auto it = t.s_up.find(j + 1); it != t.s_up.end()) {
                const LaurentPoly& lp = it->second[static_cast<std::size_t>(n)];
                for (int k = lp.min_exp(); k <= lp.max_exp(); ++k) {
                    Rat c = lp.coeff(k);
                    if (c != 0) resid[{0, k}] -= c;
                }
            }
            // -S_{j+1,j}: stored as s_down[j] in local-j coords (1,k).
            if (auto it = t.s_down.find(j); it != t.s_down.end()) {
                const LaurentPoly& lp = it->second[static_cast<std::size_t>(n)];
                for (int k = lp.min_exp(); k <= lp.max_exp(); ++k) {
                    Rat c = lp.coeff(k);
                    if (c != 0) resid[{1, k}] += c;
                }
            }
            // +S_{j,j-1}: stored as s_down[j-1] in local-(j-1) coords (1,k);
            // in local-j coords the endpoint is (k,-1).
            if (auto it = t.s_down.find(j - 1); it != t.s_down.end()) {
                const LaurentPoly& lp = it->second[static_cast<std::size_t>(n)];
                for (int k = lp.min_exp(); k <= lp.max_exp(); ++k) {
                    Rat c = lp.coeff(k);
                    if (c != 0) resid[{k, -1}] -= c;
                }
            }
            // -S_{j-1,j}: stored as s_up[j] in local-j coords (k,0).
            if (auto it = t.s_up.find(j); it != t.s_up.end()) {
                const LaurentPoly& lp = it->second[static_cast<std::size_t>(n)];
                for (int k = lp.min_exp(); k <= lp.max_exp(); ++k) {
                    Rat c = lp.coeff(k);
                    if (c != 0) resid[{k, 0}] += c;
                }
            }
            // +T_j
            resid[{0, 0}] -= t.f_of(j, n);
            if (j == -L) sub_lp(t.U0[static_cast<std::size_t>(n)], true);
            if (j == 1 - L) resid[{0, -1}] -= t.U1[static_cast<std::size_t>(n)];
            if (j == K) {
                const LaurentPoly& lp = t.U2[static_cast<std::size_t>(n)];
                for (int k = lp.min_exp(); k <= lp.max_exp(); ++k) {
                    Rat c = lp.coeff(k);
                    if (c != 0) resid[{0, k}] -= c;
                }
            }
            for (auto& [pt, val] : resid) record(n, j, val, pt.first, pt.second);
        }
    }
    if (rep.exact) rep.detail = "all residuals exactly zero";
    return rep;
}

bool check_mass_conservation(const TruncatedWalkSeries& t) {
    Rat P1 = t.steps.total_weight();
    for (int n = 1; n <= t.N; ++n) {
        if (t.alive_mass(n) + t.dead_mass(n) != P1 * t.alive_mass(n - 1)) return false;
    }
    return true;
}

}  // namespace walks
