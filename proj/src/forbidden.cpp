#include "walks/forbidden.hpp"

namespace walks {

namespace {

// Plane DP over the three-quadrant cone C; transitions listed in `banned`
// (from-point, to-point pairs) are suppressed.
std::vector<std::map<std::pair<int, int>, Rat>> plane_dp(
    const StepSet& s, int p, int q, int N,
    const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& banned) {
    std::vector<std::map<std::pair<int, int>, Rat>> out(static_cast<std::size_t>(N + 1));
    out[0][{p, q}] = Rat(1);
    for (int n = 1; n <= N; ++n) {
        for (auto& [pt, w] : out[static_cast<std::size_t>(n - 1)]) {
            for (auto& [st, ws] : s.steps()) {
                std::pair<int, int> to{pt.first + st.dx, pt.second + st.dy};
                if (!(to.first > 0 || to.second > 0)) continue;
                bool skip = false;
                for (auto& [bf, bt] : banned)
                    if (pt == bf && to == bt) skip = true;
                if (skip) continue;
                out[static_cast<std::size_t>(n)][to] += w * ws;
            }
        }
    }
    return out;
}

}  // namespace

ForbiddenSeries forbidden_step_series(const StepSet& s, int p, int q, int N) {
    ForbiddenSeries fs;
    fs.N = N;
    fs.p = p;
    fs.q = q;
    fs.C = plane_dp(s, p, q, N, {});
    fs.C_from_10 = plane_dp(s, 1, 0, N, {});
    fs.L = plane_dp(s, p, q, N, {{{0, 1}, {1, 0}}});
    fs.M = plane_dp(s, p, q, N, {{{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}});
    fs.L1.assign(static_cast<std::size_t>(N + 1), Rat(0));
    for (int n = 0; n <= N; ++n) {
        auto it = fs.L[static_cast<std::size_t>(n)].find({0, 1});
        if (it != fs.L[static_cast<std::size_t>(n)].end()) fs.L1[static_cast<std::size_t>(n)] = it->second;
    }
    return fs;
}

int check_forbidden_relation(const StepSet& s, const ForbiddenSeries& fs) {
    Rat w = s.weight(1, -1);
    for (int n = 0; n <= fs.N; ++n) {
        // residual table: L(n) - C(n) + w * sum_{m} L1(m) C~(n-1-m)
        std::map<std::pair<int, int>, Rat> resid = fs.L[static_cast<std::size_t>(n)];
        for (auto& [pt, v] : fs.C[static_cast<std::size_t>(n)]) {
            resid[pt] -= v;
        }
        if (w != 0 && n >= 1) {
            for (int m = 0; m <= n - 1; ++m) {
                const Rat& l1 = fs.L1[static_cast<std::size_t>(m)];
                if (l1 == 0) continue;
                for (auto& [pt, v] : fs.C_from_10[static_cast<std::size_t>(n - 1 - m)])
                    resid[pt] += w * l1 * v;
            }
        }
        for (auto& [pt, v] : resid)
            if (v != 0) return n;
    }
    return -1;
}

}  // namespace walks
