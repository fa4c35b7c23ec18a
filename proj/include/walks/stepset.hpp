#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "walks/birational.hpp"
#include "walks/upoly.hpp"

namespace walks {

struct Step {
    int dx = 0, dy = 0;
    friend bool operator==(const Step&, const Step&) = default;
};

// The 8 small steps in grid order (row by row, bottom to top).
inline constexpr std::array<Step, 8> kAllSteps = {
    Step{-1, -1}, Step{0, -1}, Step{1, -1}, Step{-1, 0},
    Step{1, 0},   Step{-1, 1}, Step{0, 1},  Step{1, 1}};

inline std::optional<int> step_index(int dx, int dy) {
    for (int i = 0; i < 8; ++i)
        if (kAllSteps[static_cast<std::size_t>(i)].dx == dx &&
            kAllSteps[static_cast<std::size_t>(i)].dy == dy)
            return i;
    return std::nullopt;
}

inline const char* step_name(int idx) {
    static constexpr const char* names[8] = {"SW", "S", "SE", "W", "E", "NW", "N", "NE"};
    return names[idx];
}

inline std::optional<int> step_index_by_name(const std::string& name) {
    for (int i = 0; i < 8; ++i)
        if (name == step_name(i)) return i;
    return std::nullopt;
}

struct StepSetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A weighted small-step set. Weight 0 means the direction is absent.
class StepSet {
public:
    StepSet() = default;

    void set_weight(int dx, int dy, Rat w) {
        auto idx = step_index(dx, dy);
        if (!idx) throw StepSetError("not a small step");
        if (w < 0) throw StepSetError("negative weight");
        w_[static_cast<std::size_t>(*idx)] = std::move(w);
    }
    const Rat& weight(int idx) const { return w_[static_cast<std::size_t>(idx)]; }
    Rat weight(int dx, int dy) const {
        auto idx = step_index(dx, dy);
        return idx ? w_[static_cast<std::size_t>(*idx)] : Rat(0);
    }
    bool has(int idx) const { return w_[static_cast<std::size_t>(idx)] != 0; }
    bool empty() const {
        for (const auto& w : w_)
            if (w != 0) return false;
        return true;
    }
    bool unit_weights() const {
        for (const auto& w : w_)
            if (w != 0 && w != 1) return false;
        return true;
    }
    Rat total_weight() const {  // = P(1,1)
        Rat s(0);
        for (const auto& w : w_) s += w;
        return s;
    }
    std::vector<std::pair<Step, Rat>> steps() const {
        std::vector<std::pair<Step, Rat>> v;
        for (int i = 0; i < 8; ++i)
            if (has(i)) v.push_back({kAllSteps[static_cast<std::size_t>(i)], weight(i)});
        return v;
    }

    StepSet reflected_diag() const {  // (dx,dy) -> (dy,dx)
        StepSet r;
        for (auto& [s, w] : steps()) r.set_weight(s.dy, s.dx, w);
        return r;
    }
    StepSet rotated() const {  // (dx,dy) -> (-dy,dx)
        StepSet r;
        for (auto& [s, w] : steps()) r.set_weight(-s.dy, s.dx, w);
        return r;
    }
    StepSet reversed() const {  // (dx,dy) -> (-dx,-dy)
        StepSet r;
        for (auto& [s, w] : steps()) r.set_weight(-s.dx, -s.dy, w);
        return r;
    }

    friend bool operator==(const StepSet&, const StepSet&) = default;

private:
    std::array<Rat, 8> w_{};
};

// "N,S,E,W" or "E:1/2, NE:3" or coordinate pairs "(1,0):2".
StepSet parse_stepset(const std::string& spec);
std::string serialize_stepset(const StepSet& s);

// True iff every line through the origin has a step strictly on each side.
bool is_nonsingular(const StepSet& s);

struct StepPolynomials {
    BiRational P;                       // single-step generating function
    LaurentPoly A[3];                   // A[-1+1],A[0+1],A[1+1]: Laurent in x
    LaurentPoly B[3];                   // row polynomials, Laurent in y
    const LaurentPoly& A_(int i) const { return A[i + 1]; }
    const LaurentPoly& B_(int i) const { return B[i + 1]; }
};

StepPolynomials step_polynomials(const StepSet& s);

}  // namespace walks
