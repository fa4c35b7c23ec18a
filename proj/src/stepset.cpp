#include "walks/stepset.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace walks {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

// Direction token: compass name or "(dx,dy)".
std::optional<int> parse_direction(const std::string& tok) {
    if (auto idx = step_index_by_name(tok)) return idx;
    std::string t = tok;
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    std::size_t comma = t.find(',');
    if (comma == std::string::npos) return std::nullopt;
    try {
        int dx = std::stoi(strip(t.substr(0, comma)));
        int dy = std::stoi(strip(t.substr(comma + 1)));
        return step_index(dx, dy);
    } catch (...) {
        return std::nullopt;
    }
}

}  // namespace

StepSet parse_stepset(const std::string& spec) {
    // Split on commas that are not inside parentheses.
    std::vector<std::string> tokens;
    std::string cur;
    int depth = 0;
    for (char ch : spec) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            tokens.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    tokens.push_back(cur);

    StepSet s;
    std::array<bool, 8> seen{};
    bool any = false;
    for (auto& raw : tokens) {
        std::string tok = strip(raw);
        if (tok.empty()) continue;
        Rat w(1);
        // weight separator: last ':' outside parentheses
        std::size_t colon = std::string::npos;
        depth = 0;
        for (std::size_t i = 0; i < tok.size(); ++i) {
            if (tok[i] == '(') ++depth;
            if (tok[i] == ')') --depth;
            if (tok[i] == ':' && depth == 0) colon = i;
        }
        std::string dir = tok;
        if (colon != std::string::npos) {
            dir = strip(tok.substr(0, colon));
            auto wv = parse_rational(strip(tok.substr(colon + 1)));
            if (!wv) throw StepSetError("bad weight in token '" + tok + "'");
            w = *wv;
        }
        auto idx = parse_direction(dir);
        if (!idx) throw StepSetError("unknown direction token '" + dir + "'");
        if (w <= 0) throw StepSetError("non-positive weight for '" + dir + "'");
        if (seen[static_cast<std::size_t>(*idx)])
            throw StepSetError("duplicate direction '" + std::string(step_name(*idx)) + "'");
        seen[static_cast<std::size_t>(*idx)] = true;
        s.set_weight(kAllSteps[static_cast<std::size_t>(*idx)].dx,
                     kAllSteps[static_cast<std::size_t>(*idx)].dy, w);
        any = true;
    }
    if (!any) throw StepSetError("empty step list");
    return s;
}

std::string serialize_stepset(const StepSet& s) {
    // Normalized order: compass names N,NE,E,SE,S,SW,W,NW.
    static constexpr int order[8] = {6, 7, 4, 2, 1, 0, 3, 5};
    std::string out;
    for (int idx : order) {
        if (!s.has(idx)) continue;
        if (!out.empty()) out += ",";
        out += step_name(idx);
        if (s.weight(idx) != 1) out += ":" + s.weight(idx).get_str();
    }
    return out;
}

bool is_nonsingular(const StepSet& s) {
    if (s.empty()) return false;
    // Candidate lines: directions of the compass steps. If every such line
    // has steps strictly on both sides, so does any other line through 0.
    static constexpr Step lines[4] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
    for (const Step& d : lines) {
        bool pos = false, neg = false;
        for (auto& [st, w] : s.steps()) {
            long cross = static_cast<long>(d.dx) * st.dy - static_cast<long>(d.dy) * st.dx;
            if (cross > 0) pos = true;
            if (cross < 0) neg = true;
        }
        if (!pos || !neg) return false;
    }
    return true;
}

StepPolynomials step_polynomials(const StepSet& s) {
    StepPolynomials sp;
    BiPoly num, den(Rat(1));
    // P = sum w * x^dx * y^dy; clear denominators by x*y.
    for (auto& [st, w] : s.steps()) {
        num.add_term(st.dx + 1, st.dy + 1, w);
        sp.A[st.dy + 1].add(st.dx, w);
        sp.B[st.dx + 1].add(st.dy, w);
    }
    sp.P = BiRational(num, BiPoly::monomial(1, 1));
    return sp;
}

}  // namespace walks
