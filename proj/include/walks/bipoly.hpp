#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "walks/upoly.hpp"

namespace walks {

// Bivariate polynomial over Q with nonnegative exponents, sparse map storage.
class BiPoly {
public:
    using Key = std::pair<int, int>;  // (ex, ey)

    BiPoly() = default;
    explicit BiPoly(Rat constant) {
        if (constant != 0) m_[{0, 0}] = std::move(constant);
    }
    static BiPoly monomial(int ex, int ey, Rat c = Rat(1)) {
        BiPoly p;
        if (c != 0) p.m_[{ex, ey}] = std::move(c);
        return p;
    }
    static BiPoly var_x() { return monomial(1, 0); }
    static BiPoly var_y() { return monomial(0, 1); }

    bool is_zero() const { return m_.empty(); }
    std::size_t term_count() const { return m_.size(); }
    const std::map<Key, Rat>& terms() const { return m_; }
    void add_term(int ex, int ey, const Rat& c) {
        if (c == 0) return;
        auto it = m_.find({ex, ey});
        if (it == m_.end()) m_[{ex, ey}] = c;
        else {
            it->second += c;
            if (it->second == 0) m_.erase(it);
        }
    }

    int deg_x() const {
        int d = -1;
        for (auto& [k, v] : m_) d = std::max(d, k.first);
        return d;
    }
    int deg_y() const {
        int d = -1;
        for (auto& [k, v] : m_) d = std::max(d, k.second);
        return d;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (auto& [k, v] : b.m_) r.add_term(k.first, k.second, v);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (auto& [k, v] : b.m_) r.add_term(k.first, k.second, -v);
        return r;
    }
    BiPoly operator-() const {
        BiPoly r;
        for (auto& [k, v] : m_) r.m_[k] = -v;
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (auto& [ka, va] : a.m_)
            for (auto& [kb, vb] : b.m_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const Rat& s) {
        BiPoly r;
        if (s == 0) return r;
        for (auto& [k, v] : a.m_) r.m_[k] = v * s;
        return r;
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.m_ == b.m_; }
    BiPoly& operator+=(const BiPoly& b) { return *this = *this + b; }
    BiPoly& operator-=(const BiPoly& b) { return *this = *this - b; }
    BiPoly& operator*=(const BiPoly& b) { return *this = *this * b; }

    Rat eval(const Rat& x, const Rat& y) const {
        Rat acc(0);
        for (auto& [k, v] : m_) acc += v * pow_rat(x, k.first) * pow_rat(y, k.second);
        return acc;
    }

    // View as polynomial in y with UPoly (in x) coefficients, degree dy.
    std::vector<UPoly> y_coeffs() const {
        std::vector<UPoly> out(static_cast<std::size_t>(std::max(0, deg_y() + 1)));
        for (auto& [k, v] : m_) {
            std::vector<Rat> c(static_cast<std::size_t>(k.first) + 1);
            c.back() = v;
            out[static_cast<std::size_t>(k.second)] += UPoly(std::move(c));
        }
        return out;
    }
    static BiPoly from_y_coeffs(const std::vector<UPoly>& ys) {
        BiPoly r;
        for (std::size_t j = 0; j < ys.size(); ++j)
            for (int i = 0; i <= ys[j].degree(); ++i)
                r.add_term(i, static_cast<int>(j), ys[j].coeff(i));
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = m_.rbegin(); it != m_.rend(); ++it) {
            const auto& [k, v] = *it;
            if (!out.empty()) out += v > 0 ? " + " : " - ";
            else if (v < 0) out += "-";
            Rat a = abs(v);
            bool need_coeff = (a != 1) || (k.first == 0 && k.second == 0);
            if (need_coeff) out += a.get_str();
            if (k.first > 0) {
                if (need_coeff) out += "*";
                out += "x";
                if (k.first > 1) out += "^" + std::to_string(k.first);
            }
            if (k.second > 0) {
                if (need_coeff || k.first > 0) out += "*";
                out += "y";
                if (k.second > 1) out += "^" + std::to_string(k.second);
            }
        }
        return out;
    }

private:
    std::map<Key, Rat> m_;
};

namespace detail {

// gcd of all UPoly coefficients (monic), for content computation over Q(x).
inline UPoly upoly_vec_gcd(const std::vector<UPoly>& v) {
    UPoly g;
    for (const auto& p : v) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p : UPoly::gcd(g, p);
        if (g.degree() == 0) break;
    }
    if (!g.is_zero() && g.leading() != 1) g = g * (Rat(1) / g.leading());
    return g;
}

// Pseudo-remainder of a by b, both as y-polynomials over Q[x].
inline std::vector<UPoly> prem_y(std::vector<UPoly> a, const std::vector<UPoly>& b) {
    auto degy = [](const std::vector<UPoly>& p) {
        for (std::size_t i = p.size(); i-- > 0;)
            if (!p[i].is_zero()) return static_cast<int>(i);
        return -1;
    };
    int db = degy(b);
    if (db < 0) throw std::domain_error("prem_y: zero divisor");
    const UPoly& lb = b[static_cast<std::size_t>(db)];
    int da = degy(a);
    while (da >= db) {
        UPoly la = a[static_cast<std::size_t>(da)];
        // a <- lb*a - la*y^(da-db)*b
        std::vector<UPoly> next(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) next[i] = lb * a[i];
        for (int j = 0; j <= db; ++j) {
            std::size_t idx = static_cast<std::size_t>(da - db + j);
            next[idx] -= la * b[static_cast<std::size_t>(j)];
        }
        a = std::move(next);
        int nd = degy(a);
        if (nd >= da) throw std::logic_error("prem_y: degree did not drop");
        da = nd;
    }
    return a;
}

}  // namespace detail

// gcd over Q[x,y] via primitive PRS in the y-variable.
inline BiPoly bipoly_gcd(const BiPoly& A, const BiPoly& B) {
    if (A.is_zero()) return B;
    if (B.is_zero()) return A;
    if (A.deg_y() == 0 && B.deg_y() == 0) {
        auto ac = A.y_coeffs(), bc = B.y_coeffs();
        UPoly g = UPoly::gcd(ac[0], bc[0]);
        std::vector<UPoly> v{g};
        return BiPoly::from_y_coeffs(v);
    }
    auto a = A.y_coeffs(), b = B.y_coeffs();
    auto degy = [](const std::vector<UPoly>& p) {
        for (std::size_t i = p.size(); i-- > 0;)
            if (!p[i].is_zero()) return static_cast<int>(i);
        return -1;
    };
    if (degy(a) < degy(b)) std::swap(a, b);
    UPoly ca = detail::upoly_vec_gcd(a), cb = detail::upoly_vec_gcd(b);
    UPoly cont = UPoly::gcd(ca, cb);
    auto divide_out = [](std::vector<UPoly>& p, const UPoly& g) {
        if (g.degree() <= 0) return;
        for (auto& c : p) {
            if (c.is_zero()) continue;
            UPoly q, r;
            UPoly::divmod(c, g, q, r);
            c = q;
        }
    };
    divide_out(a, ca);
    divide_out(b, cb);
    while (true) {
        std::vector<UPoly> r = detail::prem_y(a, b);
        if (degy(r) < 0) break;
        UPoly cr = detail::upoly_vec_gcd(r);
        divide_out(r, cr);
        a = std::move(b);
        b = std::move(r);
    }
    UPoly cbp = detail::upoly_vec_gcd(b);
    divide_out(b, cbp);
    BiPoly g = BiPoly::from_y_coeffs(b);
    std::vector<UPoly> cv{cont};
    return g * BiPoly::from_y_coeffs(cv);
}

}  // namespace walks
