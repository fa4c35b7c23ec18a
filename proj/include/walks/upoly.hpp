#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include "walks/rational.hpp"

namespace walks {

// Dense univariate polynomial over Q. Invariant: no trailing zero
// coefficients (zero polynomial has empty coefficient vector).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Rat constant) {
        if (constant != 0) c_.push_back(std::move(constant));
    }
    explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly monomial(int deg, Rat coeff = Rat(1)) {
        if (coeff == 0) return {};
        std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
        c[static_cast<std::size_t>(deg)] = std::move(coeff);
        return UPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : Rat(0);
    }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] += b.c_[i];
        }
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] -= b.c_[i];
        }
        return UPoly(std::move(c));
    }
    UPoly operator-() const {
        std::vector<Rat> c(c_);
        for (auto& x : c) x = -x;
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const UPoly& a, const Rat& s) {
        if (s == 0) return {};
        std::vector<Rat> c(a.c_);
        for (auto& x : c) x *= s;
        return UPoly(std::move(c));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    UPoly& operator+=(const UPoly& b) { return *this = *this + b; }
    UPoly& operator-=(const UPoly& b) { return *this = *this - b; }
    UPoly& operator*=(const UPoly& b) { return *this = *this * b; }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    double eval(double x) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
        return acc;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rat> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return UPoly(std::move(c));
    }

    // Quotient and remainder of exact rational division.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
        assert(!b.is_zero());
        std::vector<Rat> rem = a.c_;
        std::vector<Rat> quo;
        int db = b.degree();
        if (a.degree() >= db) quo.assign(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
        for (int d = a.degree(); d >= db; --d) {
            Rat& lead = rem[static_cast<std::size_t>(d)];
            if (lead == 0) continue;
            Rat f = lead / b.c_.back();
            quo[static_cast<std::size_t>(d - db)] = f;
            for (int j = 0; j <= db; ++j)
                rem[static_cast<std::size_t>(d - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
        }
        q = UPoly(std::move(quo));
        r = UPoly(std::move(rem));
    }

    // Monic gcd over Q.
    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero() && a.leading() != 1) {
            Rat inv = Rat(1) / a.leading();
            a = a * inv;
        }
        return a;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            Rat ck = coeff(k);
            if (ck == 0) continue;
            if (!out.empty()) out += ck > 0 ? " + " : " - ";
            else if (ck < 0) out += "-";
            Rat a = abs(ck);
            if (k == 0 || a != 1) out += a.get_str();
            if (k > 0) {
                if (a != 1) out += "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Univariate rational function over Q, normalized (gcd-reduced, monic
// denominator).
class URat {
public:
    URat() : num_(), den_(Rat(1)) {}
    URat(Rat r) : num_(std::move(r)), den_(Rat(1)) {}
    URat(UPoly n, UPoly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    static URat variable() { return URat(UPoly::monomial(1), UPoly(Rat(1))); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }

    friend URat operator+(const URat& a, const URat& b) {
        return URat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend URat operator-(const URat& a, const URat& b) {
        return URat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend URat operator*(const URat& a, const URat& b) {
        return URat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend URat operator/(const URat& a, const URat& b) {
        if (b.num_.is_zero()) throw std::domain_error("URat: division by zero");
        return URat(a.num_ * b.den_, a.den_ * b.num_);
    }
    URat operator-() const {
        URat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend bool operator==(const URat& a, const URat& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    URat& operator+=(const URat& b) { return *this = *this + b; }
    URat& operator-=(const URat& b) { return *this = *this - b; }
    URat& operator*=(const URat& b) { return *this = *this * b; }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("URat: zero denominator");
        if (num_.is_zero()) {
            den_ = UPoly(Rat(1));
            return;
        }
        UPoly g = UPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            UPoly q, r;
            UPoly::divmod(num_, g, q, r);
            num_ = q;
            UPoly::divmod(den_, g, q, r);
            den_ = q;
        }
        Rat lead = den_.leading();
        if (lead != 1) {
            Rat inv = Rat(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
    UPoly num_, den_;
};

// Laurent polynomial in one variable: coefficients for exponents
// lo..lo+size-1.
struct LaurentPoly {
    int lo = 0;
    std::vector<Rat> c;

    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }
    Rat coeff(int k) const {
        int i = k - lo;
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i)] : Rat(0);
    }
    void add(int k, const Rat& v) {
        if (v == 0) return;
        if (c.empty()) {
            lo = k;
            c.push_back(v);
            return;
        }
        if (k < lo) {
            c.insert(c.begin(), static_cast<std::size_t>(lo - k), Rat(0));
            lo = k;
        } else if (k >= lo + static_cast<int>(c.size())) {
            c.resize(static_cast<std::size_t>(k - lo) + 1);
        }
        c[static_cast<std::size_t>(k - lo)] += v;
    }
    int min_exp() const {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) return lo + static_cast<int>(i);
        return 0;
    }
    int max_exp() const {
        for (std::size_t i = c.size(); i-- > 0;)
            if (c[i] != 0) return lo + static_cast<int>(i);
        return 0;
    }
    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) acc += c[i] * pow_rat(x, lo + static_cast<int>(i));
        return acc;
    }
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (std::size_t i = 0; i < b.c.size(); ++i) r.add(b.lo + static_cast<int>(i), b.c[i]);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (std::size_t i = 0; i < b.c.size(); ++i) r.add(b.lo + static_cast<int>(i), -b.c[i]);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j)
                if (b.c[j] != 0)
                    r.add(a.lo + b.lo + static_cast<int>(i + j), a.c[i] * b.c[j]);
        }
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return (a - b).is_zero();
    }
};

}  // namespace walks
