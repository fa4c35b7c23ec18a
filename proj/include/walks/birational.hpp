#pragma once

#include <stdexcept>
#include <utility>

#include "walks/bipoly.hpp"

namespace walks {

struct ExpressionSwell : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rational function in (x,y) over Q. Stored gcd-reduced with a primitive,
// leading-coefficient-positive denominator so equality is syntactic.
class BiRational {
public:
    BiRational() : num_(), den_(Rat(1)) {}
    BiRational(Rat r) : num_(std::move(r)), den_(Rat(1)) {}
    BiRational(BiPoly n, BiPoly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    static BiRational var_x() { return BiRational(BiPoly::var_x(), BiPoly(Rat(1))); }
    static BiRational var_y() { return BiRational(BiPoly::var_y(), BiPoly(Rat(1))); }
    static BiRational monomial(int ex, int ey, Rat c = Rat(1)) {
        BiPoly n = BiPoly::monomial(std::max(ex, 0), std::max(ey, 0), std::move(c));
        BiPoly d = BiPoly::monomial(std::max(-ex, 0), std::max(-ey, 0));
        return BiRational(std::move(n), std::move(d));
    }

    static std::size_t swell_cap;  // max monomials per num/den during normalize

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend BiRational operator+(const BiRational& a, const BiRational& b) {
        return BiRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BiRational operator-(const BiRational& a, const BiRational& b) {
        return BiRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BiRational operator*(const BiRational& a, const BiRational& b) {
        return BiRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BiRational operator/(const BiRational& a, const BiRational& b) {
        if (b.is_zero()) throw std::domain_error("BiRational: division by zero");
        return BiRational(a.num_ * b.den_, a.den_ * b.num_);
    }
    BiRational operator-() const {
        BiRational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend bool operator==(const BiRational& a, const BiRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    BiRational& operator+=(const BiRational& b) { return *this = *this + b; }
    BiRational& operator-=(const BiRational& b) { return *this = *this - b; }
    BiRational& operator*=(const BiRational& b) { return *this = *this * b; }

    BiRational pow(int e) const {
        if (e < 0) return (BiRational(Rat(1)) / *this).pow(-e);
        BiRational acc(Rat(1)), base = *this;
        int k = e;
        while (k) {
            if (k & 1) acc *= base;
            if (k >>= 1) base *= base;
        }
        return acc;
    }

    // Substitute (x,y) -> (fx, fy).
    BiRational compose(const BiRational& fx, const BiRational& fy) const {
        return eval_poly(num_, fx, fy) / eval_poly(den_, fx, fy);
    }

    Rat eval(const Rat& x, const Rat& y) const {
        Rat d = den_.eval(x, y);
        if (d == 0) throw std::domain_error("BiRational: pole at evaluation point");
        return num_.eval(x, y) / d;
    }

private:
    static BiRational eval_poly(const BiPoly& p, const BiRational& fx, const BiRational& fy) {
        // Horner in y, then x, over BiRational values.
        int dy = p.deg_y();
        BiRational acc;
        for (int j = dy; j >= 0; --j) {
            BiRational row;
            int dx = -1;
            for (auto& [k, v] : p.terms())
                if (k.second == j) dx = std::max(dx, k.first);
            for (int i = dx; i >= 0; --i) {
                Rat c(0);
                auto it = p.terms().find({i, j});
                if (it != p.terms().end()) c = it->second;
                row = row * fx + BiRational(c);
            }
            acc = acc * fy + row;
        }
        return acc;
    }

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("BiRational: zero denominator");
        if (num_.is_zero()) {
            den_ = BiPoly(Rat(1));
            return;
        }
        if (num_.term_count() > swell_cap || den_.term_count() > swell_cap)
            throw ExpressionSwell("BiRational: monomial count exceeds swell cap");
        BiPoly g = bipoly_gcd(num_, den_);
        if (!(g == BiPoly(Rat(1)))) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
        // Scale so den is primitive over Z with positive leading coefficient.
        Rat scale = content(den_);
        const auto& lead = den_.terms().rbegin()->second;
        if (lead < 0) scale = -scale;
        if (scale != 1) {
            Rat inv = Rat(1) / scale;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    static Rat content(const BiPoly& p) {
        Int num_gcd(0), den_lcm(1);
        for (auto& [k, v] : p.terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
        }
        if (num_gcd == 0) return Rat(1);
        return Rat(num_gcd) / Rat(den_lcm);
    }

public:
    // Exact division asserting zero remainder (used after gcd).
    static BiPoly exact_divide(const BiPoly& a, const BiPoly& b) {
        if (b.deg_y() == 0 && b.deg_x() == 0) {
            Rat c = b.terms().begin()->second;
            return a * (Rat(1) / c);
        }
        // Divide as y-polynomials with URat coefficients, then clear.
        auto ay = a.y_coeffs();
        auto by = b.y_coeffs();
        auto degy = [](const std::vector<UPoly>& p) {
            for (std::size_t i = p.size(); i-- > 0;)
                if (!p[i].is_zero()) return static_cast<int>(i);
            return -1;
        };
        int da = degy(ay), db = degy(by);
        if (db == 0) {
            // b is a polynomial in x only: divide each coefficient.
            BiPoly r;
            for (std::size_t j = 0; j < ay.size(); ++j) {
                if (ay[j].is_zero()) continue;
                UPoly q, rem;
                UPoly::divmod(ay[j], by[0], q, rem);
                if (!rem.is_zero()) throw std::logic_error("exact_divide: remainder");
                for (int i = 0; i <= q.degree(); ++i)
                    r.add_term(i, static_cast<int>(j), q.coeff(i));
            }
            return r;
        }
        std::vector<URat> rem(ay.size());
        for (std::size_t i = 0; i < ay.size(); ++i) rem[i] = URat(ay[i], UPoly(Rat(1)));
        std::vector<URat> quo(static_cast<std::size_t>(std::max(0, da - db + 1)));
        URat lb(by[static_cast<std::size_t>(db)], UPoly(Rat(1)));
        for (int d = da; d >= db; --d) {
            URat f = rem[static_cast<std::size_t>(d)] / lb;
            quo[static_cast<std::size_t>(d - db)] = f;
            for (int j = 0; j <= db; ++j)
                rem[static_cast<std::size_t>(d - db + j)] -=
                    f * URat(by[static_cast<std::size_t>(j)], UPoly(Rat(1)));
        }
        for (auto& r : rem)
            if (!r.is_zero()) throw std::logic_error("exact_divide: remainder");
        // Quotient coefficients must be polynomials.
        BiPoly out;
        for (std::size_t j = 0; j < quo.size(); ++j) {
            if (quo[j].is_zero()) continue;
            if (!quo[j].is_poly()) throw std::logic_error("exact_divide: non-polynomial quotient");
            UPoly p = quo[j].num() * (Rat(1) / quo[j].den().leading());
            for (int i = 0; i <= p.degree(); ++i) out.add_term(i, static_cast<int>(j), p.coeff(i));
        }
        return out;
    }

private:
    BiPoly num_, den_;
};

inline std::size_t BiRational::swell_cap = 10000;

}  // namespace walks
