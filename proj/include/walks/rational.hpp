#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace walks {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "3", "-5/7", "1/2". Returns nullopt on malformed input.
inline std::optional<Rat> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t slash = s.find('/');
    try {
        Rat r;
        if (slash == std::string::npos) {
            r = Rat(s);
        } else {
            std::string num = s.substr(0, slash), den = s.substr(slash + 1);
            if (num.empty() || den.empty()) return std::nullopt;
            r = Rat(num + "/" + den);
            if (Rat(den) == 0) return std::nullopt;
        }
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline double to_double(const Rat& r) { return r.get_d(); }

}  // namespace walks
