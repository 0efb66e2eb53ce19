#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>

#include "lattes/error.hpp"
#include "lattes/numutil.hpp"

namespace lattes {

/**
 * Point of P^1(Q) in the unique reduced representation:
 * gcd(|a|,|b|) = 1, b >= 0, and the point at infinity is (1, 0).
 */
struct proj_point {
    mpz_class a = 0;
    mpz_class b = 1;

    bool is_infinity() const { return b == 0; }

    friend bool operator==(const proj_point& p, const proj_point& q) {
        return p.a == q.a && p.b == q.b;
    }
    friend bool operator!=(const proj_point& p, const proj_point& q) { return !(p == q); }
};

inline proj_point reduce_proj(const mpz_class& a, const mpz_class& b) {
    if (a == 0 && b == 0) throw precondition_error("reduce_proj: (0,0) is not a projective point");
    proj_point p;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(p.a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(p.b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    if (p.b < 0) {
        p.a = -p.a;
        p.b = -p.b;
    } else if (p.b == 0) {
        p.a = 1;
    }
    return p;
}

inline proj_point proj_from_rational(const mpq_class& x) {
    return reduce_proj(x.get_num(), x.get_den());
}

inline proj_point proj_infinity() { return proj_point{1, 0}; }

inline std::string to_string(const proj_point& p) {
    if (p.is_infinity()) return "inf";
    if (p.b == 1) return p.a.get_str();
    return p.a.get_str() + "/" + p.b.get_str();
}

// accepts "inf", "oo", "a" or "a/b"
inline proj_point parse_proj(const std::string& s) {
    if (s == "inf" || s == "oo" || s == "Inf") return proj_infinity();
    return proj_from_rational(parse_rational(s));
}

struct proj_point_hash {
    std::size_t operator()(const proj_point& p) const {
        std::size_t h1 = std::hash<unsigned long>{}(mpz_get_ui(p.a.get_mpz_t()));
        std::size_t h2 = std::hash<unsigned long>{}(mpz_get_ui(p.b.get_mpz_t()));
        std::size_t sign = (p.a < 0) ? 0x9e3779b97f4a7c15ull : 0;
        return h1 ^ (h2 << 1) ^ sign;
    }
};

}  // namespace lattes
