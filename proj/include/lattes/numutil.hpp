#pragma once

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <string>

#include "lattes/error.hpp"

namespace lattes {

// log|z| for z != 0, accurate to ~1 ulp even for huge operands.
inline double log_abs(const mpz_class& z) {
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * M_LN2;
}

inline long bit_size(const mpz_class& z) {
    return z == 0 ? 0 : static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

// p-adic valuation of a nonzero integer.
inline long vp_int(const mpz_class& z, long p) {
    if (z == 0) throw precondition_error("vp_int: zero input");
    mpz_class u = z, q, r;
    long v = 0;
    mpz_class pz(p);
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), u.get_mpz_t(), pz.get_mpz_t());
        if (r != 0) break;
        u = q;
        ++v;
    }
    return v;
}

// Additive p-adic valuation on Q; nullopt encodes +infinity (x == 0).
inline std::optional<long> vp(const mpq_class& x, long p) {
    if (p < 2) throw precondition_error("vp: p must be a prime >= 2");
    if (x == 0) return std::nullopt;
    return vp_int(x.get_num(), p) - vp_int(x.get_den(), p);
}

// "a/b" or "a"; canonicalizes.
inline mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0 || q.get_den() == 0)
        throw precondition_error("cannot parse rational '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rational_str(const mpq_class& q) {
    return q.get_str();
}

inline mpz_class pow_z(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline mpz_class pow_z(long b, unsigned long e) { return pow_z(mpz_class(b), e); }

}  // namespace lattes
