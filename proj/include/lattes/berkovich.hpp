#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>

#include "lattes/modular.hpp"
#include "lattes/padic.hpp"

namespace lattes {

/**
 * Type-II disk point (0, r) with r = p^{-t}, kept in valuation units:
 * t = -log_p r.  Skeleton points are exactly 0 < t < v(q).
 */
struct disk_point {
    mpq_class log_radius;  // t, exact
    static disk_point origin_radius(mpq_class t) { return disk_point{std::move(t)}; }
};

/**
 * Truncated Laurent series over Q_p with exponents in [-K, K] plus a
 * certified bound: every discarded term contributes valuation
 * >= tail_valuation_bound at every radius in the declared range.
 */
struct tate_series {
    long p = 0;
    std::map<long, padic_number> coeff;  // exponent -> coefficient
    long truncation = 0;                 // K
    mpq_class t_min, t_max;              // declared radius range (valuation units)
    mpq_class tail_valuation_bound;
};

struct seminorm_value {
    mpq_class lower;   // certified lower bound for the seminorm valuation
    mpq_class upper;   // certified upper bound (attained by a stored term)
    bool exact = false;
    bool infinite = false;  // the series is 0 to the stated precision
};

/**
 * Valuation of the multiplicative seminorm |.|_(0,r) of s: the min over
 * monomials of v(coeff_n) + n t.  Exact when the tail bound (and every
 * coefficient's precision) exceeds the running minimum; otherwise a
 * certified interval, never a wrong exact value.
 */
seminorm_value disk_seminorm(const tate_series& s, const disk_point& d);

/**
 * Laurent expansion of the pushforward x-coordinate on the annulus:
 *   sum_{k>=1} [k/(1-q^k)] X^k + sum_{k>=1} [k q^k/(1-q^k)] X^{-k} - 2 s1(q),
 * with tail bound (K+1) * min(t_min, v(q) - t_max) on the declared range.
 */
tate_series tate_x_series(const tate_model& M, long K, const mpq_class& t_min,
                          const mpq_class& t_max);

/**
 * Valuation of the skeleton point image: disk_seminorm of the x-series at
 * (0, t), 0 < t < v(q); the truncation K is escalated until the value is
 * certified exact.  Equals min(t, v(q) - t).
 */
mpq_class skeleton_val(const tate_model& M, const mpq_class& t, long initial_K = 4);

// the three summation blocks of the x-series, for cross-checks:
// positive exponents, negative exponents, constant term
struct block_seminorms {
    seminorm_value positive, negative, constant;
};
block_seminorms skeleton_blocks(const tate_model& M, const mpq_class& t, long K = 8);

struct tate_point {
    padic_number x, y;
};

/**
 * (x(zeta), y(zeta)) from the uniformization series, all terms of valuation
 * < abs_target included.  Accepts 0 <= v(zeta) < 2 v(q); rejects zeta in
 * q^Z (the identity, where the series have poles).
 */
tate_point tate_point_xy(const tate_model& M, const padic_number& zeta, long abs_target);

struct tate_verification {
    tate_point pt;
    long residual_valuation = 0;  // v_p(y^2 + xy - x^3 - a4 x - a6) >= this
    bool residual_is_zero_at_precision = false;
};

tate_verification verify_tate_point(const tate_model& M, const padic_number& zeta, long N);

}  // namespace lattes
