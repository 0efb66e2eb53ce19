#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "lattes/padic.hpp"

namespace lattes {

// integer q-expansions, index = exponent of q

// coefficients of q*j(q) = 1 + 744 q + 196884 q^2 + ...  (terms 0..n)
std::vector<mpz_class> j_times_q_series(long n);

// sigma_k(1..n), divisor power sums
std::vector<mpz_class> sigma_series(long k, long n);

// prod_{m>=1} (1-q^m)^24, terms 0..n
std::vector<mpz_class> eta24_series(long n);

// E4 = 1 + 240 sum sigma_3(m) q^m, terms 0..n
std::vector<mpz_class> e4_series(long n);

// sum of coeffs[n] * q^n; q must carry enough precision for abs_target
padic_number eval_series(const std::vector<mpz_class>& coeffs, const padic_number& q,
                         long abs_target);

/**
 * The Tate parameter: the unique q with 0 < v(q) < inf and j(q) = j, solved
 * by Newton iteration from q0 = 1/j.  Requires v_p(j) < 0; the returned q
 * has relative precision >= N and satisfies j(q) = j mod p^N (certified by a
 * round-trip evaluation).
 */
padic_number q_from_j(const mpq_class& j, long p, long N);

// evaluate the j(q) Laurent series at an explicit q with 0 < v(q)
padic_number j_from_q(const padic_number& q, long abs_target);

// write-once coefficient table for the pushforward series of a fixed model,
// keyed by (truncation K, working precision); shared across threads
struct series_cache {
    std::mutex mu;
    std::map<std::pair<long, long>, std::shared_ptr<const std::map<long, padic_number>>> tbl;
};

/**
 * Tate model y^2 + xy = x^3 + a4 x + a6 attached to q, coefficients correct
 * mod p^N:  a4 = -5 s3(q),  a6 = -(5 s3(q) + 7 s5(q))/12  with
 * s_k(q) = sum_{n>=1} n^k q^n/(1-q^n).
 */
struct tate_model {
    long p = 0;
    padic_number q;
    padic_number a4;
    padic_number a6;
    long prec = 0;  // N: a4, a6 known mod p^N

    std::shared_ptr<series_cache> cache;  // optional; transparent
};

tate_model make_tate_model(const padic_number& q, long N, bool with_cache = true);

// c4^3 / Delta of the model, from the b-invariant formulas (self-check)
padic_number model_j_invariant(const tate_model& M, long abs_target);

// Delta of the model from the a-invariant formulas
padic_number model_discriminant(const tate_model& M, long abs_target);

// s_k(q) = sum sigma_k(m) q^m to the given absolute precision
padic_number sk_series(long k, const padic_number& q, long abs_target);

}  // namespace lattes
