#pragma once

// Test-only oracles, kept independent of the library implementations they
// check:
//  - resultant via the Sylvester matrix determinant (fraction-free Bareiss),
//  - root valuations read off a known linear factorization.

#include <gmpxx.h>

#include <random>
#include <vector>

#include "lattes/poly.hpp"

namespace oracles {

// determinant by Bareiss fraction-free elimination (exact over Z)
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> M) {
    const std::size_t n = M.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (M[i][i] == 0) {
            std::size_t r = i + 1;
            while (r < n && M[r][i] == 0) ++r;
            if (r == n) return 0;
            std::swap(M[i], M[r]);
            sign = -sign;
        }
        for (std::size_t r = i + 1; r < n; ++r) {
            for (std::size_t c = i + 1; c < n; ++c) {
                mpz_class t = M[i][i] * M[r][c] - M[r][i] * M[i][c];
                mpz_divexact(M[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M[r][i] = 0;
        }
        prev = M[i][i];
    }
    return sign * M[n - 1][n - 1];
}

// Sylvester matrix of f (degree n) and g (degree m), (n+m) x (n+m)
inline mpz_class sylvester_resultant(const lattes::int_poly& f, const lattes::int_poly& g) {
    long n = f.degree(), m = g.degree();
    if (n < 0 || m < 0) return 0;
    if (n == 0 && m == 0) return 1;
    std::size_t size = static_cast<std::size_t>(n + m);
    std::vector<std::vector<mpz_class>> M(size, std::vector<mpz_class>(size, mpz_class(0)));
    for (long row = 0; row < m; ++row)
        for (long k = 0; k <= n; ++k) M[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] = f.coeff(n - k);
    for (long row = 0; row < n; ++row)
        for (long k = 0; k <= m; ++k)
            M[static_cast<std::size_t>(m + row)][static_cast<std::size_t>(row + k)] = g.coeff(m - k);
    return bareiss_det(std::move(M));
}

inline lattes::int_poly random_poly(std::mt19937_64& rng, long max_deg, long coeff_bound) {
    std::uniform_int_distribution<long> degd(0, max_deg);
    std::uniform_int_distribution<long> cd(-coeff_bound, coeff_bound);
    long d = degd(rng);
    std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = cd(rng);
    while (c.back() == 0) c.back() = cd(rng);
    return lattes::int_poly(std::move(c));
}

// product of (x - p^k u) for k >= 0 and (p^{-k} x - u) for k < 0; the root
// valuations are exactly the chosen k
struct scaled_factor_product {
    lattes::int_poly poly{1};
    std::vector<long> valuations;
};

inline scaled_factor_product random_scaled_product(std::mt19937_64& rng, long p, long factors) {
    std::uniform_int_distribution<long> kd(-3, 3);
    std::uniform_int_distribution<long> ud(1, p - 1);
    scaled_factor_product out;
    out.poly = lattes::int_poly{1};
    for (long i = 0; i < factors; ++i) {
        long k = kd(rng);
        long u = ud(rng);
        lattes::int_poly factor;
        if (k >= 0) {
            mpz_class pk = lattes::pow_z(p, static_cast<unsigned long>(k));
            factor = lattes::int_poly{-pk * u, 1};
        } else {
            mpz_class pk = lattes::pow_z(p, static_cast<unsigned long>(-k));
            factor = lattes::int_poly{-u, pk};
        }
        out.poly = out.poly * factor;
        out.valuations.push_back(k);
    }
    return out;
}

}  // namespace oracles
