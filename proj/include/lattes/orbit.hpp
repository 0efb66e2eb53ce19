#pragma once

#include <complex>
#include <vector>

#include "lattes/newton.hpp"
#include "lattes/poly.hpp"

namespace lattes {

/**
 * Primitive squarefree integer polynomial of degree >= 1 encoding a Galois
 * orbit of algebraic points (or a finite union of such orbits).
 */
class orbit_poly {
    int_poly p_;

public:
    // normalizes to the primitive part with positive leading coefficient;
    // rejects non-squarefree or constant input
    explicit orbit_poly(int_poly f);

    const int_poly& get() const { return p_; }
    long degree() const { return p_.degree(); }

    // squarefree reduction; *reduced is set when factors collided
    static orbit_poly squarefree_from(const int_poly& f, bool* reduced = nullptr);
};

/**
 * Multiset of p-adic root valuations of g, from the Newton polygon.
 * Requires g(0) != 0 so that every valuation is finite and the result has
 * exactly deg g entries; a root at 0 is rejected (use the _full variant).
 */
std::vector<mpq_class> valuation_spectrum(const orbit_poly& g, long p);

struct full_spectrum {
    std::vector<mpq_class> finite;  // sorted
    long infinite = 0;              // roots at 0, valuation +infinity
};

// strips the x^k factor first and reports its k roots separately
full_spectrum valuation_spectrum_full(const int_poly& f, long p);

/**
 * Certified complex roots of a squarefree polynomial (Aberth-Ehrlich).
 * Each returned z carries the residual certificate
 * |f(z)|/|f'(z)| < 1e-12 * max(1,|z|) with floating-point evaluation error
 * accounted for; failure raises precision_error, never a wrong value.
 */
std::vector<std::complex<double>> complex_roots(const int_poly& f);

// (1/deg) * (log|lc| + sum log max(1,|root|)); accuracy ~1e-9 on the log scale
double mahler_height(const int_poly& f);
double mahler_height(const orbit_poly& g);

}  // namespace lattes
