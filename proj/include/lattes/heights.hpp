#pragma once

#include <gmpxx.h>

#include <vector>

#include "lattes/elliptic.hpp"
#include "lattes/proj.hpp"

namespace lattes {

// log max(|a|, |b|) on the reduced representative; h(inf) = 0
double naive_height(const proj_point& P);

/**
 * Certified constant C with |h(f(P)) - d h(P)| <= C on all of P^1(Qbar).
 * Upper half from coefficient norms; lower half from exact integer cofactors
 * of the resultant identities A*F + B*G = Res * a^(2d-1) (resp. b^(2d-1)).
 */
struct comparison_constant {
    double upper = 0.0;
    double lower = 0.0;
    double value = 0.0;        // max(upper, lower)
    mpz_class homog_resultant; // det of the 2d x 2d Sylvester system, nonzero
};

comparison_constant height_comparison_constant(const lattes_map& L);

struct height_estimate {
    double value = 0.0;
    double error_bound = 0.0;  // |value - true canonical height| <= error_bound
    long iterations_used = 0;
};

inline constexpr double default_height_tol = 1e-6;
inline constexpr long default_bit_budget = 1L << 26;  // per coordinate
inline constexpr long default_orbit_cap = 64;

/**
 * Canonical height as lim h(f^n P)/d^n: iterate the reduced homogeneous
 * lift, stop once C/d^n <= tol.  Exceeding the coefficient bit budget
 * raises resource_error carrying the partial estimate and its bound.
 */
height_estimate canonical_height(const lattes_map& L, const proj_point& P,
                                 double tol = default_height_tol,
                                 long bit_budget = default_bit_budget);

enum class orbit_status { preperiodic, wandering, inconclusive_wandering };

struct preperiodicity_report {
    orbit_status status = orbit_status::inconclusive_wandering;
    long tail = 0;   // preperiodic: first index on the cycle
    long cycle = 0;  // preperiodic: cycle length
    // wandering: the certificate h(f^k P) > C/(d-1) + 1 forces hhat > 0
    long certificate_index = 0;
    double certificate_height = 0.0;
    double certificate_threshold = 0.0;
};

preperiodicity_report is_preperiodic(const lattes_map& L, const proj_point& P,
                                     long cap = default_orbit_cap);

}  // namespace lattes
