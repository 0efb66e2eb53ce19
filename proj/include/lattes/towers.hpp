#pragma once

#include <gmpxx.h>

#include <vector>

#include "lattes/elliptic.hpp"
#include "lattes/heights.hpp"
#include "lattes/orbit.hpp"

namespace lattes {

enum class cert_status { certified, inconclusive };

// certified iff p does not divide disc(g): then Q[X]/(g) is unramified at p
cert_status unramified_certificate(const orbit_poly& g, long p);

/**
 * Polynomial whose roots are exactly {x : f(x) in roots(g)}: the squarefree
 * primitive part of sum_i g_i N^i D^(deg g - i).  collision is set when the
 * squarefree reduction dropped degree (colliding preimages).
 */
struct preimage_result {
    orbit_poly poly;
    bool collision = false;
    long expected_degree = 0;  // m^2 * deg g
};

preimage_result preimage_polynomial(const lattes_map& L, const orbit_poly& g);

struct spectrum_entry {
    mpq_class valuation;  // meaningful when !infinite
    bool infinite = false;
    long multiplicity = 1;
    bool member = false;  // in (1/e)Z (infinite entries always count as members)
};

struct histogram_report {
    std::vector<spectrum_entry> entries;
    long e = 1;
    bool all_member = true;
    std::vector<mpq_class> violations;
};

// spectrum of g at p with per-value membership flags for (1/e)Z u {+-inf}
histogram_report valuation_histogram(const orbit_poly& g, long p, long e);

struct tower_level {
    long level = 0;
    orbit_poly orbit;
    mpq_class height_ratio;         // exactly 1/m^(2n)
    double canonical_height = 0.0;  // base estimate * ratio
    double naive_orbit_height = 0.0;
    cert_status unramified_at_p = cert_status::inconclusive;
    histogram_report spectrum;
    bool collision = false;
};

struct tower_report {
    elliptic_curve curve;
    long p = 0;
    long m = 0;
    proj_point q0;
    long depth = 0;
    height_estimate base;  // certified estimate of hhat(q0)
    double comparison_constant = 0.0;
    std::vector<tower_level> levels;
};

/**
 * Preimage tower over a good-reduction prime: level n carries a defining
 * polynomial for f^{-n}(q0), the exact canonical-height ratio 1/m^(2n),
 * Mahler orbit heights, and discriminant certificates.  Preconditions:
 * v_p(Delta) = 0 and v_p(j) >= 0 on the given model, p does not divide m,
 * q0 finite and certified non-preperiodic.
 */
tower_report prop112_tower(const elliptic_curve& E, long p, long m, const proj_point& q0,
                           long depth, double tol = default_height_tol);

}  // namespace lattes
