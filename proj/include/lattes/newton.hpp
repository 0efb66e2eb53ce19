#pragma once

#include <gmpxx.h>

#include <vector>

#include "lattes/poly.hpp"

namespace lattes {

/**
 * Newton polygon of an integer polynomial at a prime p: the lower convex
 * hull of {(i, v_p(a_i)) : a_i != 0}.  A factor x^k is recorded separately
 * as zero_order; the segments cover the nonzero support.  Root valuations
 * in an algebraic closure of Q_p are the negated slopes, with multiplicity
 * equal to the segment length.
 */
struct np_segment {
    mpq_class slope;
    long length = 0;
};

struct newton_polygon {
    std::vector<np_segment> segments;  // slopes strictly increasing
    long zero_order = 0;               // multiplicity of the root at 0
    long degree = 0;                   // degree of the input

    // root valuations (negated slopes), one entry per root of the nonzero part
    std::vector<mpq_class> root_valuations() const {
        std::vector<mpq_class> out;
        for (const auto& s : segments)
            for (long i = 0; i < s.length; ++i) out.push_back(-s.slope);
        return out;
    }

    static newton_polygon of(const int_poly& f, long p);
};

}  // namespace lattes
