#include "lattes/newton.hpp"

#include "lattes/numutil.hpp"

namespace lattes {

newton_polygon newton_polygon::of(const int_poly& f, long p) {
    if (f.is_zero()) throw precondition_error("newton_polygon: zero polynomial");
    if (p < 2) throw precondition_error("newton_polygon: p must be a prime >= 2");

    newton_polygon np;
    np.degree = f.degree();
    np.zero_order = f.order_at_zero();

    // support points (i, v_p(a_i)) for the nonzero coefficients
    std::vector<std::pair<long, long>> pts;
    for (long i = np.zero_order; i <= f.degree(); ++i) {
        mpz_class c = f.coeff(i);
        if (c != 0) pts.emplace_back(i, vp_int(c, p));
    }

    // lower convex hull, left to right (monotone chain; exact arithmetic)
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // keep b only if it lies strictly below the segment a->pt;
            // cross > 0 means strictly below, 0 means collinear (merged)
            long long cross = static_cast<long long>(b.first - a.first) * (pt.second - a.second) -
                              static_cast<long long>(b.second - a.second) * (pt.first - a.first);
            if (cross > 0) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }

    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        np_segment s;
        s.length = hull[i + 1].first - hull[i].first;
        s.slope = mpq_class(hull[i + 1].second - hull[i].second, s.length);
        s.slope.canonicalize();
        np.segments.push_back(std::move(s));
    }
    return np;
}

}  // namespace lattes
