#include "lattes/towers.hpp"

#include "lattes/numutil.hpp"

namespace lattes {

cert_status unramified_certificate(const orbit_poly& g, long p) {
    mpz_class d = discriminant(g.get());
    // squarefree input: d != 0
    return (vp_int(d, p) == 0) ? cert_status::certified : cert_status::inconclusive;
}

preimage_result preimage_polynomial(const lattes_map& L, const orbit_poly& g) {
    const long gamma = g.degree();
    // T = sum_i g_i N^i D^(gamma-i) = D^gamma * g(N/D); deg N > deg D keeps
    // the leading term g_gamma * lc(N)^gamma alive, so T never vanishes
    std::vector<int_poly> npow(static_cast<std::size_t>(gamma) + 1), dpow = npow;
    npow[0] = int_poly{1};
    dpow[0] = int_poly{1};
    for (long i = 1; i <= gamma; ++i) {
        npow[static_cast<std::size_t>(i)] = npow[static_cast<std::size_t>(i - 1)] * L.num;
        dpow[static_cast<std::size_t>(i)] = dpow[static_cast<std::size_t>(i - 1)] * L.den;
    }
    int_poly T;
    for (long i = 0; i <= gamma; ++i) {
        mpz_class gi = g.get().coeff(i);
        if (gi == 0) continue;
        T = T + gi * (npow[static_cast<std::size_t>(i)] * dpow[static_cast<std::size_t>(gamma - i)]);
    }
    if (T.is_zero())
        throw precondition_error("preimage_polynomial: resultant vanished identically");

    bool reduced = false;
    orbit_poly sf = orbit_poly::squarefree_from(T, &reduced);
    return preimage_result{std::move(sf), reduced, L.degree() * gamma};
}

histogram_report valuation_histogram(const orbit_poly& g, long p, long e) {
    if (e < 1) throw precondition_error("valuation_histogram: e >= 1 required");
    full_spectrum spec = valuation_spectrum_full(g.get(), p);
    histogram_report out;
    out.e = e;
    if (spec.infinite > 0) {
        spectrum_entry ent;
        ent.infinite = true;
        ent.multiplicity = spec.infinite;
        ent.member = true;  // +-inf always belongs to the allowed set
        out.entries.push_back(ent);
    }
    for (std::size_t i = 0; i < spec.finite.size();) {
        std::size_t j = i;
        while (j < spec.finite.size() && spec.finite[j] == spec.finite[i]) ++j;
        spectrum_entry ent;
        ent.valuation = spec.finite[i];
        ent.multiplicity = static_cast<long>(j - i);
        mpq_class scaled = ent.valuation * e;
        ent.member = (scaled.get_den() == 1);
        if (!ent.member) {
            out.all_member = false;
            out.violations.push_back(ent.valuation);
        }
        out.entries.push_back(ent);
        i = j;
    }
    return out;
}

tower_report prop112_tower(const elliptic_curve& E, long p, long m, const proj_point& q0,
                           long depth, double tol) {
    if (m < 0) m = -m;
    if (m < 2) throw precondition_error("tower: |m| >= 2 required");
    if (m % p == 0) throw precondition_error("tower: p must not divide m");
    auto vdelta = vp(E.discriminant(), p);
    if (!vdelta.has_value() || *vdelta != 0)
        throw precondition_error("tower: good reduction required on the given model (v_p(Delta) = 0)");
    auto vj = vp(j_invariant(E), p);
    if (vj.has_value() && *vj < 0)
        throw precondition_error("tower: v_p(j) >= 0 required (degenerate reduction)");
    if (q0.is_infinity()) throw precondition_error("tower: q0 must be finite");
    long max_depth = (m == 2) ? 3 : 2;
    if (depth < 0 || depth > max_depth)
        throw precondition_error("tower: depth exceeds the supported cap for this m");

    lattes_map L = make_lattes_map(E, m);

    preperiodicity_report pp = is_preperiodic(L, q0);
    if (pp.status == orbit_status::preperiodic)
        throw precondition_error("tower: q0 is preperiodic under f");
    if (pp.status == orbit_status::inconclusive_wandering)
        throw precondition_error("tower: could not certify q0 non-preperiodic");

    tower_report rep;
    rep.curve = E;
    rep.p = p;
    rep.m = m;
    rep.q0 = q0;
    rep.depth = depth;
    rep.base = canonical_height(L, q0, tol);
    rep.comparison_constant = height_comparison_constant(L).value;

    // level 0: b*Y - a
    orbit_poly g(int_poly{-q0.a, q0.b});
    mpq_class ratio(1);
    bool collided = false;
    for (long n = 0; n <= depth; ++n) {
        tower_level lvl{n,
                        g,
                        ratio,
                        rep.base.value * ratio.get_d(),
                        mahler_height(g),
                        unramified_certificate(g, p),
                        valuation_histogram(g, p, 1),
                        collided};
        rep.levels.push_back(std::move(lvl));
        if (n < depth) {
            preimage_result pre = preimage_polynomial(L, g);
            g = pre.poly;
            collided = pre.collision;
            ratio /= m * m;
        }
    }
    return rep;
}

}  // namespace lattes
