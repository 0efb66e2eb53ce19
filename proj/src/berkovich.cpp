#include "lattes/berkovich.hpp"

#include <algorithm>

#include "lattes/numutil.hpp"

namespace lattes {

seminorm_value disk_seminorm(const tate_series& s, const disk_point& d) {
    const mpq_class& t = d.log_radius;
    if (t < s.t_min || t > s.t_max)
        throw precondition_error("disk_seminorm: t outside the declared radius range");

    bool have_candidate = false;
    mpq_class candidate;           // min over terms with exactly known valuation
    bool have_floor = false;
    mpq_class floor = s.tail_valuation_bound;  // lower bound from tail + unresolved terms
    have_floor = true;

    for (const auto& [n, c] : s.coeff) {
        mpq_class shift = mpq_class(n) * t;
        if (c.is_zero_at_precision()) {
            // contribution >= abs precision + n t, value unknown
            mpq_class lb = mpq_class(c.valuation_lower_bound()) + shift;
            if (lb < floor) floor = lb;
            continue;
        }
        mpq_class v = mpq_class(c.valuation()) + shift;
        if (!have_candidate || v < candidate) {
            candidate = v;
            have_candidate = true;
        }
    }

    seminorm_value out;
    if (!have_candidate) {
        // nothing certifiably nonzero: the seminorm is 0 to precision floor
        out.infinite = true;
        out.lower = floor;
        out.upper = floor;
        out.exact = false;
        return out;
    }
    out.upper = candidate;
    // tail terms of valuation >= floor cannot lower the min once floor >= candidate
    out.exact = (floor >= candidate);
    out.lower = out.exact ? candidate : floor;
    return out;
}

namespace {

std::shared_ptr<const std::map<long, padic_number>> x_series_coeffs(const tate_model& M, long K,
                                                                    long work) {
    if (M.cache) {
        std::lock_guard<std::mutex> lk(M.cache->mu);
        auto it = M.cache->tbl.find({K, work});
        if (it != M.cache->tbl.end()) return it->second;
    }
    auto out = std::make_shared<std::map<long, padic_number>>();
    const padic_number& q = M.q;
    long p = M.p;
    padic_number one = padic_number::from_rational_abs(1, p, work);
    padic_number qk = one;
    for (long k = 1; k <= K; ++k) {
        qk = qk * q;
        padic_number denom = (one - qk).inverse();      // 1/(1-q^k)
        (*out)[k] = denom.scale(k);                     // k/(1-q^k)
        (*out)[-k] = (qk * denom).scale(k);             // k q^k/(1-q^k)
    }
    (*out)[0] = -(sk_series(1, q, work).scale(2));      // -2 s1(q)
    if (M.cache) {
        std::lock_guard<std::mutex> lk(M.cache->mu);
        M.cache->tbl.emplace(std::make_pair(K, work),
                             std::const_pointer_cast<const std::map<long, padic_number>>(out));
        return M.cache->tbl.at({K, work});
    }
    return out;
}

}  // namespace

tate_series tate_x_series(const tate_model& M, long K, const mpq_class& t_min,
                          const mpq_class& t_max) {
    if (K < 1) throw precondition_error("tate_x_series: K >= 1 required");
    long vq = M.q.valuation();
    if (!(t_min > 0 && t_min <= t_max && t_max < vq))
        throw precondition_error("tate_x_series: radius range must lie inside (0, v(q))");

    long work = M.prec;
    tate_series s;
    s.p = M.p;
    s.truncation = K;
    s.t_min = t_min;
    s.t_max = t_max;
    auto coeffs = x_series_coeffs(M, K, work);
    s.coeff = *coeffs;
    mpq_class margin = std::min(mpq_class(t_min), mpq_class(vq) - t_max);
    s.tail_valuation_bound = mpq_class(K + 1) * margin;
    return s;
}

mpq_class skeleton_val(const tate_model& M, const mpq_class& t, long initial_K) {
    long vq = M.q.valuation();
    if (!(t > 0 && t < vq))
        throw precondition_error("skeleton_val: t must satisfy 0 < t < v(q) (not a skeleton point)");
    long K = std::max<long>(1, initial_K);
    for (int tries = 0; tries < 8; ++tries, K *= 2) {
        tate_series s = tate_x_series(M, K, t, t);
        seminorm_value v = disk_seminorm(s, disk_point{t});
        if (v.exact) return v.upper;
    }
    throw precision_error("skeleton_val: seminorm did not certify; raise the working precision");
}

block_seminorms skeleton_blocks(const tate_model& M, const mpq_class& t, long K) {
    tate_series s = tate_x_series(M, K, t, t);
    tate_series pos = s, neg = s, cst = s;
    pos.coeff.clear();
    neg.coeff.clear();
    cst.coeff.clear();
    for (const auto& [n, c] : s.coeff) {
        if (n > 0) pos.coeff.emplace(n, c);
        else if (n < 0) neg.coeff.emplace(n, c);
        else cst.coeff.emplace(n, c);
    }
    // the constant block has no tail
    cst.tail_valuation_bound = mpq_class(M.prec);
    block_seminorms out{disk_seminorm(pos, disk_point{t}), disk_seminorm(neg, disk_point{t}),
                        disk_seminorm(cst, disk_point{t})};
    return out;
}

tate_point tate_point_xy(const tate_model& M, const padic_number& zeta, long abs_target) {
    const long p = M.p;
    const padic_number& q = M.q;
    const long vq = q.valuation();
    if (zeta.is_zero_at_precision()) throw precondition_error("tate_point: zeta = 0");
    const long vz = zeta.valuation();
    if (vz < 0 || vz >= 2 * vq)
        throw precondition_error("tate_point: reduce v(zeta) into [0, 2 v(q)) first");
    if (zeta.abs_prec() < abs_target)
        throw precision_error("tate_point: zeta carries too little precision");

    const padic_number one = padic_number::from_rational_abs(1, p, abs_target + 2 * vq + 2);
    const padic_number zinv = zeta.inverse();

    padic_number x = padic_number::zero_at(p, abs_target);
    padic_number y = padic_number::zero_at(p, abs_target);

    // n >= 0 terms: u = q^n zeta;  x += u/(1-u)^2, y += u^2/(1-u)^3
    long n_max = (abs_target + 2 * vq + std::abs(vz)) / vq + 2;
    padic_number u = zeta;
    for (long n = 0; n <= n_max; ++n) {
        padic_number d1 = one - u;
        if (d1.is_zero_at_precision())
            throw precondition_error("tate_point: zeta in q^Z (identity point)");
        padic_number inv = d1.inverse();
        padic_number inv2 = inv * inv;
        x = x + u * inv2;
        y = y + (u * u) * (inv2 * inv);
        u = u * q;
    }
    // n <= -1 terms via w = q^j zeta^{-1}:  x += w/(1-w)^2, y += -w/(1-w)^3
    padic_number w = q * zinv;
    for (long j = 1; j <= n_max; ++j) {
        padic_number d1 = one - w;
        if (d1.is_zero_at_precision())
            throw precondition_error("tate_point: zeta in q^Z (identity point)");
        padic_number inv = d1.inverse();
        padic_number inv2 = inv * inv;
        x = x + w * inv2;
        y = y - w * (inv2 * inv);
        w = w * q;
    }
    padic_number s1 = sk_series(1, q, abs_target);
    x = x - s1.scale(2);
    y = y + s1;
    return {x.truncate_abs(abs_target), y.truncate_abs(abs_target)};
}

tate_verification verify_tate_point(const tate_model& M, const padic_number& zeta, long N) {
    tate_point pt = tate_point_xy(M, zeta, N);
    const padic_number &x = pt.x, &y = pt.y;
    padic_number r = y * y + x * y - x * x * x - M.a4 * x - M.a6;
    tate_verification out;
    out.pt = pt;
    out.residual_is_zero_at_precision = r.is_zero_at_precision();
    out.residual_valuation = r.valuation_lower_bound();
    return out;
}

}  // namespace lattes
