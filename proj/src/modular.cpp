#include "lattes/modular.hpp"

namespace lattes {

namespace {

// truncated product of integer series, terms 0..n
std::vector<mpz_class> series_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                                  long n) {
    std::vector<mpz_class> r(static_cast<std::size_t>(n) + 1, mpz_class(0));
    for (long i = 0; i <= n && i < static_cast<long>(a.size()); ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (long j = 0; j + i <= n && j < static_cast<long>(b.size()); ++j)
            r[static_cast<std::size_t>(i + j)] +=
                a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    return r;
}

// inverse of a series with constant term 1
std::vector<mpz_class> series_inv(const std::vector<mpz_class>& a, long n) {
    std::vector<mpz_class> r(static_cast<std::size_t>(n) + 1, mpz_class(0));
    r[0] = 1;
    for (long m = 1; m <= n; ++m) {
        mpz_class s = 0;
        for (long i = 1; i <= m && i < static_cast<long>(a.size()); ++i)
            s += a[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(m - i)];
        r[static_cast<std::size_t>(m)] = -s;
    }
    return r;
}

}  // namespace

std::vector<mpz_class> sigma_series(long k, long n) {
    std::vector<mpz_class> s(static_cast<std::size_t>(n) + 1, mpz_class(0));
    for (long d = 1; d <= n; ++d) {
        mpz_class dk = pow_z(d, static_cast<unsigned long>(k));
        for (long m = d; m <= n; m += d) s[static_cast<std::size_t>(m)] += dk;
    }
    return s;
}

std::vector<mpz_class> eta24_series(long n) {
    // prod (1-q^m) by the pentagonal number theorem, then ^24
    std::vector<mpz_class> pent(static_cast<std::size_t>(n) + 1, mpz_class(0));
    pent[0] = 1;
    for (long j = 1;; ++j) {
        long e1 = j * (3 * j - 1) / 2;
        long e2 = j * (3 * j + 1) / 2;
        if (e1 > n && e2 > n) break;
        long sign = (j & 1) ? -1 : 1;
        if (e1 <= n) pent[static_cast<std::size_t>(e1)] += sign;
        if (e2 <= n) pent[static_cast<std::size_t>(e2)] += sign;
    }
    std::vector<mpz_class> r{mpz_class(1)};
    std::vector<mpz_class> base = pent;
    long e = 24;
    while (e > 0) {
        if (e & 1) r = series_mul(r, base, n);
        e >>= 1;
        if (e) base = series_mul(base, base, n);
    }
    return r;
}

std::vector<mpz_class> e4_series(long n) {
    auto s3 = sigma_series(3, n);
    std::vector<mpz_class> r(static_cast<std::size_t>(n) + 1, mpz_class(0));
    r[0] = 1;
    for (long m = 1; m <= n; ++m) r[static_cast<std::size_t>(m)] = 240 * s3[static_cast<std::size_t>(m)];
    return r;
}

std::vector<mpz_class> j_times_q_series(long n) {
    auto e4 = e4_series(n);
    auto e4cube = series_mul(series_mul(e4, e4, n), e4, n);
    auto inv = series_inv(eta24_series(n), n);
    return series_mul(e4cube, inv, n);
}

padic_number eval_series(const std::vector<mpz_class>& coeffs, const padic_number& q,
                         long abs_target) {
    long p = q.prime();
    if (q.is_zero_at_precision()) throw precision_error("eval_series: q is zero at precision");
    if (q.abs_prec() < abs_target)
        throw precision_error("eval_series: q carries too little precision");
    padic_number r = padic_number::zero_at(p, abs_target + 1);
    long vq = q.valuation();
    padic_number qn = padic_number::from_rational_abs(1, p, abs_target + 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        long n = static_cast<long>(i);
        if (n > 0) qn = qn * q;
        if (n * vq >= abs_target) break;  // remaining terms are O(p^abs_target)
        if (coeffs[i] == 0) continue;
        r = r + qn.scale(mpq_class(coeffs[i]));
    }
    return r.truncate_abs(abs_target);
}

padic_number j_from_q(const padic_number& q, long abs_target) {
    long vq = q.valuation();
    if (vq <= 0) throw precondition_error("j_from_q: 0 < v(q) required");
    // j = (q*j)/q; the series must absorb the 1/q shift
    long terms = (abs_target + vq) / vq + 2;
    auto W = j_times_q_series(terms);
    padic_number num = eval_series(W, q, abs_target + vq);
    return num / q;
}

padic_number q_from_j(const mpq_class& j, long p, long N) {
    auto vj = vp(j, p);
    if (!vj.has_value() || *vj >= 0)
        throw precondition_error("q_from_j: v_p(j) < 0 required (no Tate parameter)");
    long k = -*vj;  // target valuation of q
    if (N < 1) throw precondition_error("q_from_j: N >= 1 required");

    // q has v(q) = k; deliver absolute precision N + 2k so that the
    // round trip j(q) = j holds mod p^N (dj/dq has valuation -2k)
    long abs_q = N + 2 * k;
    long work = abs_q + 2 * k + 4;
    long terms = work / k + 3;
    auto W = j_times_q_series(terms);          // W(q) = q j(q)
    std::vector<mpz_class> Wp(W.size() - 1);   // W'(q)
    for (std::size_t i = 1; i < W.size(); ++i) Wp[i - 1] = static_cast<long>(i) * W[i];

    padic_number jp = padic_number::from_rational(j, p, work + 2 * k);
    padic_number q = jp.inverse();  // first-order solution, error O(p^{2k})

    for (int iter = 0; iter < 64; ++iter) {
        // T(q) = W(q) - j q vanishes at the Tate parameter
        padic_number T = eval_series(W, q, work) - (jp * q).truncate_abs(work);
        if (T.is_zero_at_precision() && T.valuation_lower_bound() >= abs_q - k) break;
        padic_number Tp = eval_series(Wp, q, work) - jp.truncate_abs(work);
        padic_number step = T / Tp;
        q = q - step;
        if (!step.is_zero_at_precision() && step.valuation() >= abs_q) break;
    }
    q = q.truncate_abs(abs_q);
    if (q.is_zero_at_precision() || q.valuation() != k)
        throw precision_error("q_from_j: iteration failed to locate the Tate parameter");

    // certificate: j(q) = j mod p^N
    padic_number back = j_from_q(q, N);
    if (!congruent_mod(back, padic_number::from_rational(j, p, N + k), N))
        throw precision_error("q_from_j: round-trip certificate failed");
    return q;
}

padic_number sk_series(long k, const padic_number& q, long abs_target) {
    long vq = q.valuation();
    long terms = abs_target / vq + 2;
    auto sig = sigma_series(k, terms);
    return eval_series(sig, q, abs_target);
}

tate_model make_tate_model(const padic_number& q, long N, bool with_cache) {
    if (q.is_zero_at_precision() || q.valuation() <= 0)
        throw precondition_error("tate_model: 0 < v(q) required");
    long p = q.prime();
    long pad = vp_int(mpz_class(12), p);  // digits lost to the division by 12
    long work = N + pad;
    if (q.abs_prec() < work)
        throw precision_error("tate_model: q carries too little precision for N");

    padic_number s3 = sk_series(3, q, work);
    padic_number s5 = sk_series(5, q, work);
    tate_model M;
    M.p = p;
    M.q = q;
    M.prec = N;
    M.a4 = (-s3.scale(5)).truncate_abs(N);
    padic_number t = -(s3.scale(5) + s5.scale(7));
    M.a6 = t.scale(mpq_class(1, 12)).truncate_abs(N);
    if (with_cache) M.cache = std::make_shared<series_cache>();
    return M;
}

padic_number model_discriminant(const tate_model& M, long abs_target) {
    // for y^2 + xy = x^3 + a4 x + a6:
    // Delta = a4^2 - a6 - 64 a4^3 + 72 a4 a6 - 432 a6^2
    const padic_number &a4 = M.a4, &a6 = M.a6;
    padic_number r = a4 * a4 - a6 - (a4 * a4 * a4).scale(64) + (a4 * a6).scale(72) -
                     (a6 * a6).scale(432);
    return r.truncate_abs(abs_target);
}

padic_number model_j_invariant(const tate_model& M, long abs_target) {
    padic_number c4 = padic_number::from_rational_abs(1, M.p, M.prec) - M.a4.scale(48);
    padic_number c4cube = c4 * c4 * c4;
    return (c4cube / model_discriminant(M, M.prec)).truncate_abs(abs_target);
}

}  // namespace lattes
