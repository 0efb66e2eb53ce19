#include "lattes/elliptic.hpp"

#include "lattes/numutil.hpp"

namespace lattes {

elliptic_curve make_curve(const mpq_class& a1, const mpq_class& a2, const mpq_class& a3,
                          const mpq_class& a4, const mpq_class& a6) {
    elliptic_curve E{a1, a2, a3, a4, a6};
    if (E.discriminant() == 0) throw precondition_error("singular Weierstrass model");
    return E;
}

mpq_class j_invariant(const elliptic_curve& E) {
    mpq_class d = E.discriminant();
    if (d == 0) throw precondition_error("j_invariant: singular model");
    mpq_class c = E.c4();
    mpq_class j = c * c * c / d;
    j.canonicalize();
    return j;
}

reduction_type classify_reduction(const elliptic_curve& E, long p) {
    auto v = vp(j_invariant(E), p);
    return (v.has_value() && *v < 0) ? reduction_type::tate_degenerate
                                     : reduction_type::potential_good;
}

ec_point<quad_rat> lift_x(const elliptic_curve& E, const mpq_class& x0) {
    // y^2 + (a1 x + a3) y - (x^3 + a2 x^2 + a4 x + a6) = 0
    mpq_class t = E.a1 * x0 + E.a3;
    mpq_class rhs = x0 * x0 * x0 + E.a2 * x0 * x0 + E.a4 * x0 + E.a6;
    mpq_class delta = t * t + 4 * rhs;
    delta.canonicalize();
    // y = (-t + sqrt(delta)) / 2
    quad_rat y(-t / 2, mpq_class(1, 2), delta);
    ec_point<quad_rat> P = ec_point<quad_rat>::affine(quad_rat(x0), y);
    if (!on_curve(E, P)) throw precondition_error("lift_x: internal lift failure");
    return P;
}

division_polys::division_polys(mpq_class A, mpq_class B) : A_(std::move(A)), B_(std::move(B)) {
    e_ = rat_poly{B_, A_, 0, 1};  // x^3 + Ax + B
}

const rat_poly& division_polys::psi(long k) const {
    auto it = tbl_.find(k);
    if (it != tbl_.end()) return it->second;

    rat_poly r;
    if (k == 0) {
        r = rat_poly();
    } else if (k == 1) {
        r = rat_poly{1};
    } else if (k == 2) {
        r = rat_poly{2};
    } else if (k == 3) {
        // 3x^4 + 6Ax^2 + 12Bx - A^2
        r = rat_poly{-A_ * A_, 12 * B_, 6 * A_, 0, 3};
    } else if (k == 4) {
        // 4(x^6 + 5Ax^4 + 20Bx^3 - 5A^2x^2 - 4ABx - 8B^2 - A^3)
        r = rat_poly{mpq_class(-32) * B_ * B_ - 4 * A_ * A_ * A_,
                     mpq_class(-16) * A_ * B_,
                     mpq_class(-20) * A_ * A_,
                     80 * B_,
                     20 * A_,
                     0,
                     4};
    } else if (k & 1) {
        long j = (k - 1) / 2;
        rat_poly t1 = psi(j + 2) * psi(j) * psi(j) * psi(j);
        rat_poly t2 = psi(j - 1) * psi(j + 1) * psi(j + 1) * psi(j + 1);
        // even-index factors carry an implicit y; y^4 = e^2
        if (j % 2 == 0)
            r = t1 * (e_ * e_) - t2;
        else
            r = t1 - t2 * (e_ * e_);
    } else {
        long j = k / 2;
        rat_poly t1 = psi(j + 2) * psi(j - 1) * psi(j - 1);
        rat_poly t2 = psi(j - 2) * psi(j + 1) * psi(j + 1);
        r = mpq_class(1, 2) * (psi(j) * (t1 - t2));
    }
    return tbl_.emplace(k, std::move(r)).first->second;
}

std::pair<rat_poly, rat_poly> division_polys::multiplication_x(long m) const {
    if (m < 2) throw precondition_error("division_polys: m >= 2 required");
    rat_poly S, P;
    if (m & 1) {
        S = psi(m) * psi(m);
        P = e_ * (psi(m + 1) * psi(m - 1));
    } else {
        S = e_ * (psi(m) * psi(m));
        P = psi(m + 1) * psi(m - 1);
    }
    rat_poly phi = rat_poly{0, 1} * S - P;
    if (phi.degree() != m * m || S.degree() != m * m - 1)
        throw precondition_error("division_polys: degree contract violated");
    return {phi, S};
}

lattes_map make_lattes_map(const elliptic_curve& E, long m) {
    if (m == -1 || m == 0 || m == 1)
        throw precondition_error("lattes map requires |m| >= 2");
    if (m < 0) m = -m;
    if (E.discriminant() == 0) throw precondition_error("singular Weierstrass model");

    // short coordinates: u = 36 x + 3 b2, v^2 = u^3 + A u + B
    mpq_class A = -27 * E.c4();
    mpq_class B = -54 * E.c6();
    mpq_class shift = 3 * E.b2();

    division_polys dp(A, B);
    auto [phi, S] = dp.multiplication_x(m);

    rat_poly sigma{shift, 36};  // u(x)
    rat_poly phi_c = compose(phi, sigma);
    rat_poly S_c = compose(S, sigma);
    // f(x) = (f_short(u(x)) - shift) / 36
    rat_poly num_rat = phi_c - shift * S_c;
    rat_poly den_rat = mpq_class(36) * S_c;

    // joint denominator clearing and content removal keep the pair projective
    mpz_class den_lcm = 1;
    for (const auto& c : num_rat.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& c : den_rat.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    auto scale_up = [&](const rat_poly& f) {
        std::vector<mpz_class> out;
        out.reserve(f.coeffs().size());
        for (const auto& c : f.coeffs()) {
            mpq_class s = c * mpq_class(den_lcm);
            out.emplace_back(s.get_num());
        }
        return int_poly(std::move(out));
    };
    int_poly N = scale_up(num_rat), D = scale_up(den_rat);
    mpz_class cn = content(N), cd = content(D), g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g > 1) {
        std::vector<mpz_class> nn(N.coeffs()), dd(D.coeffs());
        for (auto& c : nn) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        for (auto& c : dd) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        N = int_poly(std::move(nn));
        D = int_poly(std::move(dd));
    }
    if (N.lead() < 0) {
        N = -N;
        D = -D;
    }

    if (poly_gcd(N, D).degree() != 0)
        throw precondition_error("lattes map: numerator and denominator share a factor");
    if (N.degree() != m * m || D.degree() >= N.degree())
        throw precondition_error("lattes map: degree contract violated");

    lattes_map L;
    L.curve = E;
    L.m = m;
    L.num = std::move(N);
    L.den = std::move(D);
    L.conj_scale = 36;
    L.conj_shift = shift;
    return L;
}

proj_point apply_map(const lattes_map& L, const proj_point& P) {
    long d = L.degree();
    // homogeneous evaluation with precomputed powers of b
    std::vector<mpz_class> bp(static_cast<std::size_t>(d) + 1);
    bp[0] = 1;
    for (long i = 1; i <= d; ++i) bp[static_cast<std::size_t>(i)] = bp[static_cast<std::size_t>(i - 1)] * P.b;
    auto eval_form = [&](const int_poly& f) {
        mpz_class r = 0;
        for (long i = f.degree(); i >= 0; --i) {
            if (i == f.degree())
                r = f.coeff(i) * bp[static_cast<std::size_t>(d - i)];
            else
                r = r * P.a + f.coeff(i) * bp[static_cast<std::size_t>(d - i)];
        }
        return r;
    };
    mpz_class fn = eval_form(L.num);
    mpz_class fd = eval_form(L.den);
    return reduce_proj(fn, fd);
}

bool check_lattes_commutes(const lattes_map& L, const std::vector<curve_point>& samples) {
    for (const auto& P : samples) {
        if (!on_curve(L.curve, P)) throw precondition_error("sample point not on the curve");
        proj_point lhs = apply_map(L, x_coordinate(P));
        proj_point rhs = x_coordinate(ec_multiply(L.curve, P, L.m));
        if (lhs != rhs) return false;
    }
    return true;
}

bool check_lattes_commutes_x(const lattes_map& L, const mpq_class& x0) {
    ec_point<quad_rat> P = lift_x(L.curve, x0);
    ec_point<quad_rat> mP = ec_multiply(L.curve, P, L.m);
    proj_point lhs = apply_map(L, proj_from_rational(x0));
    proj_point rhs;
    if (mP.infinity) {
        rhs = proj_infinity();
    } else {
        // x([m]P) is Galois-stable, hence rational
        rhs = proj_from_rational(mP.x.as_rational());
    }
    return lhs == rhs;
}

}  // namespace lattes
