#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "lattes/error.hpp"
#include "lattes/poly.hpp"
#include "lattes/proj.hpp"

namespace lattes {

/**
 * Exact arithmetic in Q(sqrt(delta)) as a + b*sqrt(delta).  Purely rational
 * values carry delta = 0 and combine with any extension; mixing two distinct
 * nonzero deltas is rejected.  Used to run the group law on points with
 * rational x-coordinate and irrational y.
 */
class quad_rat {
    mpq_class a_, b_, delta_;

    static mpq_class merge_delta(const quad_rat& x, const quad_rat& y) {
        bool xq = (x.b_ == 0), yq = (y.b_ == 0);
        if (xq && yq) return x.delta_ != 0 ? x.delta_ : y.delta_;
        if (xq) return y.delta_;
        if (yq) return x.delta_;
        if (x.delta_ != y.delta_) throw precondition_error("quad_rat: mixed extensions");
        return x.delta_;
    }

public:
    quad_rat() : a_(0), b_(0), delta_(0) {}
    quad_rat(const mpq_class& r) : a_(r), b_(0), delta_(0) {}  // NOLINT(google-explicit-constructor)
    quad_rat(long r) : a_(r), b_(0), delta_(0) {}               // NOLINT(google-explicit-constructor)
    quad_rat(mpq_class a, mpq_class b, mpq_class delta)
        : a_(std::move(a)), b_(std::move(b)), delta_(std::move(delta)) {
        if (b_ == 0) delta_ = 0;
    }

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& surd_part() const { return b_; }
    bool is_rational() const { return b_ == 0; }

    mpq_class as_rational() const {
        if (b_ != 0) throw precondition_error("quad_rat: value is not rational");
        return a_;
    }

    friend bool operator==(const quad_rat& x, const quad_rat& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.delta_ == y.delta_);
    }
    friend bool operator!=(const quad_rat& x, const quad_rat& y) { return !(x == y); }
    friend bool operator==(const quad_rat& x, long v) { return x.b_ == 0 && x.a_ == v; }

    friend quad_rat operator+(const quad_rat& x, const quad_rat& y) {
        return quad_rat(x.a_ + y.a_, x.b_ + y.b_, merge_delta(x, y));
    }
    friend quad_rat operator-(const quad_rat& x, const quad_rat& y) {
        return quad_rat(x.a_ - y.a_, x.b_ - y.b_, merge_delta(x, y));
    }
    quad_rat operator-() const { return quad_rat(-a_, -b_, delta_); }

    friend quad_rat operator*(const quad_rat& x, const quad_rat& y) {
        mpq_class d = merge_delta(x, y);
        return quad_rat(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
    }

    friend quad_rat operator/(const quad_rat& x, const quad_rat& y) {
        if (y.a_ == 0 && y.b_ == 0) throw precondition_error("quad_rat: division by zero");
        mpq_class d = merge_delta(x, y);
        mpq_class norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
        if (norm == 0) throw precondition_error("quad_rat: division by zero divisor (delta square)");
        quad_rat conj(y.a_, -y.b_, d);
        quad_rat num = x * conj;
        return quad_rat(num.a_ / norm, num.b_ / norm, d);
    }
};

/**
 * Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
 * over Q with nonzero discriminant.
 */
struct elliptic_curve {
    mpq_class a1, a2, a3, a4, a6;

    mpq_class b2() const { return a1 * a1 + 4 * a2; }
    mpq_class b4() const { return 2 * a4 + a1 * a3; }
    mpq_class b6() const { return a3 * a3 + 4 * a6; }
    mpq_class b8() const {
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    }
    mpq_class c4() const { return b2() * b2() - 24 * b4(); }
    mpq_class c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
    mpq_class discriminant() const {
        mpq_class B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
    }

    friend bool operator==(const elliptic_curve& e, const elliptic_curve& f) {
        return e.a1 == f.a1 && e.a2 == f.a2 && e.a3 == f.a3 && e.a4 == f.a4 && e.a6 == f.a6;
    }
};

elliptic_curve make_curve(const mpq_class& a1, const mpq_class& a2, const mpq_class& a3,
                          const mpq_class& a4, const mpq_class& a6);

// c4^3 / Delta; rejects singular models
mpq_class j_invariant(const elliptic_curve& E);

enum class reduction_type { tate_degenerate, potential_good };

// tate_degenerate iff v_p(j) < 0
reduction_type classify_reduction(const elliptic_curve& E, long p);

// point over a field F (F = mpq_class or quad_rat)
template <typename F>
struct ec_point {
    bool infinity = true;
    F x{};
    F y{};

    static ec_point at_infinity() { return ec_point{}; }
    static ec_point affine(F px, F py) { return ec_point{false, std::move(px), std::move(py)}; }

    friend bool operator==(const ec_point& p, const ec_point& q) {
        if (p.infinity || q.infinity) return p.infinity == q.infinity;
        return p.x == q.x && p.y == q.y;
    }
};

using curve_point = ec_point<mpq_class>;

template <typename F>
bool on_curve(const elliptic_curve& E, const ec_point<F>& P) {
    if (P.infinity) return true;
    F lhs = P.y * P.y + F(E.a1) * P.x * P.y + F(E.a3) * P.y;
    F rhs = P.x * P.x * P.x + F(E.a2) * P.x * P.x + F(E.a4) * P.x + F(E.a6);
    return lhs == rhs;
}

template <typename F>
ec_point<F> ec_neg(const elliptic_curve& E, const ec_point<F>& P) {
    if (P.infinity) return P;
    return ec_point<F>::affine(P.x, -P.y - F(E.a1) * P.x - F(E.a3));
}

// chord-tangent law on the long Weierstrass model
template <typename F>
ec_point<F> ec_add(const elliptic_curve& E, const ec_point<F>& P, const ec_point<F>& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    F a1(E.a1), a2(E.a2), a3(E.a3), a4(E.a4), a6(E.a6);
    if (P.x == Q.x) {
        if (P.y + Q.y + a1 * Q.x + a3 == F(mpq_class(0))) return ec_point<F>::at_infinity();
        // same x and not inverses: doubling
        F den = P.y + P.y + a1 * P.x + a3;
        F lambda = (F(mpq_class(3)) * P.x * P.x + F(mpq_class(2)) * a2 * P.x + a4 - a1 * P.y) / den;
        F nu = (-(P.x * P.x * P.x) + a4 * P.x + F(mpq_class(2)) * a6 - a3 * P.y) / den;
        F x3 = lambda * lambda + a1 * lambda - a2 - P.x - Q.x;
        F y3 = -(lambda + a1) * x3 - nu - a3;
        return ec_point<F>::affine(x3, y3);
    }
    F lambda = (Q.y - P.y) / (Q.x - P.x);
    F nu = (P.y * Q.x - Q.y * P.x) / (Q.x - P.x);
    F x3 = lambda * lambda + a1 * lambda - a2 - P.x - Q.x;
    F y3 = -(lambda + a1) * x3 - nu - a3;
    return ec_point<F>::affine(x3, y3);
}

template <typename F>
ec_point<F> ec_multiply(const elliptic_curve& E, const ec_point<F>& P, long m) {
    if (m == 0) return ec_point<F>::at_infinity();
    ec_point<F> base = m < 0 ? ec_neg(E, P) : P;
    unsigned long e = static_cast<unsigned long>(m < 0 ? -m : m);
    ec_point<F> acc = ec_point<F>::at_infinity();
    while (e > 0) {
        if (e & 1) acc = ec_add(E, acc, base);
        e >>= 1;
        if (e) base = ec_add(E, base, base);
    }
    return acc;
}

// x-coordinate in P^1(Q); x(O) = infinity
inline proj_point x_coordinate(const curve_point& P) {
    if (P.infinity) return proj_infinity();
    return proj_from_rational(P.x);
}

/**
 * Lifts a rational x0 to a curve point over Q(sqrt(delta)) where delta is
 * the discriminant of the fibre quadratic; exact even when delta is a
 * rational square or zero.
 */
ec_point<quad_rat> lift_x(const elliptic_curve& E, const mpq_class& x0);

/**
 * Division polynomials of a short model y^2 = x^3 + Ax + B, reduced to
 * polynomials in x.  multiplication_x(m) returns (phi_m, psi_m^2) with
 * x([m]P) = phi_m(x(P)) / psi_m^2(x(P)), deg phi = m^2, deg psi^2 = m^2-1.
 */
class division_polys {
    mpq_class A_, B_;
    rat_poly e_;  // x^3 + Ax + B
    mutable std::map<long, rat_poly> tbl_;

    const rat_poly& psi(long k) const;

public:
    division_polys(mpq_class A, mpq_class B);
    std::pair<rat_poly, rat_poly> multiplication_x(long m) const;
};

/**
 * Lattes map of E and multiplication by m (|m| >= 2): the unique rational
 * map f with f(x(P)) = x([m]P).  Built in short Weierstrass coordinates
 * x_short = 36 x + 3 b2 and conjugated back; depends only on |m|.
 */
struct lattes_map {
    elliptic_curve curve;
    long m = 0;         // stored positive
    int_poly num, den;  // coprime pair, deg num = m^2 > deg den, joint content 1
    mpq_class conj_scale;  // x_short = conj_scale * x + conj_shift
    mpq_class conj_shift;

    long degree() const { return num.degree(); }

    friend bool operator==(const lattes_map& f, const lattes_map& g) {
        return f.num == g.num && f.den == g.den;
    }
};

lattes_map make_lattes_map(const elliptic_curve& E, long m);

// exact image of a point of P^1(Q)
proj_point apply_map(const lattes_map& L, const proj_point& P);

// f(x(P)) == x([m]P) for every sample, exactly
bool check_lattes_commutes(const lattes_map& L, const std::vector<curve_point>& samples);

// same diagram check through the quadratic lift of a rational x-coordinate
bool check_lattes_commutes_x(const lattes_map& L, const mpq_class& x0);

}  // namespace lattes
