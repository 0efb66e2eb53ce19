#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "lattes/error.hpp"

namespace lattes {

/**
 * Dense univariate polynomial over a commutative ring T, constant term
 * first.  The zero polynomial has an empty coefficient vector and degree -1.
 */
template <typename T>
class poly {
    std::vector<T> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

public:
    poly() = default;
    poly(std::initializer_list<T> cs) : c_(cs) { trim(); }
    explicit poly(std::vector<T> cs) : c_(std::move(cs)) { trim(); }

    static poly monomial(const T& a, std::size_t k) {
        std::vector<T> v(k + 1, T(0));
        v[k] = a;
        return poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }

    T coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return T(0);
        return c_[i];
    }

    const T& lead() const {
        if (c_.empty()) throw precondition_error("lead of zero polynomial");
        return c_.back();
    }

    friend bool operator==(const poly& a, const poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const poly& a, const poly& b) { return !(a == b); }

    friend poly operator+(const poly& a, const poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return poly(std::move(r));
    }

    friend poly operator-(const poly& a, const poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return poly(std::move(r));
    }

    poly operator-() const {
        std::vector<T> r(c_);
        for (auto& x : r) x = -x;
        return poly(std::move(r));
    }

    friend poly operator*(const poly& a, const poly& b) {
        if (a.is_zero() || b.is_zero()) return poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return poly(std::move(r));
    }

    friend poly operator*(const T& s, const poly& a) {
        std::vector<T> r(a.c_);
        for (auto& x : r) x *= s;
        return poly(std::move(r));
    }

    poly derivative() const {
        if (c_.size() <= 1) return poly();
        std::vector<T> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = T(static_cast<long>(i)) * c_[i];
        return poly(std::move(r));
    }

    template <typename U>
    U evaluate(const U& x) const {
        U r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + U(*it);
        return r;
    }

    // multiplicity of the root at 0
    long order_at_zero() const {
        if (is_zero()) return 0;
        long k = 0;
        while (c_[static_cast<std::size_t>(k)] == 0) ++k;
        return k;
    }
};

using int_poly = poly<mpz_class>;
using rat_poly = poly<mpq_class>;

template <typename T>
poly<T> compose(const poly<T>& f, const poly<T>& g) {
    poly<T> r;
    const auto& cs = f.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) r = r * g + poly<T>{*it};
    return r;
}

// gcd of |coefficients|; 0 for the zero polynomial
mpz_class content(const int_poly& f);

// f / content(f); keeps the sign of the leading coefficient
int_poly primitive_part(const int_poly& f);

rat_poly to_rat_poly(const int_poly& f);

// clears denominators and removes integer content (sign of lead kept)
int_poly to_int_poly_primitive(const rat_poly& f);

// field division: (quotient, remainder) with deg r < deg b
std::pair<rat_poly, rat_poly> divmod(const rat_poly& a, const rat_poly& b);

// exact division over Z; throws if not exact
int_poly exact_div(const int_poly& a, const int_poly& b);

// pseudo-remainder: lc(B)^(deg A - deg B + 1) * A = Q*B + R
int_poly prem(const int_poly& A, const int_poly& B);

// Res(f, g), Sylvester convention, via the subresultant PRS
mpz_class resultant(const int_poly& f, const int_poly& g);

// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f); pre: deg f >= 1
mpz_class discriminant(const int_poly& f);

// primitive gcd with positive leading coefficient
int_poly poly_gcd(const int_poly& f, const int_poly& g);

bool is_squarefree(const int_poly& f);

// f / gcd(f, f'), primitive; pre: f != 0
int_poly squarefree_part(const int_poly& f);

// human-readable form, e.g. "x^4 - 8*x"
std::string poly_str(const int_poly& f, const std::string& var = "x");

}  // namespace lattes
