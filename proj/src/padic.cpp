#include "lattes/padic.hpp"

#include <sstream>

namespace lattes {

namespace {

mpz_class p_power(long p, long e) {
    if (e < 0) throw precondition_error("p_power: negative exponent");
    return pow_z(mpz_class(p), static_cast<unsigned long>(e));
}

}  // namespace

padic_number padic_number::zero_at(long p, long abs_prec) {
    if (p < 2) throw precondition_error("padic: p must be a prime >= 2");
    return padic_number(p, abs_prec, 0, 0);
}

// value * p^val_base known for `digits` base-p digits starting at p^val_base
padic_number padic_number::normalize(long p, long val_base, const mpz_class& value, long digits) {
    if (digits <= 0) return zero_at(p, val_base);
    mpz_class m = p_power(p, digits);
    mpz_class v = value % m;
    if (v < 0) v += m;
    if (v == 0) return zero_at(p, val_base + digits);
    long k = vp_int(v, p);
    long prec = digits - k;
    mpz_class unit;
    mpz_divexact(unit.get_mpz_t(), v.get_mpz_t(), p_power(p, k).get_mpz_t());
    unit %= p_power(p, prec);
    return padic_number(p, val_base + k, prec, std::move(unit));
}

padic_number padic_number::from_rational(const mpq_class& x, long p, long rel_prec) {
    if (p < 2) throw precondition_error("padic: p must be a prime >= 2");
    if (rel_prec < 1) throw precondition_error("padic: relative precision >= 1 required");
    if (x == 0) throw precondition_error("padic: from_rational needs x != 0 (use zero_at)");
    long vn = vp_int(x.get_num(), p);
    long vd = vp_int(x.get_den(), p);
    mpz_class num = x.get_num() / p_power(p, vn);
    mpz_class den = x.get_den() / p_power(p, vd);
    mpz_class m = p_power(p, rel_prec);
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw precondition_error("padic: denominator not invertible");
    mpz_class unit = (num * dinv) % m;
    if (unit < 0) unit += m;
    return padic_number(p, vn - vd, rel_prec, std::move(unit));
}

padic_number padic_number::from_rational_abs(const mpq_class& x, long p, long abs_prec) {
    if (x == 0) return zero_at(p, abs_prec);
    std::optional<long> v = vp(x, p);
    long rel = abs_prec - *v;
    if (rel < 1) return zero_at(p, abs_prec);
    return from_rational(x, p, rel);
}

padic_number padic_number::truncate_abs(long abs_prec) const {
    if (is_zero_at_precision()) return zero_at(p_, std::min(val_, abs_prec));
    if (abs_prec >= this->abs_prec()) return *this;
    long rel = abs_prec - val_;
    if (rel < 1) return zero_at(p_, abs_prec);
    mpz_class unit = unit_ % p_power(p_, rel);
    return padic_number(p_, val_, rel, std::move(unit));
}

padic_number operator+(const padic_number& x, const padic_number& y) {
    if (x.p_ != y.p_) throw precondition_error("padic: mixed primes");
    long p = x.p_;
    long M = std::min(x.abs_prec(), y.abs_prec());
    if (x.is_zero_at_precision() && y.is_zero_at_precision()) return padic_number::zero_at(p, M);
    if (x.is_zero_at_precision()) return y.truncate_abs(M);
    if (y.is_zero_at_precision()) return x.truncate_abs(M);
    long v0 = std::min(x.val_, y.val_);
    long digits = M - v0;
    if (digits <= 0) return padic_number::zero_at(p, M);
    mpz_class s = x.unit_ * p_power(p, x.val_ - v0) + y.unit_ * p_power(p, y.val_ - v0);
    return padic_number::normalize(p, v0, s, digits);
}

padic_number padic_number::operator-() const {
    if (is_zero_at_precision()) return *this;
    mpz_class m = p_power(p_, prec_);
    mpz_class u = (m - unit_) % m;
    return padic_number(p_, val_, prec_, std::move(u));
}

padic_number operator-(const padic_number& x, const padic_number& y) { return x + (-y); }

padic_number operator*(const padic_number& x, const padic_number& y) {
    if (x.p_ != y.p_) throw precondition_error("padic: mixed primes");
    long p = x.p_;
    if (x.is_zero_at_precision() || y.is_zero_at_precision())
        return padic_number::zero_at(p, x.val_ + y.val_);
    long prec = std::min(x.prec_, y.prec_);
    mpz_class u = (x.unit_ * y.unit_) % p_power(p, prec);
    return padic_number(p, x.val_ + y.val_, prec, std::move(u));
}

padic_number padic_number::inverse() const {
    if (is_zero_at_precision())
        throw precision_error("padic: inverse of zero-at-precision element");
    mpz_class m = p_power(p_, prec_);
    mpz_class u;
    mpz_invert(u.get_mpz_t(), unit_.get_mpz_t(), m.get_mpz_t());
    return padic_number(p_, -val_, prec_, std::move(u));
}

padic_number operator/(const padic_number& x, const padic_number& y) { return x * y.inverse(); }

padic_number padic_number::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    if (is_zero_at_precision()) {
        if (n == 0) throw precondition_error("padic: 0^0 at precision");
        return zero_at(p_, val_ * n);
    }
    padic_number r = padic_number(p_, 0, prec_, 1);
    padic_number b = *this;
    long e = n;
    while (e > 0) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

padic_number padic_number::scale(const mpq_class& c) const {
    if (c == 0) throw precondition_error("padic: scale by zero");
    if (is_zero_at_precision()) return zero_at(p_, val_ + *vp(c, p_));
    long vn = vp_int(c.get_num(), p_);
    long vd = vp_int(c.get_den(), p_);
    mpz_class num = c.get_num() / p_power(p_, vn);
    mpz_class den = c.get_den() / p_power(p_, vd);
    mpz_class m = p_power(p_, prec_);
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    mpz_class u = (unit_ * num % m) * dinv % m;
    if (u < 0) u += m;
    return padic_number(p_, val_ + vn - vd, prec_, std::move(u));
}

std::string padic_number::str() const {
    std::ostringstream os;
    if (is_zero_at_precision()) {
        os << "O(" << p_ << "^" << val_ << ")";
        return os.str();
    }
    os << unit_.get_str();
    if (val_ != 0) os << "*" << p_ << "^" << val_;
    os << " + O(" << p_ << "^" << abs_prec() << ")";
    return os.str();
}

bool congruent_mod(const padic_number& x, const padic_number& y, long abs_prec) {
    padic_number d = x - y;
    if (d.is_zero_at_precision()) {
        if (d.valuation_lower_bound() >= abs_prec) return true;
        throw precision_error("congruent_mod: insufficient precision to decide");
    }
    return d.valuation() >= abs_prec;
}

}  // namespace lattes
