#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "lattes/error.hpp"
#include "lattes/numutil.hpp"

namespace lattes {

/**
 * Element of Q_p with explicit precision tracking.
 *
 * A nonzero element is stored as unit * p^val with p not dividing unit and
 * unit reduced mod p^prec: the value is known mod p^(val+prec) and prec >= 1.
 * The "zero at precision" element (unit == 0, prec == 0) represents any value
 * of valuation >= val.  Arithmetic never claims more precision than the
 * inputs justify.
 */
class padic_number {
    long p_ = 0;
    long val_ = 0;
    long prec_ = 0;     // relative precision; 0 iff zero-at-precision
    mpz_class unit_ = 0;

    padic_number(long p, long val, long prec, mpz_class unit)
        : p_(p), val_(val), prec_(prec), unit_(std::move(unit)) {}

    static padic_number normalize(long p, long val_base, const mpz_class& value, long digits);

public:
    padic_number() = default;

    static padic_number zero_at(long p, long abs_prec);

    // exact rational, stored with the given relative precision (x != 0)
    static padic_number from_rational(const mpq_class& x, long p, long rel_prec);

    // exact rational with a target absolute precision (zero allowed)
    static padic_number from_rational_abs(const mpq_class& x, long p, long abs_prec);

    long prime() const { return p_; }
    bool is_zero_at_precision() const { return prec_ == 0; }

    // valuation of a certified-nonzero element
    long valuation() const {
        if (is_zero_at_precision())
            throw precision_error("valuation of zero-at-precision element");
        return val_;
    }

    // the element is O(p^k) for every k <= valuation_lower_bound()
    long valuation_lower_bound() const { return val_; }
    long rel_prec() const { return prec_; }
    long abs_prec() const { return val_ + prec_; }
    const mpz_class& unit() const { return unit_; }

    padic_number truncate_abs(long abs_prec) const;

    friend padic_number operator+(const padic_number& x, const padic_number& y);
    friend padic_number operator-(const padic_number& x, const padic_number& y);
    friend padic_number operator*(const padic_number& x, const padic_number& y);
    friend padic_number operator/(const padic_number& x, const padic_number& y);
    padic_number operator-() const;

    padic_number inverse() const;
    padic_number pow(long n) const;

    // multiply by an exact nonzero rational (no precision loss in digits;
    // the absolute precision shifts by vp(c))
    padic_number scale(const mpq_class& c) const;

    // the canonical integer representative of value / p^val in [0, p^prec)
    // decides congruence mod p^m; throws if the stored precision cannot
    std::string str() const;

    friend bool congruent_mod(const padic_number& x, const padic_number& y, long abs_prec);
};

// true iff x == y mod p^abs_prec, certified; precision_error when undecidable
bool congruent_mod(const padic_number& x, const padic_number& y, long abs_prec);

}  // namespace lattes
