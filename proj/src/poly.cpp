#include "lattes/poly.hpp"

#include <sstream>

#include "lattes/numutil.hpp"

namespace lattes {

mpz_class content(const int_poly& f) {
    mpz_class g = 0;
    for (const auto& c : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return g;
    }
    return g;
}

int_poly primitive_part(const int_poly& f) {
    if (f.is_zero()) return f;
    mpz_class g = content(f);
    std::vector<mpz_class> r(f.coeffs());
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return int_poly(std::move(r));
}

rat_poly to_rat_poly(const int_poly& f) {
    std::vector<mpq_class> r;
    r.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) r.emplace_back(c);
    return rat_poly(std::move(r));
}

int_poly to_int_poly_primitive(const rat_poly& f) {
    if (f.is_zero()) return int_poly();
    mpz_class den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> r;
    r.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        mpq_class scaled = c * mpq_class(den);
        r.emplace_back(scaled.get_num());
    }
    return primitive_part(int_poly(std::move(r)));
}

std::pair<rat_poly, rat_poly> divmod(const rat_poly& a, const rat_poly& b) {
    if (b.is_zero()) throw precondition_error("polynomial division by zero");
    rat_poly q, r = a;
    const mpq_class inv_lead = mpq_class(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        long k = r.degree() - b.degree();
        mpq_class c = r.lead() * inv_lead;
        rat_poly t = rat_poly::monomial(c, static_cast<std::size_t>(k));
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

int_poly exact_div(const int_poly& a, const int_poly& b) {
    auto [q, r] = divmod(to_rat_poly(a), to_rat_poly(b));
    if (!r.is_zero()) throw precondition_error("exact_div: division not exact");
    std::vector<mpz_class> out;
    out.reserve(q.coeffs().size());
    for (const auto& c : q.coeffs()) {
        if (c.get_den() != 1) throw precondition_error("exact_div: non-integer quotient");
        out.emplace_back(c.get_num());
    }
    return int_poly(std::move(out));
}

int_poly prem(const int_poly& A, const int_poly& B) {
    if (B.is_zero()) throw precondition_error("prem: zero divisor");
    long delta = A.degree() - B.degree();
    if (delta < 0) return A;
    const mpz_class d = B.lead();
    int_poly R = A;
    long e = delta + 1;
    while (!R.is_zero() && R.degree() >= B.degree()) {
        int_poly t = int_poly::monomial(R.lead(), static_cast<std::size_t>(R.degree() - B.degree()));
        R = d * R - t * B;
        --e;
    }
    // bring the implicit factor up to lc(B)^(delta+1)
    mpz_class scale = pow_z(d, static_cast<unsigned long>(e));
    return scale * R;
}

namespace {

mpz_class pow_signed(const mpz_class& b, long e) {
    if (e < 0) throw precondition_error("negative exponent");
    return pow_z(b, static_cast<unsigned long>(e));
}

}  // namespace

mpz_class resultant(const int_poly& f, const int_poly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    long n = f.degree(), m = g.degree();
    if (n == 0 && m == 0) return 1;
    if (n == 0) return pow_signed(f.coeff(0), m);
    if (m == 0) return pow_signed(g.coeff(0), n);

    int_poly A = f, B = g;
    int s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((n & 1) && (m & 1)) s = -s;
    }
    mpz_class ca = content(A), cb = content(B);
    A = primitive_part(A);
    B = primitive_part(B);
    mpz_class t = pow_signed(ca, B.degree()) * pow_signed(cb, A.degree());

    mpz_class gg = 1, h = 1;
    for (;;) {
        long delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        int_poly R = prem(A, B);
        A = B;
        mpz_class divisor = gg * pow_signed(h, delta);
        if (R.is_zero()) return 0;
        std::vector<mpz_class> rc(R.coeffs());
        for (auto& c : rc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        B = int_poly(std::move(rc));
        gg = A.lead();
        if (delta > 0) {
            mpz_class num = pow_signed(gg, delta);
            mpz_class den = pow_signed(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (B.degree() == 0) break;
    }
    long q = A.degree();
    mpz_class num = pow_signed(B.coeff(0), q);
    mpz_class den = pow_signed(h, q - 1);
    mpz_class hf;
    mpz_divexact(hf.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return s * t * hf;
}

mpz_class discriminant(const int_poly& f) {
    long d = f.degree();
    if (d < 1) throw precondition_error("discriminant: degree >= 1 required");
    mpz_class r = resultant(f, f.derivative());
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), r.get_mpz_t(), f.lead().get_mpz_t());
    if (((d * (d - 1)) / 2) & 1) out = -out;
    return out;
}

int_poly poly_gcd(const int_poly& f, const int_poly& g) {
    if (f.is_zero() && g.is_zero()) return int_poly();
    if (f.is_zero()) return primitive_part(g).lead() > 0 ? primitive_part(g) : -primitive_part(g);
    if (g.is_zero()) return primitive_part(f).lead() > 0 ? primitive_part(f) : -primitive_part(f);

    int_poly A = primitive_part(f), B = primitive_part(g);
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero() && B.degree() > 0) {
        int_poly R = primitive_part(prem(A, B));
        A = B;
        B = R;
    }
    int_poly out = B.is_zero() ? A : int_poly{1};
    mpz_class cf = content(f), cg = content(g), c;
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    out = c * out;
    if (out.lead() < 0) out = -out;
    return out;
}

bool is_squarefree(const int_poly& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

int_poly squarefree_part(const int_poly& f) {
    if (f.is_zero()) throw precondition_error("squarefree_part of zero polynomial");
    if (f.degree() == 0) return int_poly{1};
    int_poly g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) return primitive_part(f);
    return primitive_part(exact_div(primitive_part(f), g));
}

std::string poly_str(const int_poly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = f.degree(); i >= 0; --i) {
        mpz_class c = f.coeff(i);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        mpz_class a = abs(c);
        bool unit = (a == 1);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (!unit) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace lattes
