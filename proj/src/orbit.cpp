#include "lattes/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lattes/numutil.hpp"

namespace lattes {

orbit_poly::orbit_poly(int_poly f) {
    if (f.degree() < 1) throw precondition_error("orbit_poly: degree >= 1 required");
    if (!is_squarefree(f)) throw precondition_error("orbit_poly: polynomial is not squarefree");
    p_ = primitive_part(std::move(f));
    if (p_.lead() < 0) p_ = -p_;
}

orbit_poly orbit_poly::squarefree_from(const int_poly& f, bool* reduced) {
    if (f.degree() < 1) throw precondition_error("orbit_poly: degree >= 1 required");
    int_poly s = squarefree_part(f);
    if (reduced) *reduced = (s.degree() != f.degree());
    return orbit_poly(std::move(s));
}

std::vector<mpq_class> valuation_spectrum(const orbit_poly& g, long p) {
    if (g.get().coeff(0) == 0)
        throw precondition_error(
            "valuation_spectrum: root at 0 (valuation +inf); not a normalized input shape");
    auto np = newton_polygon::of(g.get(), p);
    auto vals = np.root_valuations();
    std::sort(vals.begin(), vals.end());
    return vals;
}

full_spectrum valuation_spectrum_full(const int_poly& f, long p) {
    if (f.is_zero()) throw precondition_error("valuation_spectrum: zero polynomial");
    auto np = newton_polygon::of(f, p);
    full_spectrum out;
    out.infinite = np.zero_order;
    out.finite = np.root_valuations();
    std::sort(out.finite.begin(), out.finite.end());
    return out;
}

namespace {

// coefficients scaled by a common power of two so the largest is ~1;
// scaling does not move the roots
std::vector<std::complex<double>> scaled_coeffs(const int_poly& f) {
    long emax = std::numeric_limits<long>::min();
    for (const auto& c : f.coeffs()) {
        if (c == 0) continue;
        signed long e = 0;
        mpz_get_d_2exp(&e, c.get_mpz_t());
        emax = std::max<long>(emax, e);
    }
    std::vector<std::complex<double>> out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const mpz_class& c = f.coeffs()[i];
        if (c == 0) continue;
        signed long e = 0;
        double m = mpz_get_d_2exp(&e, c.get_mpz_t());
        out[i] = std::ldexp(m, static_cast<int>(e - emax));
    }
    return out;
}

struct horner_eval {
    std::complex<double> value;
    double magnitude_sum;  // sum |c_k| |z|^k, for the rounding-error bound
};

horner_eval eval_with_bound(const std::vector<std::complex<double>>& c, std::complex<double> z) {
    std::complex<double> r{0.0, 0.0};
    double s = 0.0;
    double az = std::abs(z);
    for (std::size_t i = c.size(); i-- > 0;) {
        r = r * z + c[i];
        s = s * az + std::abs(c[i]);
    }
    return {r, s};
}

std::complex<double> eval_derivative(const std::vector<std::complex<double>>& c,
                                     std::complex<double> z) {
    std::complex<double> r{0.0, 0.0};
    for (std::size_t i = c.size(); i-- > 1;) r = r * z + static_cast<double>(i) * c[i];
    return r;
}

}  // namespace

std::vector<std::complex<double>> complex_roots(const int_poly& f) {
    if (f.degree() < 1) throw precondition_error("complex_roots: degree >= 1 required");
    if (!is_squarefree(f)) throw precondition_error("complex_roots: squarefree input required");

    // pull out the root at zero exactly
    long k0 = f.order_at_zero();  // 0 or 1 for squarefree input
    int_poly g = f;
    if (k0 > 0) {
        std::vector<mpz_class> shifted(f.coeffs().begin() + k0, f.coeffs().end());
        g = int_poly(std::move(shifted));
    }
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(k0), {0.0, 0.0});
    if (g.degree() == 0) return roots;

    const auto c = scaled_coeffs(g);
    const std::size_t n = static_cast<std::size_t>(g.degree());

    // Fujiwara bound on |root|
    double lead = std::abs(c[n]);
    double radius = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double t = std::abs(c[i]) / lead;
        if (i == 0) t *= 0.5;
        radius = std::max(radius, std::pow(t, 1.0 / static_cast<double>(n - i)));
    }
    radius = 2.0 * radius + 1e-12;

    std::vector<std::complex<double>> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        double theta = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n) + 0.41;
        z[i] = std::polar(radius * (0.6 + 0.4 * static_cast<double>(i % 7) / 7.0), theta);
    }

    const int max_iter = 600;
    for (int iter = 0; iter < max_iter; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            auto ev = eval_with_bound(c, z[i]);
            std::complex<double> dp = eval_derivative(c, z[i]);
            if (dp == std::complex<double>{0.0, 0.0}) {
                z[i] += std::complex<double>{1e-7, 2e-7};
                worst = 1.0;
                continue;
            }
            std::complex<double> w = ev.value / dp;
            std::complex<double> s{0.0, 0.0};
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            std::complex<double> corr = w / (1.0 - w * s);
            z[i] -= corr;
            worst = std::max(worst, std::abs(corr) / std::max(1.0, std::abs(z[i])));
        }
        if (worst < 1e-15) break;
    }

    // residual certificate with a first-order rounding bound on the Horner sum
    const double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t i = 0; i < n; ++i) {
        auto ev = eval_with_bound(c, z[i]);
        double dp = std::abs(eval_derivative(c, z[i]));
        double err = (2.0 * static_cast<double>(n) + 2.0) * eps * ev.magnitude_sum;
        double scale = std::max(1.0, std::abs(z[i]));
        if (dp == 0.0 || (std::abs(ev.value) + err) / dp >= 1e-12 * scale)
            throw precision_error("complex_roots: residual certificate failed");
    }

    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

double mahler_height(const int_poly& f) {
    if (f.degree() < 1) throw precondition_error("mahler_height: degree >= 1 required");
    auto roots = complex_roots(f);
    double s = log_abs(f.lead());
    for (const auto& z : roots) {
        double az = std::abs(z);
        if (az > 1.0) s += std::log(az);
    }
    return s / static_cast<double>(f.degree());
}

double mahler_height(const orbit_poly& g) { return mahler_height(g.get()); }

}  // namespace lattes
