#include "lattes/heights.hpp"

#include <cmath>
#include <unordered_set>

#include "lattes/numutil.hpp"

namespace lattes {

double naive_height(const proj_point& P) {
    mpz_class m = abs(P.a) > abs(P.b) ? abs(P.a) : abs(P.b);
    if (m == 1) return 0.0;
    return log_abs(m);
}

namespace {

// homogeneous coefficient vectors of length d+1 (index = exponent of a)
struct form_pair {
    long d = 0;
    std::vector<mpz_class> F, G;
};

form_pair homogenize(const lattes_map& L) {
    form_pair out;
    out.d = L.degree();
    out.F.assign(static_cast<std::size_t>(out.d) + 1, mpz_class(0));
    out.G.assign(static_cast<std::size_t>(out.d) + 1, mpz_class(0));
    for (long i = 0; i <= L.num.degree(); ++i) out.F[static_cast<std::size_t>(i)] = L.num.coeff(i);
    for (long i = 0; i <= L.den.degree(); ++i) out.G[static_cast<std::size_t>(i)] = L.den.coeff(i);
    return out;
}

// Solve M u = rhs over Q by fraction-preserving Gaussian elimination;
// also returns det(M).  M is square, columns of u match rhs columns.
struct linear_solution {
    mpq_class det;
    std::vector<std::vector<mpq_class>> cols;  // one solution column per rhs
};

linear_solution solve_rational(std::vector<std::vector<mpq_class>> M,
                               std::vector<std::vector<mpq_class>> rhs_cols) {
    const std::size_t n = M.size();
    mpq_class det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) {
            det = 0;
            break;
        }
        if (piv != col) {
            std::swap(M[piv], M[col]);
            for (auto& r : rhs_cols) std::swap(r[piv], r[col]);
            det = -det;
        }
        det *= M[col][col];
        mpq_class inv = 1 / M[col][col];
        for (std::size_t j = col; j < n; ++j) M[col][j] *= inv;
        for (auto& r : rhs_cols) r[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || M[row][col] == 0) continue;
            mpq_class f = M[row][col];
            for (std::size_t j = col; j < n; ++j) M[row][j] -= f * M[col][j];
            for (auto& r : rhs_cols) r[row] -= f * r[col];
        }
    }
    if (det == 0) throw precondition_error("degenerate homogeneous pair (zero resultant)");
    for (auto& r : rhs_cols)
        for (auto& x : r) x.canonicalize();
    det.canonicalize();
    return {det, std::move(rhs_cols)};
}

}  // namespace

comparison_constant height_comparison_constant(const lattes_map& L) {
    form_pair fp = homogenize(L);
    const long d = fp.d;
    if (d < 2) throw precondition_error("height comparison: degree >= 2 required");

    // upper half: |F(a,b)| <= (sum |coeffs|) max(|a|,|b|)^d at every place
    mpz_class sF = 0, sG = 0;
    for (const auto& c : fp.F) sF += abs(c);
    for (const auto& c : fp.G) sG += abs(c);
    double upper = log_abs(sF > sG ? sF : sG);

    // lower half: integer cofactors A,B of degree d-1 with
    // A F + B G = det * a^(2d-1)  and the b-power twin
    const std::size_t n = static_cast<std::size_t>(2 * d);
    std::vector<std::vector<mpq_class>> M(n, std::vector<mpq_class>(n, mpq_class(0)));
    // unknowns: A_0..A_{d-1}, B_0..B_{d-1} (A_i multiplies a^i b^{d-1-i})
    // row j: coefficient of a^j b^{2d-1-j}
    for (long i = 0; i < d; ++i)
        for (long k = 0; k <= d; ++k) {
            M[static_cast<std::size_t>(i + k)][static_cast<std::size_t>(i)] +=
                mpq_class(fp.F[static_cast<std::size_t>(k)]);
            M[static_cast<std::size_t>(i + k)][static_cast<std::size_t>(d + i)] +=
                mpq_class(fp.G[static_cast<std::size_t>(k)]);
        }
    std::vector<std::vector<mpq_class>> rhs(2, std::vector<mpq_class>(n, mpq_class(0)));
    rhs[0][n - 1] = 1;  // a^(2d-1)
    rhs[1][0] = 1;      // b^(2d-1)
    linear_solution sol = solve_rational(std::move(M), std::move(rhs));
    mpz_class res_num = sol.det.get_num();
    if (sol.det.get_den() != 1)
        throw precondition_error("height comparison: non-integer determinant");

    // cofactors: det * u is the integer adjugate column
    mpz_class K[2], gcds[2];
    for (int side = 0; side < 2; ++side) {
        mpz_class sum = 0, g = abs(res_num);
        for (const auto& x : sol.cols[static_cast<std::size_t>(side)]) {
            mpq_class scaled = x * mpq_class(res_num);
            scaled.canonicalize();
            if (scaled.get_den() != 1)
                throw precondition_error("height comparison: non-integer cofactor");
            mpz_class v = abs(mpz_class(scaled.get_num()));
            sum += v;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
        K[side] = sum;
        gcds[side] = g;
    }
    mpz_class g0;
    mpz_gcd(g0.get_mpz_t(), gcds[0].get_mpz_t(), gcds[1].get_mpz_t());
    mpz_class kmax = K[0] > K[1] ? K[0] : K[1];
    double lower = log_abs(kmax) - log_abs(g0);

    comparison_constant out;
    out.upper = upper;
    out.lower = lower;
    out.value = std::max(upper, lower);
    out.homog_resultant = res_num;
    return out;
}

height_estimate canonical_height(const lattes_map& L, const proj_point& P, double tol,
                                 long bit_budget) {
    if (!(tol > 0)) throw precondition_error("canonical_height: tol > 0 required");
    const double d = static_cast<double>(L.degree());
    const double C = height_comparison_constant(L).value;

    long steps = 0;
    double bound = C;
    while (bound > tol) {
        bound /= d;
        ++steps;
    }

    proj_point cur = P;
    double scale = 1.0;
    std::unordered_set<std::string> seen;
    bool track_cycles = true;
    for (long k = 1; k <= steps; ++k) {
        if (track_cycles) {
            if (bit_size(cur.a) + bit_size(cur.b) > 4096) {
                track_cycles = false;  // grown orbits cannot return
            } else if (!seen.insert(to_string(cur)).second) {
                return {0.0, 0.0, k - 1};  // revisit: preperiodic, hhat = 0 exactly
            }
        }
        cur = apply_map(L, cur);
        scale *= d;
        if (bit_size(cur.a) > bit_budget || bit_size(cur.b) > bit_budget) {
            double v = naive_height(cur) / scale;
            double b = C / scale;
            throw resource_error("canonical_height: coefficient bit budget exceeded", v, b, k);
        }
    }
    return {naive_height(cur) / scale, C / scale, steps};
}

preperiodicity_report is_preperiodic(const lattes_map& L, const proj_point& P, long cap) {
    const double d = static_cast<double>(L.degree());
    const double C = height_comparison_constant(L).value;
    const double threshold = C / (d - 1.0) + 1.0;

    std::vector<proj_point> orbit;
    std::unordered_set<std::string> seen;
    proj_point cur = P;
    for (long k = 0; k <= cap; ++k) {
        double h = naive_height(cur);
        if (h > threshold) {
            preperiodicity_report r;
            r.status = orbit_status::wandering;
            r.certificate_index = k;
            r.certificate_height = h;
            r.certificate_threshold = threshold;
            return r;
        }
        std::string key = to_string(cur);
        if (!seen.insert(key).second) {
            long first = 0;
            while (orbit[static_cast<std::size_t>(first)] != cur) ++first;
            preperiodicity_report r;
            r.status = orbit_status::preperiodic;
            r.tail = first;
            r.cycle = k - first;
            return r;
        }
        orbit.push_back(cur);
        cur = apply_map(L, cur);
    }
    preperiodicity_report r;
    r.status = orbit_status::inconclusive_wandering;
    r.certificate_index = cap;
    r.certificate_threshold = threshold;
    return r;
}

}  // namespace lattes
