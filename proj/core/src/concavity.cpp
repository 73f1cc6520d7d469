#include "sparsepoly/concavity.hpp"

#include "sparsepoly/family.hpp"

namespace sparsepoly {

SparsePoly F_poly(long m, long n) {
    return F_k_poly(m, n, 1);
}

SparsePoly F_k_poly(long m, long n, long k) {
    if (m < 2 || k < 1 || n - k < 0)
        throw std::invalid_argument("F_k_poly needs m >= 2, k >= 1, n >= k");
    SparsePoly num = sub(mul(f_poly(m, n), f_poly(m, n)),
                         mul(f_poly(m, n - k), f_poly(m, n + k)));
    if (num.is_zero()) return {};
    return div_one_minus_z(num);
}

SparsePoly G_poly(long m, long n, long k) {
    if (m < 2 || k < 1 || n < 1 || n - k < 0)
        throw std::invalid_argument("G_poly needs m >= 2, n,k >= 1, n >= k");
    SparsePoly num = sub(f_poly(m, 2 * n), mul(f_poly(m, n - k), f_poly(m, n + k)));
    if (num.is_zero()) return {};
    return negate(div_one_minus_z(num));  // quotient by (z-1)
}

GnuDecomposition g_nu_decomposition(long m, long n, long nu) {
    if (m < 2 || n < m || nu < 0 || nu > 2 * n)
        throw std::invalid_argument("g_nu_decomposition needs m >= 2, n >= m, 0 <= nu <= 2n");
    GnuDecomposition d;

    std::vector<Term> terms;
    for (long j = 0; j <= nu; ++j) {
        Coefficient c = binomial(n, j) * binomial(n, nu - j) -
                        binomial(n - 1, j) * binomial(n + 1, nu - j);
        if (c != 0)
            terms.push_back(Term{binomial(j, m) + binomial(nu - j, m), c});
    }
    d.g = SparsePoly::from_terms(std::move(terms));
    d.vanishes_at_one = (d.g.coefficient_sum() == 0);

    d.a.resize(nu + 1);
    for (long j = 0; j <= nu; ++j) {
        d.a[j] = 2 * binomial(n, j) * binomial(n, nu - j) -
                 binomial(n - 1, j) * binomial(n + 1, nu - j) -
                 binomial(n + 1, j) * binomial(n - 1, nu - j);
    }
    for (long j = 0; j <= nu; ++j)
        if (d.a[j] != d.a[nu - j]) d.symmetric = false;

    // closed form: a_{nu,j} = C(n,j) C(n,nu-j) *
    //   (2(2n+1)j(nu-j) - (n+1)nu(nu-1)) / (n (n+1-nu+j) (n+1-j));
    // skipped where the denominator vanishes (the binomial factor is 0 there)
    for (long j = 0; j <= nu; ++j) {
        Coefficient den = Coefficient(n) * (n + 1 - nu + j) * (n + 1 - j);
        if (den == 0) continue;
        Coefficient numf = Coefficient(2) * (2 * n + 1) * j * (nu - j) -
                           Coefficient(n + 1) * nu * (nu - 1);
        Rational val = Rational(binomial(n, j) * binomial(n, nu - j) * numf) /
                       Rational(den);
        if (val != Rational(d.a[j])) d.closed_form_ok = false;
    }

    // sign pattern over j = 0..floor(nu/2): leading zeros, then negatives,
    // at most one zero, then nonnegatives
    long half = nu / 2;
    long j = 0;
    while (j <= half && d.a[j] == 0) ++j;
    long neg_end = j;
    while (neg_end <= half && d.a[neg_end] < 0) ++neg_end;
    d.sign_change_index = neg_end - 1;
    long zeros = 0;
    for (long i = neg_end; i <= half; ++i) {
        if (d.a[i] < 0) d.single_sign_change = false;
        if (d.a[i] == 0) ++zeros;
    }
    if (zeros > 1 && nu >= m) d.single_sign_change = false;
    return d;
}

bool g_nu_reassembles(long m, long n) {
    SparsePoly total;
    for (long nu = 0; nu <= 2 * n; ++nu)
        total = add(total, g_nu_decomposition(m, n, nu).g);
    SparsePoly expected = mul(sub(SparsePoly::constant(1), SparsePoly::monomial(1, 1)),
                              F_poly(m, n));
    return total == expected;
}

Coefficient S_value(long m, long n) {
    if (m < 2 || n < 1) throw std::invalid_argument("S_value needs m >= 2, n >= 1");
    auto partial = [m](long nn) {
        Coefficient s = 0;
        for (long j = 0; j <= m - 1; ++j) s += binomial(nn, j);
        return s;
    };
    return partial(n) * partial(n) - partial(n - 1) * partial(n + 1);
}

namespace {

// dense integer polynomials in one variable
using ZPoly = std::vector<Coefficient>;

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

ZPoly zp_scale(const Coefficient& c, const ZPoly& a) {
    ZPoly r = a;
    for (auto& x : r) x *= c;
    if (c == 0) r.clear();
    return r;
}

// multiply by (x + a)
ZPoly zp_mul_x_plus(const ZPoly& p, const Coefficient& a) {
    if (p.empty()) return {};
    ZPoly r(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i + 1] += p[i];
        r[i] += a * p[i];
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Coefficient zp_eval(const ZPoly& p, const Coefficient& x) {
    Coefficient v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

}  // namespace

std::vector<Coefficient> s_sequence(long m) {
    if (m < 2) throw std::invalid_argument("s_sequence needs m >= 2");
    ZPoly s2{Coefficient(1)};
    if (m == 2) return s2;
    ZPoly s3{Coefficient(2), Coefficient(1)};  // n + 2
    if (m == 3) return s3;
    ZPoly prev2 = s2, prev1 = s3;
    for (long mm = 4; mm <= m; ++mm) {
        // s_m = (n+2) s_{m-1} - (m-3)(n - m + 2) s_{m-2}
        ZPoly a = zp_mul_x_plus(prev1, 2);
        ZPoly b = zp_scale(Coefficient(-(mm - 3)), zp_mul_x_plus(prev2, 2 - mm));
        ZPoly cur = zp_add(a, b);
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

bool s_sequence_consistent(long m) {
    ZPoly s = s_sequence(m);
    Coefficient factor = m - 1;
    {
        Coefficient f2;
        mpz_fac_ui(f2.get_mpz_t(), static_cast<unsigned long>(m - 2));
        factor *= f2 * f2;
    }
    for (long n = m + 1; n <= 3 * m; ++n) {
        Coefficient lhs = zp_eval(s, Coefficient(n));
        for (long j = 1; j <= m - 2; ++j) lhs *= (n - j);
        if (lhs != factor * S_value(m, n)) return false;
    }
    return true;
}

std::vector<Coefficient> g_shifted(long m) {
    if (m < 2) throw std::invalid_argument("g_shifted needs m >= 2");
    ZPoly g2{Coefficient(1)};
    if (m == 2) return g2;
    ZPoly g3{Coefficient(4), Coefficient(1)};  // t + 4
    if (m == 3) return g3;
    ZPoly prev2 = g2, prev1 = g3;
    for (long mm = 4; mm <= m; ++mm) {
        // g_m = (t + 3m - 5) g_{m-1} - 2(m-3)(t + m - 2) g_{m-2}
        ZPoly a = zp_mul_x_plus(prev1, 3 * mm - 5);
        ZPoly b = zp_scale(Coefficient(-2 * (mm - 3)), zp_mul_x_plus(prev2, mm - 2));
        ZPoly cur = zp_add(a, b);
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

GShiftedChecks g_shifted_checks(long m) {
    GShiftedChecks c;
    ZPoly g = g_shifted(m);
    c.degree_ok = (static_cast<long>(g.size()) == m - 1);
    c.monic = !g.empty() && g.back() == 1;
    Coefficient expected_const;
    mpz_fac_ui(expected_const.get_mpz_t(), static_cast<unsigned long>(m - 1));
    mpz_mul_2exp(expected_const.get_mpz_t(), expected_const.get_mpz_t(),
                 static_cast<unsigned long>(m - 2));
    c.constant_ok = !g.empty() && g.front() == expected_const;
    for (const auto& x : g)
        if (x <= 0) c.all_positive = false;
    if (m >= 3) {
        ZPoly gp = g_shifted(m - 1);
        for (long i = 0; i <= m - 3; ++i) {
            Coefficient lo = (i < static_cast<long>(gp.size())) ? gp[i] : Coefficient(0);
            if (!(g[i] > 2 * (m - 2) * lo)) c.growth_ok = false;
        }
    }
    return c;
}

SparsePoly L_apply(const std::function<SparsePoly(long)>& seq, long n) {
    return sub(mul(seq(n), seq(n)), mul(seq(n - 1), seq(n + 1)));
}

std::vector<ConcavityCertificate> conjecture39_scan(long n_max, long k_max) {
    if (k_max < 1) throw std::invalid_argument("conjecture39_scan needs k_max >= 1");
    std::vector<ConcavityCertificate> out;
    // level 0 is the f_{2,j} table, shared by every k
    std::vector<SparsePoly> level;
    for (long j = 0; j <= n_max + k_max; ++j) level.push_back(f_poly(2, j));
    long lo = 0;
    for (long k = 1; k <= k_max; ++k) {
        std::vector<SparsePoly> next;
        for (std::size_t i = 1; i + 1 < level.size(); ++i)
            next.push_back(sub(mul(level[i], level[i]), mul(level[i - 1], level[i + 1])));
        level = std::move(next);
        ++lo;  // level[i] is now L^k(f_{2, i + lo})
        for (long n = std::max(k, lo); n <= n_max; ++n) {
            const SparsePoly& p = level[n - lo];
            ConcavityCertificate cert;
            cert.object_id = "L^" + std::to_string(k) + "(f_2," + std::to_string(n) + ")";
            if (p.is_zero()) {
                cert.nonneg = true;
                cert.one_minus_z_mult = -1;  // undefined for the zero polynomial
                out.push_back(std::move(cert));
                continue;
            }
            auto [mult, cofactor] = one_minus_z_multiplicity(p);
            cert.one_minus_z_mult = mult;
            for (const auto& t : cofactor.terms()) {
                if (t.coeff < 0) {
                    cert.nonneg = false;
                    cert.first_negative = t;
                    break;
                }
            }
            out.push_back(std::move(cert));
        }
    }
    return out;
}

}  // namespace sparsepoly
