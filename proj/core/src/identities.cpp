#include "sparsepoly/identities.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sparsepoly/series.hpp"

namespace sparsepoly {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not-applicable";
        case Verdict::AmbiguousSupport: return "ambiguous-support";
    }
    return "?";
}

namespace {

using Params = std::map<std::string, std::string>;

IdentityReport passed(std::string id, Params params) {
    return IdentityReport{std::move(id), std::move(params), Verdict::Pass, std::nullopt};
}

IdentityReport failed(std::string id, Params params, Witness w) {
    return IdentityReport{std::move(id), std::move(params), Verdict::Fail, std::move(w)};
}

IdentityReport verdict_report(std::string id, Params params, Verdict v, std::string why) {
    return IdentityReport{std::move(id), std::move(params), v,
                          Witness{std::move(why), "", ""}};
}

// First differing term, as a witness.
std::optional<Witness> diff_polys(const SparsePoly& lhs, const SparsePoly& rhs,
                                  const std::string& where) {
    if (lhs == rhs) return std::nullopt;
    SparsePoly d = sub(lhs, rhs);
    const Exponent& e = d.terms().front().exp;
    return Witness{where + " at z^" + e.get_str(),
                   lhs.coeff_at(e).get_str(), rhs.coeff_at(e).get_str()};
}

IdentityReport compare(std::string id, Params params, const SparsePoly& lhs,
                       const SparsePoly& rhs, const std::string& where) {
    if (auto w = diff_polys(lhs, rhs, where))
        return failed(std::move(id), std::move(params), *w);
    return passed(std::move(id), std::move(params));
}

Coefficient int_pow(long k, long nu) {
    Coefficient r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(nu));
    return r;
}

// sum_k C(n,k) (-1)^k k^nu H_k(z)
SparsePoly alternating_moment_sum(const ExponentRule& rule, long n, long nu) {
    SparsePoly acc;
    for (long k = 0; k <= n; ++k) {
        if (k == 0 && nu > 0) continue;  // 0^nu = 0
        Coefficient c = binomial(n, k) * int_pow(k, nu);
        if (k % 2) c = -c;
        acc = add(acc, scalar_mul(c, H_poly(rule, k)));
    }
    return acc;
}

// Dense polynomials in one rational variable, for interpolation fits.
using QPoly = std::vector<Rational>;  // qp[i] is the coefficient of n^i

QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

QPoly qp_scale(const Rational& c, const QPoly& a) {
    QPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

// multiply by (x - a)
QPoly qp_mul_linear(const QPoly& p, const Rational& a) {
    QPoly r(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i + 1] += p[i];
        r[i] -= a * p[i];
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Rational qp_eval(const QPoly& p, const Rational& x) {
    Rational v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

QPoly lagrange_fit(const std::vector<std::pair<Rational, Rational>>& pts) {
    QPoly acc;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        QPoly basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            basis = qp_mul_linear(basis, pts[j].first);
            denom *= pts[i].first - pts[j].first;
        }
        acc = qp_add(acc, qp_scale(pts[i].second / denom, basis));
    }
    return acc;
}

std::string qp_to_string(const QPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << " + ";
        os << p[i].get_str();
        if (i > 0) os << "*n^" << i;
    }
    return os.str();
}

}  // namespace

IdentityReport check_gf(const ExponentRule& rule, long N) {
    Params params{{"rule", rule.to_string()}, {"N", std::to_string(N)}};
    // right side: sum_j z^{h_j} t^j / (1-t)^{j+1}, expanded with series
    // arithmetic and collected as coefficients of t^n
    TruncatedSeries geom = TruncatedSeries::geometric(N);
    TruncatedSeries gpow = geom;  // (1/(1-t))^{j+1}
    std::vector<SparsePoly> rhs(N + 1);
    for (long j = 0; j <= N; ++j) {
        SparsePoly zpow = SparsePoly::monomial(1, rule.h(j));
        for (long n = j; n <= N; ++n) {
            // coefficient of t^{n-j} in (1/(1-t))^{j+1}, a constant
            const SparsePoly& c = gpow.coeff(n - j);
            Coefficient cc = c.is_zero() ? Coefficient(0) : c.terms().front().coeff;
            rhs[n] = add(rhs[n], scalar_mul(cc, zpow));
        }
        if (j < N) gpow = mul(gpow, geom);
    }
    for (long n = 0; n <= N; ++n) {
        auto w = diff_polys(H_poly(rule, n), rhs[n], "t^" + std::to_string(n));
        if (w) return failed("Eq2.1", std::move(params), *w);
    }
    return passed("Eq2.1", std::move(params));
}

IdentityReport check_halving(const ExponentRule& rule, const Rational& z, long N,
                             double tol) {
    Params params{{"rule", rule.to_string()},
                  {"z", z.get_str()},
                  {"N", std::to_string(N)},
                  {"tol", std::to_string(tol)}};
    Rational az = abs(z);
    if (az >= 1) throw InvalidDomain("check_halving requires |z| < 1");
    if (rule.kind() == ExponentRule::Kind::ExplicitTable)
        return verdict_report("Eq2.3", std::move(params), Verdict::NotApplicable,
                              "tail of a finite table rule cannot be certified");

    // exact partial sums of both sides
    Rational lhs = 0;
    for (long j = 0; j <= N; ++j) lhs += pow_rational(z, rule.h(j));
    Rational rhs = 0;
    Rational half_pow = Rational(1, 2);
    for (long n = 0; n <= N; ++n) {
        rhs += half_pow * eval_exact(H_poly(rule, n), z);
        half_pow /= 2;
    }

    // certified tails. Left: h strictly increasing past N gives a geometric
    // bound |z|^{h_{N+1}} / (1-|z|). Right: H_n(|z|) <= |z|^{-c} (1+|z|)^n
    // with c the linear defect of h, giving a geometric tail with ratio
    // (1+|z|)/2.
    Rational tail_left, tail_right;
    if (az == 0) {
        tail_left = 0;
        tail_right = 0;  // only zero exponents contribute and they are all
                         // accounted for once h_j > 0 for j > N
        long zero_count = (rule.kind() == ExponentRule::Kind::Binomial) ? rule.m() : 0;
        long j0 = zero_count > 0 ? zero_count - 1 : 0;
        if (N < 4 * j0 + 4)
            return verdict_report("Eq2.3", std::move(params), Verdict::NotApplicable,
                                  "N too small for the z=0 tail bound");
        // H_n(0) <= (j0+1) (n+1)^{j0}; ratio of consecutive tail terms is
        // below 3/4 once n >= 4 j0 + 4
        Rational first = Rational(j0 + 1) * pow_rational(Rational(N + 2), j0);
        first /= pow_rational(Rational(2), N + 2);
        tail_right = 4 * first;
    } else {
        if (!rule.strictly_increasing_on(N, N + 4))
            return verdict_report("Eq2.3", std::move(params), Verdict::NotApplicable,
                                  "exponent tail is not strictly increasing");
        tail_left = pow_rational(az, rule.h(N + 1)) / (1 - az);
        long c = rule.linear_defect(N);
        Rational ratio = (1 + az) / 2;
        tail_right = pow_rational(ratio, N + 1) / (1 - az);
        tail_right /= pow_rational(az, c);
    }

    Rational discrepancy = abs(lhs - rhs);
    Rational budget = Rational(tol) + tail_left + tail_right;
    if (discrepancy <= budget) return passed("Eq2.3", std::move(params));
    return failed("Eq2.3", std::move(params),
                  Witness{"partial sums differ beyond certified budget " +
                              budget.get_str(),
                          lhs.get_str(), rhs.get_str()});
}

IdentityReport check_finite_transform(const ExponentRule& rule, long n) {
    Params params{{"rule", rule.to_string()}, {"n", std::to_string(n)}};
    TruncatedSeries lhs(n);
    for (long k = 0; k <= n; ++k)
        lhs = add(lhs, TruncatedSeries::t_monomial(
                           n, scalar_mul(binomial(n, k), H_poly(rule, k)), k));
    // powers of (1+t)
    std::vector<TruncatedSeries> onet;
    onet.push_back(TruncatedSeries::one(n));
    TruncatedSeries base = add(TruncatedSeries::one(n),
                               TruncatedSeries::t_monomial(n, SparsePoly::constant(1), 1));
    for (long i = 1; i <= n; ++i) onet.push_back(mul(onet.back(), base));
    TruncatedSeries rhs(n);
    for (long j = 0; j <= n; ++j) {
        SparsePoly cj = scalar_mul(binomial(n, j), SparsePoly::monomial(1, rule.h(j)));
        rhs = add(rhs, mul(TruncatedSeries::t_monomial(n, cj, j), onet[n - j]));
    }
    for (long k = 0; k <= n; ++k) {
        auto w = diff_polys(lhs.coeff(k), rhs.coeff(k), "t^" + std::to_string(k));
        if (w) return failed("Eq2.4", std::move(params), *w);
    }
    return passed("Eq2.4", std::move(params));
}

namespace {
SparsePoly substitute_negated(const SparsePoly& p) {
    std::vector<Term> out = p.terms();
    for (auto& t : out)
        if (mpz_odd_p(t.exp.get_mpz_t())) t.coeff = -t.coeff;
    return SparsePoly::from_terms(std::move(out));
}
}  // namespace

IdentityReport check_parity_reflection(const ExponentRule& rule, long n) {
    Params params{{"rule", rule.to_string()}, {"n", std::to_string(n)}};
    for (long j = 0; j <= n; ++j) {
        Exponent hj = rule.h(j);
        if (mpz_odd_p(hj.get_mpz_t()) != (j % 2 != 0))
            return verdict_report("Eq2.5", std::move(params), Verdict::NotApplicable,
                                  "h_" + std::to_string(j) +
                                      " does not have the parity of its index");
    }
    SparsePoly lhs = substitute_negated(H_poly(rule, n));
    // 2^n sum_k C(n,k) (-1/2)^k H_k = sum_k C(n,k) (-1)^k 2^{n-k} H_k
    SparsePoly rhs;
    for (long k = 0; k <= n; ++k) {
        Coefficient c = binomial(n, k);
        mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n - k));
        if (k % 2) c = -c;
        rhs = add(rhs, scalar_mul(c, H_poly(rule, k)));
    }
    return compare("Eq2.5", std::move(params), lhs, rhs, "H_n(-z)");
}

IdentityReport check_inverse_transform(const ExponentRule& rule, long n, int nu) {
    if (nu != 0 && nu != 1)
        throw std::invalid_argument("check_inverse_transform: nu must be 0 or 1");
    std::string id = nu == 0 ? "Eq2.6" : "Eq2.7";
    Params params{{"rule", rule.to_string()},
                  {"n", std::to_string(n)},
                  {"nu", std::to_string(nu)}};
    SparsePoly lhs = alternating_moment_sum(rule, n, nu);
    SparsePoly rhs;
    if (nu == 0) {
        Coefficient sign = (n % 2) ? -1 : 1;
        rhs = SparsePoly::monomial(sign, rule.h(n));
    } else if (n >= 1) {
        Coefficient c = (n % 2) ? -n : n;
        rhs = SparsePoly::from_terms({Term{rule.h(n), c}, Term{rule.h(n - 1), c}});
    }
    return compare(id, std::move(params), lhs, rhs, "inverse transform");
}

IdentityReport check_support_collapse(const ExponentRule& rule, long n, long nu) {
    Params params{{"rule", rule.to_string()},
                  {"n", std::to_string(n)},
                  {"nu", std::to_string(nu)}};
    long lo = std::max(0L, n - nu);
    if (!rule.strictly_increasing_on(lo, n))
        return verdict_report("Eq2.8", std::move(params), Verdict::AmbiguousSupport,
                              "exponents h_" + std::to_string(lo) + "..h_" +
                                  std::to_string(n) + " collide");
    SparsePoly lhs = alternating_moment_sum(rule, n, nu);
    std::set<Exponent> allowed;
    for (long i = lo; i <= n; ++i) allowed.insert(rule.h(i));
    for (const auto& t : lhs.terms()) {
        if (!allowed.count(t.exp))
            return failed("Eq2.8", std::move(params),
                          Witness{"unexpected support at z^" + t.exp.get_str(),
                                  t.coeff.get_str(), "0"});
    }
    return passed("Eq2.8", std::move(params));
}

IdentityReport check_support_collapse_fit(const ExponentRule& rule, long n_lo,
                                          long n_hi, long nu) {
    Params params{{"rule", rule.to_string()},
                  {"n_lo", std::to_string(n_lo)},
                  {"n_hi", std::to_string(n_hi)},
                  {"nu", std::to_string(nu)}};
    if (n_hi - n_lo < nu + 1)
        throw std::invalid_argument("window must contain at least nu+2 points");
    // coefficients a_{i,nu}(n) read off the collapsed support for each n
    std::vector<std::vector<Coefficient>> samples;  // samples[idx][i]
    for (long n = n_lo; n <= n_hi; ++n) {
        long lo = n - nu;
        if (lo < 0 || !rule.strictly_increasing_on(lo, n))
            return verdict_report("Eq2.8-fit", std::move(params),
                                  Verdict::AmbiguousSupport,
                                  "window at n=" + std::to_string(n) + " collides");
        SparsePoly lhs = alternating_moment_sum(rule, n, nu);
        std::vector<Coefficient> row(nu + 1);
        SparsePoly residual = lhs;
        for (long i = 0; i <= nu; ++i) {
            row[i] = lhs.coeff_at(rule.h(n - i));
            residual = sub(residual, SparsePoly::monomial(row[i], rule.h(n - i)));
            // the whole collapsed sum carries a factor (-1)^n; strip it so the
            // coefficients can be fitted as fixed polynomials in n
            if (n % 2) row[i] = -row[i];
        }
        if (!residual.is_zero())
            return failed("Eq2.8-fit", std::move(params),
                          Witness{"support outside window at n=" + std::to_string(n),
                                  format_poly(residual), "0"});
        samples.push_back(std::move(row));
    }
    for (long i = 0; i <= nu; ++i) {
        std::vector<std::pair<Rational, Rational>> pts;
        for (long k = 0; k <= nu; ++k)
            pts.emplace_back(Rational(n_lo + k), Rational(samples[k][i]));
        QPoly fit = lagrange_fit(pts);
        if (static_cast<long>(fit.size()) > nu + 1)
            return failed("Eq2.8-fit", std::move(params),
                          Witness{"degree of a_" + std::to_string(i), qp_to_string(fit),
                                  "degree <= " + std::to_string(nu)});
        for (const auto& c : fit)
            if (c.get_den() != 1)
                return failed("Eq2.8-fit", std::move(params),
                              Witness{"a_" + std::to_string(i) + " not integral",
                                      qp_to_string(fit), "integer coefficients"});
        // the spare sample points validate the fit
        for (long k = nu + 1; k < static_cast<long>(samples.size()); ++k) {
            Rational predicted = qp_eval(fit, Rational(n_lo + k));
            if (predicted != samples[k][i])
                return failed("Eq2.8-fit", std::move(params),
                              Witness{"a_" + std::to_string(i) + " at n=" +
                                          std::to_string(n_lo + k),
                                      samples[k][i].get_str(), predicted.get_str()});
        }
        params["a_" + std::to_string(i)] = qp_to_string(fit);
    }
    return passed("Eq2.8-fit", std::move(params));
}

IdentityReport check_moment_vanishing(long n, long nu) {
    Params params{{"n", std::to_string(n)}, {"nu", std::to_string(nu)}};
    for (long j = 0; j <= n - nu - 1; ++j) {
        Coefficient sum = 0;
        for (long k = 0; k <= n; ++k) {
            if (k == 0 && nu > 0) continue;
            Coefficient term = binomial(n, k) * binomial(k, j) * int_pow(k, nu);
            if (k % 2) term = -term;
            sum += term;
        }
        if (sum != 0)
            return failed("Eq2.9", std::move(params),
                          Witness{"j=" + std::to_string(j), sum.get_str(), "0"});
    }
    return passed("Eq2.9", std::move(params));
}

IdentityReport check_difference_identity(const ExponentRule& rule, long n, long r) {
    Params params{{"rule", rule.to_string()},
                  {"n", std::to_string(n)},
                  {"r", std::to_string(r)}};
    SparsePoly lhs = forward_difference(rule, n, r);
    std::vector<Term> terms;
    for (long k = 0; k <= n; ++k)
        terms.push_back(Term{rule.h(k + r), binomial(n, k)});
    SparsePoly rhs = SparsePoly::from_terms(std::move(terms));
    return compare("Eq3.3", std::move(params), lhs, rhs, "Delta^r H_n");
}

IdentityReport check_derivative_identity(long m, long n) {
    if (n < m) throw std::invalid_argument("check_derivative_identity needs n >= m");
    Params params{{"m", std::to_string(m)}, {"n", std::to_string(n)}};
    SparsePoly lhs = shift(derivative(f_poly(m, n)), 1);
    SparsePoly alt;
    for (long i = 0; i <= m; ++i) {
        Coefficient c = binomial(m, i);
        if (i % 2) c = -c;
        alt = add(alt, scalar_mul(c, f_poly(m, n - i)));
    }
    SparsePoly rhs = scalar_mul(binomial(n, m), alt);
    return compare("Eq3.8", std::move(params), lhs, rhs, "z f'");
}

IdentityReport check_inverse_derivative(long m, long n) {
    if (n < m || m < 1)
        throw std::invalid_argument("check_inverse_derivative needs 1 <= m <= n");
    Params params{{"m", std::to_string(m)}, {"n", std::to_string(n)}};
    // multiply through by D = lcm of the C(i,m) so everything is integral
    Coefficient D = 1;
    for (long i = m; i <= n; ++i) {
        Coefficient b = binomial(i, m);
        mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), b.get_mpz_t());
    }
    Coefficient head = 0;
    for (long i = 0; i <= m - 1; ++i) head += binomial(n, i);
    SparsePoly rhs = SparsePoly::constant(head * D);
    SparsePoly deriv_part;
    for (long i = m; i <= n; ++i) {
        Coefficient w = D * binomial(n - i + m - 1, m - 1);
        mpz_divexact(w.get_mpz_t(), w.get_mpz_t(), binomial(i, m).get_mpz_t());
        deriv_part = add(deriv_part, scalar_mul(w, derivative(f_poly(m, i))));
    }
    rhs = add(rhs, shift(deriv_part, 1));
    SparsePoly lhs = scalar_mul(D, f_poly(m, n));
    return compare("Eq3.10", std::move(params), lhs, rhs, "f in terms of f'");
}

IdentityReport check_pde(long m, long N) {
    if (m < 1 || N <= m) throw std::invalid_argument("check_pde needs m >= 1, N > m");
    Params params{{"m", std::to_string(m)}, {"N", std::to_string(N)}};
    // build the generating series with extra headroom so every t-derivative
    // stays valid through order N
    long order = N + m;
    std::vector<SparsePoly> fs(order + 1);
    for (long n = 0; n <= order; ++n) fs[n] = f_poly(m, n);
    TruncatedSeries F(order, std::move(fs));

    Coefficient m_fact;
    mpz_fac_ui(m_fact.get_mpz_t(), static_cast<unsigned long>(m));

    // m! * z dF/dz
    TruncatedSeries lhs = scalar_mul(
        m_fact, poly_mul(SparsePoly::monomial(1, 1), z_derivative(F)));
    lhs = truncate(lhs, N);

    // m! * (-t)^m sum_j (1/j!) C(m,j) (t-1)^j d^jF/dt^j
    TruncatedSeries rhs(N);
    TruncatedSeries dF = F;
    for (long j = 0; j <= m; ++j) {
        if (j > 0) dF = t_derivative(dF);
        // weight m!/j! * C(m,j), an integer
        Coefficient w = binomial(m, j);
        for (long i = j + 1; i <= m; ++i) w *= i;
        // t-polynomial (-t)^m (t-1)^j with constant coefficients
        TruncatedSeries tp(order);
        std::vector<SparsePoly> tpc(order + 1);
        for (long i = 0; i <= j && m + i <= order; ++i) {
            Coefficient c = binomial(j, i);
            if ((m + (j - i)) % 2) c = -c;
            tpc[m + i] = SparsePoly::constant(c);
        }
        TruncatedSeries tpoly(order, std::move(tpc));
        rhs = add(rhs, truncate(scalar_mul(w, mul(tpoly, dF)), N));
    }
    for (long n = 0; n <= N; ++n) {
        auto w = diff_polys(lhs.coeff(n), rhs.coeff(n), "t^" + std::to_string(n));
        if (w) return failed("Eq3.13", std::move(params), *w);
    }
    return passed("Eq3.13", std::move(params));
}

}  // namespace sparsepoly
