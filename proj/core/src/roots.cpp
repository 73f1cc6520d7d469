#include "sparsepoly/roots.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <random>

#include "sparsepoly/family.hpp"
#include "sparsepoly/numeric.hpp"

namespace sparsepoly {

double upper_bound(long m, long n) {
    if (m == 2) {
        if (n < 3) throw OutOfRegime("upper_bound: m = 2 needs n >= 3");
        return 1.0 + 3.0 * std::log(static_cast<double>(n)) / static_cast<double>(n);
    }
    if (m >= 3) {
        if (n < 2 * m + 1) throw OutOfRegime("upper_bound: needs n >= 2m+1");
        double fact = 1.0;
        for (long i = 2; i <= m; ++i) fact *= static_cast<double>(i);
        return 1.0 + fact / std::pow(static_cast<double>(n - m),
                                     static_cast<double>(m - 2));
    }
    throw OutOfRegime("upper_bound: needs m >= 2");
}

double lower_bound(long m, long n) {
    if (m == 2) {
        if (n < 3) throw OutOfRegime("lower_bound: m = 2 needs n >= 3");
        return 2.0 / static_cast<double>(n);
    }
    if (m >= 3) {
        double threshold = std::cbrt(2.0) * std::pow(static_cast<double>(m), 4.0 / 3.0) +
                           static_cast<double>(m);
        if (static_cast<double>(n) < std::ceil(threshold))
            throw OutOfRegime("lower_bound: n below the regime threshold");
        return static_cast<double>(m) / static_cast<double>(n - m + 1);
    }
    throw OutOfRegime("lower_bound: needs m >= 2");
}

double epsilon_threshold(long m, long n) {
    if (n <= m) throw std::invalid_argument("epsilon_threshold needs n > m");
    double nn = static_cast<double>(n);
    double num = 1.2 * nn * (std::log(nn) - std::log(std::log(2.0)));
    return num / binomial(n, m).get_d();
}

// ---------------------------------------------------------------------------
// log-scaled double evaluation: a polynomial value is carried as
// exp(M) * s with s a unit-scale complex, so exponents of several thousand
// never overflow.

namespace {

struct LogTerm {
    double e;       // exponent as double (exact for our sizes)
    double lc;      // log |coeff|
    double sign;    // +1 / -1
};

std::vector<LogTerm> log_terms(const SparsePoly& p) {
    std::vector<LogTerm> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        signed long ex;
        double d;
        d = mpz_get_d_2exp(&ex, t.coeff.get_mpz_t());
        LogTerm lt;
        lt.e = mpz_get_d(t.exp.get_mpz_t());
        lt.lc = std::log(std::fabs(d)) + static_cast<double>(ex) * std::numbers::ln2;
        lt.sign = (sgn(t.coeff) < 0) ? -1.0 : 1.0;
        out.push_back(lt);
    }
    return out;
}

struct LogVal {
    double M = -HUGE_VAL;
    std::complex<double> s{0.0, 0.0};
};

LogVal eval_log(const std::vector<LogTerm>& terms, double lz, double az) {
    LogVal v;
    for (const auto& t : terms) {
        double L = t.lc + t.e * lz;
        double th = t.e * az;
        std::complex<double> w = t.sign * std::complex<double>(std::cos(th), std::sin(th));
        if (L > v.M) {
            v.s = v.s * std::exp(v.M - L) + w;
            v.M = L;
        } else {
            v.s += std::exp(L - v.M) * w;
        }
    }
    return v;
}

// p(z)/p'(z) from the two log-scaled values
std::complex<double> newton_ratio(const LogVal& p, const LogVal& q) {
    if (q.s == std::complex<double>(0.0, 0.0)) return {HUGE_VAL, 0.0};
    return std::exp(p.M - q.M) * (p.s / q.s);
}

// ---- high-precision complex helpers for the certification stage ----

BigComplex bc_sub(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
}

BigComplex bc_div(const BigComplex& a, const BigComplex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Real bc_abs(const BigComplex& a) { return sqrt(a.re * a.re + a.im * a.im); }

}  // namespace

std::vector<CertifiedRoot> solve_roots(const SparsePoly& p, double residual_tol,
                                       unsigned long seed, unsigned* precision_out) {
    if (p.is_zero()) throw std::invalid_argument("solve_roots: zero polynomial");
    if (p.coeff_at(0) == 0)
        throw std::invalid_argument("solve_roots: constant term must be nonzero");
    long deg = p.degree().get_si();
    if (deg == 0) return {};

    SparsePoly dp = derivative(p);
    std::vector<LogTerm> tp = log_terms(p);
    std::vector<LogTerm> tq = log_terms(dp);

    // initial points on the circle whose radius is the geometric mean of the
    // root moduli, |a_0/a_d|^(1/deg), with deterministic angular jitter
    double r0;
    {
        signed long e0, ed;
        double d0 = mpz_get_d_2exp(&e0, p.coeff_at(0).get_mpz_t());
        double dd = mpz_get_d_2exp(&ed, p.leading_coeff().get_mpz_t());
        double lr = (std::log(std::fabs(d0 / dd)) +
                     static_cast<double>(e0 - ed) * std::numbers::ln2) /
                    static_cast<double>(deg);
        r0 = std::exp(lr);
    }
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL +
                        static_cast<unsigned long>(deg));
    std::uniform_real_distribution<double> jitter(-0.3, 0.3);
    std::vector<std::complex<double>> z(deg);
    const double two_pi = 2.0 * std::numbers::pi;
    for (long i = 0; i < deg; ++i) {
        double ang = two_pi * (static_cast<double>(i) + 0.35 + jitter(rng)) /
                     static_cast<double>(deg);
        z[i] = std::polar(r0 * (1.0 + 0.05 * jitter(rng)), ang);
    }

    // Aberth sweeps with immediate updates; converges quadratically once the
    // approximations separate
    const int max_sweeps = 400;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double max_step = 0.0;
        for (long i = 0; i < deg; ++i) {
            double lz = std::log(std::abs(z[i]));
            double az = std::arg(z[i]);
            LogVal pv = eval_log(tp, lz, az);
            LogVal qv = eval_log(tq, lz, az);
            std::complex<double> N = newton_ratio(pv, qv);
            if (!std::isfinite(N.real()) || !std::isfinite(N.imag())) {
                // derivative vanished here; nudge and retry next sweep
                z[i] += std::abs(z[i]) * 1e-3;
                max_step = 1.0;
                continue;
            }
            std::complex<double> repel(0.0, 0.0);
            for (long j = 0; j < deg; ++j) {
                if (j == i) continue;
                std::complex<double> d = z[i] - z[j];
                if (d == std::complex<double>(0.0, 0.0)) {
                    d = std::complex<double>(1e-12 * std::abs(z[i]), 0.0);
                }
                repel += 1.0 / d;
            }
            std::complex<double> denom = 1.0 - N * repel;
            std::complex<double> w =
                (std::abs(denom) < 1e-300) ? N : N / denom;
            z[i] -= w;
            double rel = std::abs(w) / std::max(std::abs(z[i]), 1e-300);
            max_step = std::max(max_step, rel);
        }
        if (max_step < 1e-14) break;
    }

    // certification ladder: polish with Newton in mpfr, bound the inclusion
    // radius by deg * (|p| + err) / (|p'| - err'), check disk separation
    std::vector<CertifiedRoot> out(deg);
    const unsigned ladder[] = {53, 106, 212, 424, 848, 1696, 3392, 4096};
    Real degR(deg);
    for (unsigned bits : ladder) {
        PrecisionGuard guard(bits + 32);
        std::vector<Real> radii(deg, Real(HUGE_VAL));
        std::vector<BigComplex> pts;
        pts.reserve(deg);
        for (long i = 0; i < deg; ++i)
            pts.push_back(BigComplex{Real(z[i].real()), Real(z[i].imag())});

        for (long i = 0; i < deg; ++i) {
            for (int step = 0; step < 3; ++step) {
                NumericValue pv = eval_numeric(p, pts[i], bits);
                NumericValue qv = eval_numeric(dp, pts[i], bits);
                Real qa = bc_abs(qv.value);
                if (qa <= qv.error_bound) break;
                pts[i] = bc_sub(pts[i], bc_div(pv.value, qv.value));
            }
            NumericValue pv = eval_numeric(p, pts[i], bits);
            NumericValue qv = eval_numeric(dp, pts[i], bits);
            Real qa = bc_abs(qv.value);
            if (qa > qv.error_bound)
                radii[i] = degR * (bc_abs(pv.value) + pv.error_bound) /
                           (qa - qv.error_bound);
        }

        for (long i = 0; i < deg; ++i) {
            out[i].value = {static_cast<double>(pts[i].re),
                            static_cast<double>(pts[i].im)};
            out[i].radius = static_cast<double>(radii[i]);
            out[i].clustered = false;
        }
        // disk overlap scan
        for (long i = 0; i < deg; ++i) {
            for (long j = i + 1; j < deg; ++j) {
                double dist = std::abs(out[i].value - out[j].value);
                if (dist < out[i].radius + out[j].radius) {
                    out[i].clustered = true;
                    out[j].clustered = true;
                }
            }
        }
        bool all_ok = true;
        for (long i = 0; i < deg; ++i) {
            bool tight = std::isfinite(out[i].radius) &&
                         out[i].radius <=
                             residual_tol * std::max(std::abs(out[i].value), DBL_MIN);
            if (!(tight || out[i].clustered)) {
                all_ok = false;
                break;
            }
        }
        // feed the polished points back for the next rung
        for (long i = 0; i < deg; ++i) z[i] = out[i].value;
        if (all_ok) {
            if (precision_out) *precision_out = bits;
            std::sort(out.begin(), out.end(),
                      [](const CertifiedRoot& a, const CertifiedRoot& b) {
                          double ma = std::abs(a.value), mb = std::abs(b.value);
                          if (ma != mb) return ma < mb;
                          return std::arg(a.value) < std::arg(b.value);
                      });
            return out;
        }
    }
    throw PrecisionExhausted("solve_roots: certification failed at 4096 bits");
}

RootReport all_roots(long m, long n, double residual_tol, unsigned long seed) {
    RootReport rep;
    rep.m = m;
    rep.n = n;
    SparsePoly f = f_poly(m, n);
    rep.roots = solve_roots(f, residual_tol, seed, &rep.precision_used);
    if (!rep.roots.empty()) {
        rep.min_modulus = HUGE_VAL;
        rep.max_modulus = 0;
        for (const auto& r : rep.roots) {
            double mod = std::abs(r.value);
            rep.min_modulus = std::min(rep.min_modulus, mod);
            rep.max_modulus = std::max(rep.max_modulus, mod);
        }
    }
    try {
        rep.lower_bound = lower_bound(m, n);
    } catch (const OutOfRegime&) {}
    try {
        rep.upper_bound = upper_bound(m, n);
    } catch (const OutOfRegime&) {}
    if (rep.lower_bound && rep.upper_bound) {
        rep.all_inside_annulus = true;
        for (const auto& r : rep.roots) {
            double mod = std::abs(r.value);
            // the true root is within radius of the reported value; the
            // bound must hold with that margin
            if (!(mod - r.radius > *rep.lower_bound && mod + r.radius < *rep.upper_bound))
                rep.all_inside_annulus = false;
        }
    }
    return rep;
}

RealRootCount count_real_roots(long m, long n, long sturm_cap) {
    RealRootCount rc;
    rc.m = m;
    rc.n = n;
    SparsePoly f = f_poly(m, n);
    DensePoly dense = to_dense(f, sturm_cap);
    if (dense.empty()) throw std::invalid_argument("count_real_roots: zero polynomial");
    SturmChain chain(std::move(dense));
    rc.square_free = chain.was_square_free();
    rc.isolating_intervals = isolate_negative_roots(chain, Rational(1, 1024));
    rc.count = static_cast<long>(rc.isolating_intervals.size());
    return rc;
}

Coefficient sign_at_minus_one(long m, long n) {
    Rational v = eval_exact(f_poly(m, n), Rational(-1));
    return v.get_num();  // denominator is 1 at an integer point
}

bool binomial_odd(long n, long m) {
    if (m < 0 || m > n) throw std::invalid_argument("binomial_odd needs 0 <= m <= n");
    // no carries when adding m and n-m in base 2 <=> bits of m inside bits of n
    unsigned long um = static_cast<unsigned long>(m);
    unsigned long un = static_cast<unsigned long>(n);
    return (um & un) == um;
}

namespace {

// minimal p such that some tail of w is periodic with period p; the tail may
// start anywhere in the first half
long eventual_period(const std::vector<long>& w) {
    long len = static_cast<long>(w.size());
    for (long p = 1; p <= len / 2; ++p) {
        long start = len / 2;
        bool ok = true;
        for (long i = start; i + p < len; ++i)
            if (w[i] != w[i + p]) { ok = false; break; }
        if (ok && len - start > p) return p;
    }
    return 0;
}

}  // namespace

ParityScan parity_scan(long m, long n_lo, long n_hi) {
    if (m < 1 || n_lo < m || n_hi < n_lo)
        throw std::invalid_argument("parity_scan needs 1 <= m <= n_lo <= n_hi");
    ParityScan ps;
    ps.m = m;
    ps.n_lo = n_lo;
    ps.n_hi = n_hi;
    std::vector<long> w;
    for (long n = n_lo; n <= n_hi; ++n) {
        bool odd = binomial_odd(n, m);
        ps.word.push_back(odd ? 1 : 0);
        w.push_back(odd ? 1 : 0);
        if (n > n_lo && odd && binomial_odd(n - 1, m)) ps.never_both_odd = false;
    }
    ps.period = eventual_period(w);
    // smallest power of two at or above m
    long q = 1;
    while (q < m) q <<= 1;
    ps.expected_period = q;
    return ps;
}

std::vector<HeuristicMatch> heuristic_roots(long m, long n, double residual_tol,
                                            unsigned long seed) {
    std::vector<double> predictions;
    {
        SparsePoly f = f_poly(m, n);
        double f0 = f.coeff_at(0).get_d();
        predictions.push_back(-f0 / binomial(n, m).get_d());
    }
    if (m % 2 == 1 && m >= 3) {
        double mm = static_cast<double>(m);
        predictions.push_back(-std::pow((mm + 1.0) / static_cast<double>(n), 1.0 / mm));
        if (n > m)
            predictions.push_back(
                -std::pow((mm + 1.0) / static_cast<double>(n - m), 1.0 / mm));
    }
    RootReport rep = all_roots(m, n, residual_tol, seed);
    std::vector<double> real_roots;
    for (const auto& r : rep.roots)
        if (std::fabs(r.value.imag()) <= r.radius) real_roots.push_back(r.value.real());

    std::vector<HeuristicMatch> out;
    for (double pred : predictions) {
        HeuristicMatch hm;
        hm.predicted = pred;
        for (double rr : real_roots) {
            double g = std::fabs(rr - pred);
            if (!hm.gap || g < *hm.gap) {
                hm.gap = g;
                hm.matched_root = rr;
            }
        }
        out.push_back(hm);
    }
    return out;
}

ConjectureScanResult conjecture45_46_scan(long m, long n_lo, long n_hi,
                                          long sturm_cap) {
    if (m < 2 || n_lo < m || n_hi < n_lo)
        throw std::invalid_argument("conjecture45_46_scan needs 2 <= m <= n_lo <= n_hi");
    ConjectureScanResult res;
    res.m = m;
    std::vector<long> counts;
    for (long n = n_lo; n <= n_hi; ++n) {
        RealCountRow row;
        row.m = m;
        row.n = n;
        if (binomial(n, m) > sturm_cap) {
            row.skipped = true;
            res.rows.push_back(row);
            continue;
        }
        row.count = count_real_roots(m, n, sturm_cap).count;
        if (m == 2 && row.count != n / 2) res.m2_equality_holds = false;
        if (m % 2 == 0 && m >= 4 && row.count > n / m) res.even_bound_holds = false;
        res.rows.push_back(row);
        counts.push_back(row.count);
    }
    if (m % 2 == 1) res.count_period = eventual_period(counts);
    res.parity = parity_scan(m, n_lo, n_hi);
    return res;
}

}  // namespace sparsepoly
