#ifndef SPARSEPOLY_ROOTS_HPP
#define SPARSEPOLY_ROOTS_HPP

// Root location for the f_{m,n} family: annulus bounds with their validity
// regimes, certified numeric root finding (simultaneous iteration plus an
// adaptive-precision residual certificate), exact real-root counts via Sturm
// chains, and the parity / sign-at(-1) scanners.

#include <complex>
#include <optional>
#include <vector>

#include "sparsepoly/poly.hpp"
#include "sparsepoly/sturm.hpp"

namespace sparsepoly {

struct OutOfRegime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All roots of f_{m,n} satisfy |z| < 1 + m!/(n-m)^{m-2} for m >= 3,
// n >= 2m+1, and |z| < 1 + (3/n) log n for m = 2, n >= 3.
double upper_bound(long m, long n);

// All roots satisfy |z| > m/(n-m+1) for m >= 3 with n past the
// ceil(2^{1/3} m^{4/3} + m) threshold, and |z| > 2/n for m = 2, n >= 3.
double lower_bound(long m, long n);

// Diagnostic quantity (6/5) n (log n - log log 2) / C(n,m); the proof of the
// upper bound needs it to stay below m!/(n-m)^{m-2}.
double epsilon_threshold(long m, long n);

struct CertifiedRoot {
    std::complex<double> value;
    double radius = 0;       // certified inclusion radius (absolute)
    bool clustered = false;  // inclusion disk overlaps a neighbor's
};

struct RootReport {
    long m = 0, n = 0;
    std::vector<CertifiedRoot> roots;
    std::optional<double> lower_bound;  // absent when out of regime
    std::optional<double> upper_bound;
    bool all_inside_annulus = false;    // vacuously false without both bounds
    unsigned precision_used = 0;        // bits at which certification succeeded
    double max_modulus = 0;
    double min_modulus = 0;
};

// Certified roots of an arbitrary nonzero sparse polynomial with a nonzero
// constant term. Simultaneous (Aberth-style) iteration runs in log-scaled
// double arithmetic, so exponents far beyond double range are fine; each
// approximation is then polished by high-precision Newton steps and certified
// through the residual bound deg * |p(x)| / |p'(x)|, with evaluation error
// accounted for. Precision escalates 53 -> 4096 bits until every inclusion
// radius is below residual_tol * |root|; beyond that, PrecisionExhausted.
// Disks that cannot be separated from a neighbor are flagged clustered.
// Deterministic for a fixed (polynomial, seed).
std::vector<CertifiedRoot> solve_roots(const SparsePoly& p, double residual_tol,
                                       unsigned long seed, unsigned* precision_out = nullptr);

// solve_roots on f_{m,n} plus the annulus verdict against the bounds above.
RootReport all_roots(long m, long n, double residual_tol, unsigned long seed = 0);

struct RealRootCount {
    long m = 0, n = 0;
    long count = 0;  // distinct real roots
    std::vector<RationalInterval> isolating_intervals;
    bool square_free = true;
};

constexpr long kDefaultSturmCap = 600;

// Exact count of distinct real roots of f_{m,n} through a Sturm chain on the
// densified polynomial; all real roots are negative (positive coefficients),
// so only (-inf, 0) is isolated. Throws DegreeCapExceeded above the cap.
RealRootCount count_real_roots(long m, long n, long sturm_cap = kDefaultSturmCap);

// Exact f_{m,n}(-1).
Coefficient sign_at_minus_one(long m, long n);

// Parity of C(n,m) by carry counting: odd iff adding m and n-m in base 2
// produces no carry.
bool binomial_odd(long n, long m);

struct ParityScan {
    long m = 0, n_lo = 0, n_hi = 0;
    std::vector<int> word;          // parity of C(n,m), n = n_lo..n_hi
    bool never_both_odd = true;     // C(n,m), C(n-1,m) never both odd
    long period = 0;                // minimal eventual period, 0 if none found
    long expected_period = 0;       // 2^nu with 2^{nu-1} < m <= 2^nu
};

ParityScan parity_scan(long m, long n_lo, long n_hi);

struct HeuristicMatch {
    double predicted = 0;
    std::optional<double> matched_root;  // nearest certified real root
    std::optional<double> gap;
};

// Reported (never asserted) predictions for negative real roots: the
// constant/linear truncation root -f(0)/C(n,m) (close to -m/n), and for odd
// m both degree-(m+1) truncation candidates -((m+1)/n)^{1/m} and
// -((m+1)/(n-m))^{1/m}.
std::vector<HeuristicMatch> heuristic_roots(long m, long n,
                                            double residual_tol = 1e-10,
                                            unsigned long seed = 0);

struct RealCountRow {
    long m = 0, n = 0;
    long count = -1;   // -1 when skipped
    bool skipped = false;
};

struct ConjectureScanResult {
    long m = 0;
    std::vector<RealCountRow> rows;
    bool m2_equality_holds = true;  // N_2(n) = floor(n/2); meaningful for m = 2
    bool even_bound_holds = true;   // N_m(n) <= floor(n/m); even m
    long count_period = 0;          // eventual period of the count sequence (odd m)
    ParityScan parity;              // parity word over the same n range
};

// Tabulates N_m(n) over n_lo..n_hi. For m = 2 the equality claim is checked
// (the caller maps a failure to a conjecture-refuted exit, not a crash); for
// even m >= 4 the floor(n/m) bound is checked as evidence; for odd m the
// value pattern and detected periods are reported only.
ConjectureScanResult conjecture45_46_scan(long m, long n_lo, long n_hi,
                                          long sturm_cap = kDefaultSturmCap);

}  // namespace sparsepoly

#endif
