#include <doctest.h>

#include <cmath>
#include <random>

#include "sparsepoly/family.hpp"
#include "sparsepoly/roots.hpp"

using namespace sparsepoly;

TEST_CASE("modulus bound values") {
    CHECK(upper_bound(3, 7) == doctest::Approx(2.5));
    CHECK(upper_bound(4, 12) == doctest::Approx(1.375));
    CHECK(upper_bound(2, 3) == doctest::Approx(1.0 + std::log(3.0)));
    CHECK(lower_bound(3, 13) == doctest::Approx(3.0 / 11.0));
    CHECK(lower_bound(2, 3) == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS_AS(upper_bound(3, 6), OutOfRegime);
    CHECK_THROWS_AS(upper_bound(1, 10), OutOfRegime);
    // regime threshold for the lower bound at m = 3 is n = 9
    CHECK_THROWS_AS(lower_bound(3, 8), OutOfRegime);
    CHECK_NOTHROW(lower_bound(3, 9));
}

TEST_CASE("epsilon threshold diagnostic") {
    // the proof-internal inequality g_m(n) <= m!/(n-m)^{m-2}
    CHECK(epsilon_threshold(3, 19) <= 6.0 / (16.0 * 16.0) * 16.0);  // 6/16^1
    CHECK(epsilon_threshold(3, 19) <= 6.0 / 16.0);
    CHECK(epsilon_threshold(4, 12) <= 24.0 / (8.0 * 8.0));
    CHECK(epsilon_threshold(6, 13) <= 2.0 / 5.0);
    CHECK_THROWS(epsilon_threshold(3, 3));
}

TEST_CASE("exact root set of the small cubic") {
    // f_{2,3} = (z+1)(z^2 - z + 4): roots -1 and (1 +- i sqrt 15)/2
    RootReport rep = all_roots(2, 3, 1e-10);
    REQUIRE(rep.roots.size() == 3);
    double s15 = std::sqrt(15.0);
    bool saw_real = false, saw_pair = false;
    for (const auto& r : rep.roots) {
        if (std::abs(r.value - std::complex<double>(-1.0, 0.0)) < 1e-9) saw_real = true;
        if (std::abs(r.value - std::complex<double>(0.5, s15 / 2)) < 1e-9) saw_pair = true;
        CHECK(r.radius < 1e-9);
    }
    CHECK(saw_real);
    CHECK(saw_pair);
    CHECK(rep.min_modulus == doctest::Approx(1.0));
    CHECK(rep.max_modulus == doctest::Approx(2.0));
    CHECK(rep.all_inside_annulus);
    // Vieta: no z^2 term, so the root sum vanishes
    std::complex<double> sum{0, 0};
    for (const auto& r : rep.roots) sum += r.value;
    CHECK(std::abs(sum) < 1e-9);
}

TEST_CASE("root count and product match the coefficients") {
    for (auto [m, n] : {std::pair<long, long>{2, 6}, {3, 7}, {4, 9}}) {
        RootReport rep = all_roots(m, n, 1e-10);
        CHECK(rep.roots.size() == static_cast<std::size_t>(binomial(n, m).get_si()));
        // |product of roots| = f(0) for a monic polynomial
        double log_prod = 0;
        for (const auto& r : rep.roots) log_prod += std::log(std::abs(r.value));
        double log_f0 = std::log(f_poly(m, n).coeff_at(0).get_d());
        CHECK(log_prod == doctest::Approx(log_f0).epsilon(1e-8));
    }
}

TEST_CASE("roots are deterministic for a fixed seed") {
    RootReport a = all_roots(3, 7, 1e-10, 42);
    RootReport b = all_roots(3, 7, 1e-10, 42);
    REQUIRE(a.roots.size() == b.roots.size());
    for (std::size_t i = 0; i < a.roots.size(); ++i) {
        CHECK(a.roots[i].value == b.roots[i].value);
        CHECK(a.roots[i].radius == b.roots[i].radius);
    }
}

TEST_CASE("real root counting") {
    CHECK(count_real_roots(2, 2).count == 1);
    CHECK(count_real_roots(2, 3).count == 1);
    // (1+z)^n has the single distinct real root -1
    RealRootCount rc = count_real_roots(1, 4);
    CHECK(rc.count == 1);
    CHECK_FALSE(rc.square_free);
    for (long n = 2; n <= 12; ++n) CHECK(count_real_roots(2, n).count == n / 2);
    // every isolating interval sits in z < 0
    RealRootCount big = count_real_roots(2, 12);
    for (const auto& iv : big.isolating_intervals) CHECK(iv.hi <= 0);
    CHECK_THROWS_AS(count_real_roots(5, 16), DegreeCapExceeded);
}

TEST_CASE("real roots agree with the numeric solver") {
    for (auto [m, n] : {std::pair<long, long>{2, 8}, {3, 9}, {2, 11}}) {
        RealRootCount rc = count_real_roots(m, n);
        RootReport rep = all_roots(m, n, 1e-10);
        long numeric_real = 0;
        for (const auto& r : rep.roots)
            if (std::fabs(r.value.imag()) <= r.radius) ++numeric_real;
        CHECK(numeric_real == rc.count);
    }
}

TEST_CASE("sign at minus one") {
    CHECK(sign_at_minus_one(3, 4) == 8);
    CHECK(sign_at_minus_one(3, 3) == 6);
    CHECK(sign_at_minus_one(1, 2) == 0);
    for (long m = 3; m <= 7; m += 2)
        for (long n = m; n <= 40; ++n) CHECK(sign_at_minus_one(m, n) > 0);
}

TEST_CASE("binomial parity via carries") {
    CHECK_FALSE(binomial_odd(5, 3));
    CHECK(binomial_odd(7, 3));
    CHECK_FALSE(binomial_odd(6, 3));
    for (long n = 0; n <= 64; ++n)
        for (long m = 0; m <= n; ++m)
            CHECK(binomial_odd(n, m) == (binomial(n, m) % 2 == 1));
}

TEST_CASE("parity word periodicity") {
    ParityScan ps = parity_scan(3, 3, 18);
    CHECK(ps.never_both_odd);
    CHECK(ps.expected_period == 4);
    CHECK(ps.period == 4);
    ParityScan p5 = parity_scan(5, 5, 40);
    CHECK(p5.never_both_odd);
    CHECK(p5.expected_period == 8);
    CHECK(p5.period == 8);
}

TEST_CASE("heuristic root predictions are matched and reported") {
    auto matches = heuristic_roots(3, 13);
    REQUIRE(matches.size() == 3);  // -f(0)/C(n,m) and both cube-root candidates
    CHECK(matches[0].predicted == doctest::Approx(-f_poly(3, 13).coeff_at(0).get_d() /
                                                  binomial(13, 3).get_d()));
    for (const auto& hm : matches) {
        REQUIRE(hm.matched_root.has_value());
        REQUIRE(hm.gap.has_value());
        CHECK(*hm.gap < 0.5);  // reported, loosely sane; never asserted tight
    }
    // the near -m/n root is matched closely
    CHECK(*matches[0].gap < 0.05);
}

TEST_CASE("conjecture table for m = 2 and m = 4") {
    ConjectureScanResult s2 = conjecture45_46_scan(2, 2, 16);
    CHECK(s2.m2_equality_holds);
    for (const auto& r : s2.rows) CHECK_FALSE(r.skipped);
    ConjectureScanResult s4 = conjecture45_46_scan(4, 4, 12);
    CHECK(s4.even_bound_holds);
    // cap-limited rows are marked skipped, not fatal
    ConjectureScanResult s5 = conjecture45_46_scan(5, 5, 16, 300);
    bool any_skipped = false;
    for (const auto& r : s5.rows) any_skipped |= r.skipped;
    CHECK(any_skipped);
}

TEST_CASE("general disc bound holds for random admissible polynomials") {
    // degree-C(n,m) monic polynomials whose coefficients and exponents obey
    // the binomial-envelope constraints; all roots must stay inside
    // |z| < 1 + m!/(n-m)^{m-2}
    const long m = 3, n = 19;
    double bound = 1.0 + 6.0 / 16.0;
    Coefficient cap_exp = binomial(n - 1, m);
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Term> terms;
        terms.push_back(Term{binomial(n, m), Coefficient(1)});
        terms.push_back(Term{Exponent(0), Coefficient(1)});
        for (long k = 1; k <= n - 1; ++k) {
            long amax = binomial(n, k).get_si();
            std::uniform_int_distribution<long> ad(-amax, amax);
            Coefficient bcap = Coefficient(k) * cap_exp / Coefficient(n - m);
            long bmax = bcap.get_si();
            std::uniform_int_distribution<long> bd(1, std::max(1L, bmax));
            long a = ad(rng);
            if (a == 0) continue;
            terms.push_back(Term{Exponent(bd(rng)), Coefficient(a)});
        }
        SparsePoly f = SparsePoly::from_terms(std::move(terms));
        if (f.coeff_at(0) == 0) continue;
        auto roots = solve_roots(f, 1e-9, 7 + trial);
        for (const auto& r : roots) CHECK(std::abs(r.value) + r.radius < bound);
    }
}

TEST_CASE("general exclusion bound holds for random admissible polynomials") {
    // constant term at least C(n+1,m-1), later coefficients inside the
    // binomial envelope, exponents growing at least linearly with slope m+1;
    // no root may enter |z| <= m/(n-m+1)
    const long m = 3, n = 12;
    double radius = 3.0 / 10.0;
    std::mt19937_64 rng(4096);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Term> terms;
        long c0min = binomial(n + 1, m - 1).get_si();
        std::uniform_int_distribution<long> c0d(c0min, 2 * c0min);
        std::uniform_int_distribution<int> sign(0, 1);
        terms.push_back(Term{Exponent(0), Coefficient((sign(rng) ? 1 : -1) * c0d(rng))});
        {
            long c1max = binomial(n, m).get_si();
            std::uniform_int_distribution<long> c1d(-c1max, c1max);
            long c1 = c1d(rng);
            if (c1 != 0) terms.push_back(Term{Exponent(1), Coefficient(c1)});
        }
        std::uniform_int_distribution<long> dj_off(0, m);
        for (long j = 2; j <= n - m + 1; ++j) {
            long cmax = binomial(n, m + j - 1).get_si();
            std::uniform_int_distribution<long> cd(-cmax, cmax);
            long c = cd(rng);
            if (j == n - m + 1 && c == 0) c = cmax;  // keep the top exponent alive
            if (c == 0) continue;
            terms.push_back(Term{Exponent((m + 1) * (j - 1) + dj_off(rng)), Coefficient(c)});
        }
        SparsePoly g = SparsePoly::from_terms(std::move(terms));
        auto roots = solve_roots(g, 1e-9, 100 + trial);
        for (const auto& r : roots) CHECK(std::abs(r.value) - r.radius > radius);
    }
}

TEST_CASE("exponent growth of the family dominates the linear threshold") {
    // C(m+j-1, m) >= (m+1)(j-1)
    for (long m = 3; m <= 8; ++m)
        for (long j = 2; j <= 50; ++j)
            CHECK(binomial(m + j - 1, m) >= Coefficient(m + 1) * (j - 1));
}
