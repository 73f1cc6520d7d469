#include <doctest.h>

#include <random>

#include "sparsepoly/numeric.hpp"

using namespace sparsepoly;

TEST_CASE("eval_numeric matches eval_exact at rational points") {
    // the reference conversion and the difference must carry more precision
    // than the evaluation under test, or the comparison itself truncates
    PrecisionGuard guard(256);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    std::uniform_int_distribution<long> deg(0, 50);
    std::uniform_int_distribution<long> coeff(-100, 100);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        std::vector<Term> terms;
        for (int t = 0; t < 6; ++t)
            terms.push_back(Term{Exponent(deg(rng)), Coefficient(coeff(rng))});
        SparsePoly p = SparsePoly::from_terms(std::move(terms));
        Rational x(num(rng), den(rng));
        if (x == 0) continue;
        Rational exact = eval_exact(p, x);
        NumericValue nv = eval_numeric_rational(p, x, 128);
        Real diff = abs(nv.value.re - Real(exact.get_mpq_t()));
        CHECK(diff <= nv.error_bound);
        CHECK(abs(nv.value.im) <= nv.error_bound);
        ++checked;
    }
    CHECK(checked > 150);
}

TEST_CASE("huge exponents do not overflow") {
    // z^(10^6) at z = 3/2: representable only through the log path
    SparsePoly p = SparsePoly::monomial(1, Exponent(1000000));
    NumericValue nv = eval_numeric_rational(p, Rational(3, 2), 256);
    // log2 of the value is 10^6 * log2(1.5)
    Real lg = log(nv.value.re) / log(Real(2));
    CHECK(static_cast<double>(lg) == doctest::Approx(1e6 * 0.5849625007211562).epsilon(1e-12));
    CHECK(nv.error_bound < nv.value.re);  // bound is meaningfully smaller
}

TEST_CASE("complex evaluation agrees with direct double arithmetic") {
    SparsePoly p = SparsePoly::from_terms({{Exponent(0), Coefficient(4)},
                                           {Exponent(1), Coefficient(3)},
                                           {Exponent(3), Coefficient(1)}});
    std::complex<double> x(0.5, -0.7);
    NumericValue nv = eval_numeric(p, x, 64);
    std::complex<double> direct = 4.0 + 3.0 * x + x * x * x;
    CHECK(std::abs(nv.to_double() - direct) < 1e-12);
}

TEST_CASE("evaluation at zero keeps only the constant term") {
    SparsePoly p = SparsePoly::from_terms(
        {{Exponent(0), Coefficient(7)}, {Exponent(5), Coefficient(3)}});
    NumericValue nv = eval_numeric(p, std::complex<double>(0.0, 0.0), 64);
    CHECK(nv.to_double() == std::complex<double>(7.0, 0.0));
}

TEST_CASE("precision guard restores the default") {
    auto before = Real::default_precision();
    {
        PrecisionGuard g(512);
        CHECK(Real::default_precision() >= bits_to_digits10(512));
    }
    CHECK(Real::default_precision() == before);
}
