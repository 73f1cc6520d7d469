#include <doctest.h>

#include "sparsepoly/concavity.hpp"
#include "sparsepoly/family.hpp"

using namespace sparsepoly;

TEST_CASE("F at the family edge") {
    // F_{m,m-1} is the constant 2^{m-2}
    for (long m = 2; m <= 8; ++m)
        CHECK(F_poly(m, m - 1) == SparsePoly::constant(Coefficient(1) << (m - 2)));
    CHECK(F_poly(2, 2) == parse_poly("1 + 1*z^1 + 2*z^2"));
    CHECK(F_poly(3, 3) == parse_poly("5 + 3*z^1 + 4*z^2 + 4*z^3"));
}

TEST_CASE("explicit F at n = m") {
    // 2^{m-1}(z^m + ... + z^2) + (2^{m-1}-1) z + (m-2) 2^{m-1} + 1
    for (long m = 2; m <= 8; ++m) {
        std::vector<Term> terms;
        Coefficient half = Coefficient(1) << (m - 1);
        terms.push_back(Term{Exponent(0), (m - 2) * half + 1});
        terms.push_back(Term{Exponent(1), half - 1});
        for (long e = 2; e <= m; ++e) terms.push_back(Term{Exponent(e), half});
        CHECK(F_poly(m, m) == SparsePoly::from_terms(std::move(terms)));
    }
}

TEST_CASE("F and its k-step variants have no negative coefficients") {
    for (long m = 2; m <= 4; ++m)
        for (long n = 1; n <= 12; ++n)
            for (long k = 1; k <= std::min(3L, n); ++k) {
                SparsePoly f = F_k_poly(m, n, k);
                for (const auto& t : f.terms()) CHECK(t.coeff >= 0);
            }
}

TEST_CASE("G instances") {
    CHECK(G_poly(2, 1, 1).is_zero());
    CHECK(G_poly(2, 2, 1) ==
          parse_poly("3 + 3*z^1 + 3*z^2 + 1*z^3 + 1*z^4 + 1*z^5"));
    for (long m = 2; m <= 4; ++m)
        for (long n = 1; n <= 10; ++n)
            for (long k = 1; k <= std::min(3L, n); ++k) {
                SparsePoly g = G_poly(m, n, k);
                for (const auto& t : g.terms()) CHECK(t.coeff >= 0);
            }
}

TEST_CASE("slice decomposition structure") {
    for (long m = 2; m <= 3; ++m) {
        for (long n = m; n <= 8; ++n) {
            for (long nu = 0; nu <= 2 * n; ++nu) {
                GnuDecomposition d = g_nu_decomposition(m, n, nu);
                CHECK(d.symmetric);
                CHECK(d.closed_form_ok);
                CHECK(d.vanishes_at_one);
                CHECK(d.single_sign_change);
            }
            CHECK(g_nu_reassembles(m, n));
        }
    }
}

TEST_CASE("constant-term defect S") {
    // S_2(n) = 1 for every n
    for (long n = 1; n <= 20; ++n) CHECK(S_value(2, n) == 1);
    // minimum 2^{m-2}, attained at n = m-1; for m >= 3 that is the only
    // place (m = 2 sits at the floor for every n)
    for (long m = 2; m <= 8; ++m) {
        Coefficient floor2 = Coefficient(1) << (m - 2);
        for (long n = std::max(1L, m - 3); n <= 30; ++n) {
            Coefficient s = S_value(m, n);
            if (n >= m - 1) {
                CHECK(s >= floor2);
                if (n == m - 1) CHECK(s == floor2);
                if (m >= 3 && n > m - 1) CHECK(s > floor2);
            }
        }
    }
}

TEST_CASE("s recurrence") {
    // s_4 = n^2 + 3n + 6
    std::vector<Coefficient> s4 = s_sequence(4);
    CHECK(s4 == std::vector<Coefficient>{6, 3, 1});
    CHECK(s_sequence(2) == std::vector<Coefficient>{1});
    CHECK(s_sequence(3) == std::vector<Coefficient>{2, 1});
    for (long m = 2; m <= 10; ++m) CHECK(s_sequence_consistent(m));
}

TEST_CASE("shifted polynomial recurrence") {
    // g_4 = t^2 + 9t + 24
    CHECK(g_shifted(4) == std::vector<Coefficient>{24, 9, 1});
    for (long m = 2; m <= 10; ++m) {
        GShiftedChecks c = g_shifted_checks(m);
        CHECK(c.degree_ok);
        CHECK(c.monic);
        CHECK(c.constant_ok);
        CHECK(c.all_positive);
        CHECK(c.growth_ok);
    }
}

TEST_CASE("the L operator on the m = 2 family") {
    auto seq = [](long n) { return f_poly(2, n); };
    SparsePoly l2 = L_apply(seq, 2);
    // f_{2,2}^2 - f_{2,1} f_{2,3}
    CHECK(l2 == sub(mul(f_poly(2, 2), f_poly(2, 2)), mul(f_poly(2, 1), f_poly(2, 3))));
}

TEST_CASE("iterated operator scan evidence") {
    auto certs = conjecture39_scan(6, 3);
    CHECK_FALSE(certs.empty());
    for (const auto& c : certs) {
        CHECK(c.nonneg);
        CHECK_FALSE(c.first_negative.has_value());
    }
    // multiplicity of (1-z) in L^k is 2^k - 1 on nonzero entries
    for (const auto& c : certs) {
        if (c.one_minus_z_mult < 0) continue;  // zero polynomial rows
        auto caret = c.object_id.find('^');
        long k = std::stol(c.object_id.substr(caret + 1));
        CHECK(c.one_minus_z_mult == (1L << k) - 1);
    }
}
