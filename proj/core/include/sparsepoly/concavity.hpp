#ifndef SPARSEPOLY_CONCAVITY_HPP
#define SPARSEPOLY_CONCAVITY_HPP

// Log-concavity machinery: the F, F^(k), G^(k) quotients, the g_nu
// decomposition with its symmetric coefficients, the S/s/g recurrences, the
// iterated log-concavity operator and the scanner behind the positivity
// conjecture for its cofactors.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sparsepoly/poly.hpp"

namespace sparsepoly {

struct ConcavityCertificate {
    std::string object_id;   // e.g. "F(3,7)" or "L^2(f_2,5)"
    bool nonneg = true;
    std::optional<Term> first_negative;
    long one_minus_z_mult = 0;
};

// (f_{m,n}^2 - f_{m,n-1} f_{m,n+1}) / (1 - z), exact.
SparsePoly F_poly(long m, long n);

// (f_{m,n}^2 - f_{m,n-k} f_{m,n+k}) / (1 - z); k = 1 coincides with F_poly.
SparsePoly F_k_poly(long m, long n, long k);

// (f_{m,2n} - f_{m,n-k} f_{m,n+k}) / (z - 1).
SparsePoly G_poly(long m, long n, long k);

struct GnuDecomposition {
    SparsePoly g;                      // g_nu
    std::vector<Coefficient> a;        // symmetric coefficients a_{nu,j}, j = 0..nu
    long sign_change_index = -1;       // last negative j (ignoring leading zeros)
    bool closed_form_ok = true;        // a_{nu,j} matches the rational closed form
    bool symmetric = true;             // a_{nu,j} == a_{nu,nu-j}
    bool vanishes_at_one = true;       // g_nu(1) == 0
    bool single_sign_change = true;    // negatives, at most one zero, then nonneg
};

// The Cauchy-product slice g_nu of (1-z) F_{m,n} together with its
// symmetrized coefficients and the structural checks the proof relies on.
GnuDecomposition g_nu_decomposition(long m, long n, long nu);

// Reassembles (1-z) F_{m,n} as sum_nu g_nu; true when the identity holds.
bool g_nu_reassembles(long m, long n);

// S_m(n) = F_{m,n}(0), from the explicit binomial-sum formula.
Coefficient S_value(long m, long n);

// s_m as an exact polynomial in n (coefficient i of n^i), via the
// three-term recurrence s_2 = 1, s_3 = n+2.
std::vector<Coefficient> s_sequence(long m);

// Consistency of s_m with the definition through S_m, sampled at 2m
// integers n > m.
bool s_sequence_consistent(long m);

// g_m(t) = s_m(t + m - 1), via its own recurrence; coefficient i of t^i.
std::vector<Coefficient> g_shifted(long m);

struct GShiftedChecks {
    bool degree_ok = true;        // deg = m-2
    bool monic = true;            // leading coefficient 1
    bool constant_ok = true;      // 2^{m-2} (m-1)!
    bool all_positive = true;
    bool growth_ok = true;        // a_{i,m} > 2(m-2) a_{i,m-1}
};
GShiftedChecks g_shifted_checks(long m);

// a_n^2 - a_{n-1} a_{n+1} for an indexed polynomial sequence.
SparsePoly L_apply(const std::function<SparsePoly(long)>& seq, long n);

// Iterated operator scan for the m = 2 family: for k = 1..k_max and
// n = k..n_max, reports the multiplicity of (1-z) in L^k(f_{2,n}) and
// whether the cofactor after (1-z)^{2^k-1} has only positive coefficients.
// Rows are evidence; nothing here asserts.
std::vector<ConcavityCertificate> conjecture39_scan(long n_max, long k_max);

}  // namespace sparsepoly

#endif
