#ifndef SPARSEPOLY_IDENTITIES_HPP
#define SPARSEPOLY_IDENTITIES_HPP

// Mechanical verification of the basic-identity and derivative-identity
// layers: generating function, finite transform, parity reflection, inverse
// transforms, support collapse, moment vanishing, difference identity,
// derivative identities and the generating-function PDE. Each checker is
// pure and returns a structured report with a witness on failure.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sparsepoly/family.hpp"
#include "sparsepoly/poly.hpp"

namespace sparsepoly {

struct InvalidDomain : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Verdict { Pass, Fail, NotApplicable, AmbiguousSupport };

std::string to_string(Verdict v);

struct Witness {
    std::string location;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string id;
    std::map<std::string, std::string> params;
    Verdict verdict = Verdict::Pass;
    std::optional<Witness> witness;

    bool pass() const { return verdict == Verdict::Pass; }
    // NotApplicable / AmbiguousSupport are verdicts, not failures.
    bool hard_failure() const { return verdict == Verdict::Fail; }
};

// Generating function, truncated at t^N and compared coefficientwise; the
// right side is expanded with genuine series arithmetic (powers of the
// truncated geometric series), independent of the H_n constructor.
IdentityReport check_gf(const ExponentRule& rule, long N);

// The halved series identity at a rational point |z| < 1: partial sums of
// both sides through N terms must agree within tol plus certified tail
// bounds. Throws InvalidDomain when |z| >= 1.
IdentityReport check_halving(const ExponentRule& rule, const Rational& z, long N,
                             double tol);

// Finite bivariate transform, exact equality of polynomials in t with
// sparse-polynomial coefficients.
IdentityReport check_finite_transform(const ExponentRule& rule, long n);

// Reflection identity; requires h_j == j (mod 2) on 0..n, otherwise the
// verdict is NotApplicable.
IdentityReport check_parity_reflection(const ExponentRule& rule, long n);

// Inverse binomial transform (nu = 0) and its derivative form (nu = 1).
IdentityReport check_inverse_transform(const ExponentRule& rule, long n, int nu);

// Support collapse of sum_k C(n,k)(-1)^k k^nu H_k: the result is supported
// on {h_{n-nu}, ..., h_n}. Requires h strictly increasing on that window,
// otherwise AmbiguousSupport.
IdentityReport check_support_collapse(const ExponentRule& rule, long n, long nu);

// Sweeps n over [n_lo, n_hi] (at least nu+2 values), fits each collapsed
// coefficient a_{i,nu}(n) by interpolation, and verifies the fit has degree
// <= nu with integer coefficients and reproduces the spare sample points.
// The fitted polynomials are reported in params.
IdentityReport check_support_collapse_fit(const ExponentRule& rule, long n_lo,
                                          long n_hi, long nu);

// Moment vanishing: sum_k (-1)^k C(n,k) C(k,j) k^nu = 0 for j <= n-nu-1.
IdentityReport check_moment_vanishing(long n, long nu);

// Difference identity Delta^r H_n = sum_k C(n,k) z^{h_{k+r}}.
IdentityReport check_difference_identity(const ExponentRule& rule, long n, long r);

// z f'_{m,n} = C(n,m) sum_i (-1)^i C(m,i) f_{m,n-i}, n >= m.
IdentityReport check_derivative_identity(long m, long n);

// f_{m,n} written in terms of derivatives; the rational weights are cleared
// to a common denominator so the comparison stays in integer arithmetic.
IdentityReport check_inverse_derivative(long m, long n);

// Order-m PDE for the generating function, compared coefficientwise through
// t^N after multiplying both sides by m!.
IdentityReport check_pde(long m, long N);

}  // namespace sparsepoly

#endif
