#ifndef SPARSEPOLY_POLY_HPP
#define SPARSEPOLY_POLY_HPP

// Exact sparse polynomials over arbitrary-precision integers. A polynomial
// is stored as a list of (exponent, coefficient) terms with strictly
// increasing exponents and no zero coefficients; the zero polynomial is the
// empty list. This canonical form makes equality a plain list comparison.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sparsepoly {

using Coefficient = mpz_class;
using Exponent = mpz_class;   // always >= 0
using Rational = mpq_class;   // canonical: reduced, denominator > 0

struct Term {
    Exponent exp;
    Coefficient coeff;

    friend bool operator==(const Term& a, const Term& b) {
        return a.exp == b.exp && a.coeff == b.coeff;
    }
};

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class SparsePoly {
public:
    SparsePoly() = default;

    static SparsePoly constant(Coefficient c);
    static SparsePoly monomial(Coefficient c, Exponent e);
    // Sorts, merges equal exponents and drops zero coefficients.
    static SparsePoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Degree of the zero polynomial is not defined; callers check is_zero().
    const Exponent& degree() const;
    const Coefficient& leading_coeff() const;
    Coefficient coeff_at(const Exponent& e) const;

    Coefficient coefficient_sum() const;  // equals eval_exact at 1

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    std::vector<Term> terms_;
};

SparsePoly add(const SparsePoly& p, const SparsePoly& q);
SparsePoly sub(const SparsePoly& p, const SparsePoly& q);
SparsePoly mul(const SparsePoly& p, const SparsePoly& q);
SparsePoly negate(const SparsePoly& p);
SparsePoly scalar_mul(const Coefficient& c, const SparsePoly& p);
// Multiply by z^e (e >= 0).
SparsePoly shift(const SparsePoly& p, const Exponent& e);

inline SparsePoly operator+(const SparsePoly& p, const SparsePoly& q) { return add(p, q); }
inline SparsePoly operator-(const SparsePoly& p, const SparsePoly& q) { return sub(p, q); }
inline SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) { return mul(p, q); }
inline SparsePoly operator-(const SparsePoly& p) { return negate(p); }

// x^e for arbitrary-precision e >= 0, by square-and-multiply on the bits of e.
Rational pow_rational(const Rational& x, const Exponent& e);

// Exact value of p at a rational point; powers are built incrementally
// across the exponent gaps so huge degrees with few terms stay cheap.
Rational eval_exact(const SparsePoly& p, const Rational& x);

SparsePoly derivative(const SparsePoly& p);

// Exact quotient p / (1 - z); requires p(1) = 0, else throws NotDivisible.
// Works by running cumulative sums across the exponent gaps of p; a run of
// equal nonzero partial sums between two sparse exponents is emitted as a
// block of terms.
SparsePoly div_one_minus_z(const SparsePoly& p);

// Largest k with (1-z)^k | p together with the cofactor p/(1-z)^k.
// Requires p != 0; the cofactor has nonzero value at 1.
std::pair<long, SparsePoly> one_minus_z_multiplicity(const SparsePoly& p);

// Dense coefficient vector [c_0, ..., c_deg]; throws DegreeCapExceeded when
// deg(p) > cap. The zero polynomial densifies to an empty vector.
std::vector<Coefficient> to_dense(const SparsePoly& p, long cap);

constexpr long kDefaultDegreeCap = 20000;

// Canonical text format, ascending exponents, e.g. "4 + 3*z^1 + 1*z^3".
std::string format_poly(const SparsePoly& p);
SparsePoly parse_poly(std::string_view text);

}  // namespace sparsepoly

#endif
