#ifndef SPARSEPOLY_NUMERIC_HPP
#define SPARSEPOLY_NUMERIC_HPP

// High-precision complex evaluation of sparse polynomials with a certified
// rounding-error bound. Terms are computed as c * exp(e*log x), so an
// exponent as large as C(n,m) never overflows; the price is an error term
// proportional to |e*log x| * 2^{1-p}, which the returned bound accounts for.

#include <boost/multiprecision/mpfr.hpp>
#include <complex>

#include "sparsepoly/poly.hpp"

namespace sparsepoly {

using Real = boost::multiprecision::mpfr_float;

struct BigComplex {
    Real re, im;
};

struct NumericValue {
    BigComplex value;
    // Dominates the rounding error of value. Kept in extended precision:
    // near-root evaluations of huge-degree polynomials produce magnitudes far
    // outside double range, and the bound scales with them.
    Real error_bound;

    std::complex<double> to_double() const {
        return {static_cast<double>(value.re), static_cast<double>(value.im)};
    }
};

// Scoped working precision for the mpfr default, in bits (>= 53).
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_digits10_;
};

unsigned bits_to_digits10(unsigned bits);

NumericValue eval_numeric(const SparsePoly& p, const BigComplex& x,
                          unsigned work_precision_bits);

// Convenience wrapper for rational and double points.
NumericValue eval_numeric(const SparsePoly& p, const std::complex<double>& x,
                          unsigned work_precision_bits);
NumericValue eval_numeric_rational(const SparsePoly& p, const Rational& x,
                                   unsigned work_precision_bits);

}  // namespace sparsepoly

#endif
