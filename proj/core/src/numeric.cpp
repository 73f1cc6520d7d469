#include "sparsepoly/numeric.hpp"

#include <cmath>

namespace sparsepoly {

unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(bits * 0.30103) + 2;
}

PrecisionGuard::PrecisionGuard(unsigned bits)
    : saved_digits10_(static_cast<unsigned>(Real::default_precision())) {
    Real::default_precision(bits_to_digits10(bits));
}

PrecisionGuard::~PrecisionGuard() {
    Real::default_precision(saved_digits10_);
}

NumericValue eval_numeric(const SparsePoly& p, const BigComplex& x,
                          unsigned work_precision_bits) {
    if (work_precision_bits < 53)
        throw std::invalid_argument("eval_numeric: work_precision < 53");
    // A little headroom so sin/cos argument reduction for e*theta does not
    // eat into the requested precision.
    PrecisionGuard guard(work_precision_bits + 32);

    Real sum_re = 0, sum_im = 0;
    Real magnitude_sum = 0;   // sum of |c_i| * |x|^{e_i}
    Real op_weight = 0;       // sum of per-term condition factors

    const bool x_zero = (x.re == 0 && x.im == 0);
    Real log_r = 0, theta = 0;
    if (!x_zero) {
        log_r = log(sqrt(x.re * x.re + x.im * x.im));
        theta = atan2(x.im, x.re);
    }

    for (const auto& t : p.terms()) {
        Real c(t.coeff.get_mpz_t());
        if (t.exp == 0) {
            sum_re += c;
            magnitude_sum += abs(c);
            op_weight += abs(c) * 4;
            continue;
        }
        if (x_zero) continue;
        Real e(t.exp.get_mpz_t());
        Real u = e * log_r;
        Real v = e * theta;
        Real mag = abs(c) * exp(u);
        sum_re += c * exp(u) * cos(v);
        sum_im += c * exp(u) * sin(v);
        magnitude_sum += mag;
        // relative error of exp(u) is ~|u|*eps, phase error ~|v|*eps
        op_weight += mag * (8 + abs(u) + abs(v));
    }

    Real eps = ldexp(Real(1), 1 - static_cast<int>(work_precision_bits));
    // pad the bound a little; it is a bound, not an estimate
    Real bound = eps * (op_weight + magnitude_sum * Real(4 + p.term_count())) *
                 Real("1.000001");
    if (p.is_zero()) bound = 0;
    return NumericValue{BigComplex{sum_re, sum_im}, bound};
}

NumericValue eval_numeric(const SparsePoly& p, const std::complex<double>& x,
                          unsigned work_precision_bits) {
    PrecisionGuard guard(work_precision_bits + 32);
    return eval_numeric(p, BigComplex{Real(x.real()), Real(x.imag())},
                        work_precision_bits);
}

NumericValue eval_numeric_rational(const SparsePoly& p, const Rational& x,
                                   unsigned work_precision_bits) {
    PrecisionGuard guard(work_precision_bits + 32);
    Rational xc = x;
    xc.canonicalize();
    Real xr(xc.get_mpq_t());
    return eval_numeric(p, BigComplex{xr, Real(0)}, work_precision_bits);
}

}  // namespace sparsepoly
