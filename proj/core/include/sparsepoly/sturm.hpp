#ifndef SPARSEPOLY_STURM_HPP
#define SPARSEPOLY_STURM_HPP

// Exact real-root counting and isolation via Sturm sequences over
// arbitrary-precision integers. Remainders are computed as pseudo-remainders
// and reduced to primitive form with the sign kept intact, so the chain
// stays integral while the Sturm sign-variation property is preserved.

#include <vector>

#include "sparsepoly/poly.hpp"

namespace sparsepoly {

// dense integer polynomial, index = degree
using DensePoly = std::vector<Coefficient>;

DensePoly dense_derivative(const DensePoly& p);
Coefficient dense_eval(const DensePoly& p, const Coefficient& x);
Rational dense_eval_rational(const DensePoly& p, const Rational& x);
int dense_sign_at(const DensePoly& p, const Rational& x);

class SturmChain {
public:
    // p must be nonzero; a nontrivial gcd(p, p') is divided out first, so
    // counting is over distinct roots.
    explicit SturmChain(DensePoly p);

    // number of distinct real roots in (a, b]; requires p(a), p(b) != 0
    long count_in(const Rational& a, const Rational& b) const;
    // distinct real roots on the whole line
    long count_all() const;
    // roots in (-inf, b]
    long count_below(const Rational& b) const;

    // a bound B with all real roots in (-B, B)
    Rational root_bound() const;

    const DensePoly& square_free_part() const { return chain_.front(); }
    bool was_square_free() const { return was_square_free_; }

private:
    long variations_at(const Rational& x) const;
    long variations_at_minus_inf() const;
    long variations_at_plus_inf() const;

    std::vector<DensePoly> chain_;
    bool was_square_free_ = true;
};

struct RationalInterval {
    Rational lo, hi;
};

// Pairwise disjoint isolating intervals, one per distinct real root of p in
// (-inf, 0); intervals are refined by bisection to width <= max_width.
std::vector<RationalInterval> isolate_negative_roots(const SturmChain& chain,
                                                     const Rational& max_width);

}  // namespace sparsepoly

#endif
