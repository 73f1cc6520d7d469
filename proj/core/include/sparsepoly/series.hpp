#ifndef SPARSEPOLY_SERIES_HPP
#define SPARSEPOLY_SERIES_HPP

// Formal power series in t, truncated at a fixed order, with exact sparse
// polynomials in z as coefficients. Carrier for bivariate identities: every
// manipulation is t-graded, so a flat bivariate term list is never needed.

#include <vector>

#include "sparsepoly/poly.hpp"

namespace sparsepoly {

class TruncatedSeries {
public:
    // the zero series of the given order
    explicit TruncatedSeries(long order);
    // coeffs[n] is the coefficient of t^n; length must be order+1
    TruncatedSeries(long order, std::vector<SparsePoly> coeffs);

    static TruncatedSeries one(long order);
    // the t-polynomial c * t^k
    static TruncatedSeries t_monomial(long order, const SparsePoly& c, long k);
    // sum_{i<=order} t^i, i.e. 1/(1-t) truncated
    static TruncatedSeries geometric(long order);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const SparsePoly& coeff(long n) const;
    const std::vector<SparsePoly>& coeffs() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<SparsePoly> coeffs_;
};

// Mixed orders truncate to the smaller one.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scalar_mul(const Coefficient& c, const TruncatedSeries& a);
TruncatedSeries poly_mul(const SparsePoly& p, const TruncatedSeries& a);
// Formal d/dt; the valid order drops by one.
TruncatedSeries t_derivative(const TruncatedSeries& a);
// Termwise z-derivative of each coefficient (order unchanged).
TruncatedSeries z_derivative(const TruncatedSeries& a);
TruncatedSeries truncate(const TruncatedSeries& a, long order);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

}  // namespace sparsepoly

#endif
