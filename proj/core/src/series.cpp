#include "sparsepoly/series.hpp"

namespace sparsepoly {

TruncatedSeries::TruncatedSeries(long order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.resize(order + 1);
}

TruncatedSeries::TruncatedSeries(long order, std::vector<SparsePoly> coeffs) {
    if (order < 0 || coeffs.size() != static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("series coefficient count must be order+1");
    coeffs_ = std::move(coeffs);
}

TruncatedSeries TruncatedSeries::one(long order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = SparsePoly::constant(1);
    return s;
}

TruncatedSeries TruncatedSeries::t_monomial(long order, const SparsePoly& c, long k) {
    TruncatedSeries s(order);
    if (k >= 0 && k <= order) s.coeffs_[k] = c;
    return s;
}

TruncatedSeries TruncatedSeries::geometric(long order) {
    TruncatedSeries s(order);
    for (auto& c : s.coeffs_) c = SparsePoly::constant(1);
    return s;
}

const SparsePoly& TruncatedSeries::coeff(long n) const {
    if (n < 0 || n > order())
        throw std::out_of_range("series coefficient index out of range");
    return coeffs_[n];
}

namespace {
long min_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.order(), b.order());
}
}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    long n = min_order(a, b);
    std::vector<SparsePoly> out(n + 1);
    for (long i = 0; i <= n; ++i) out[i] = add(a.coeff(i), b.coeff(i));
    return TruncatedSeries(n, std::move(out));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    long n = min_order(a, b);
    std::vector<SparsePoly> out(n + 1);
    for (long i = 0; i <= n; ++i) out[i] = sub(a.coeff(i), b.coeff(i));
    return TruncatedSeries(n, std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    long n = min_order(a, b);
    std::vector<SparsePoly> out(n + 1);
    for (long i = 0; i <= n; ++i)
        for (long j = 0; i + j <= n; ++j) {
            if (a.coeff(i).is_zero() || b.coeff(j).is_zero()) continue;
            out[i + j] = add(out[i + j], mul(a.coeff(i), b.coeff(j)));
        }
    return TruncatedSeries(n, std::move(out));
}

TruncatedSeries scalar_mul(const Coefficient& c, const TruncatedSeries& a) {
    std::vector<SparsePoly> out(a.order() + 1);
    for (long i = 0; i <= a.order(); ++i) out[i] = scalar_mul(c, a.coeff(i));
    return TruncatedSeries(a.order(), std::move(out));
}

TruncatedSeries poly_mul(const SparsePoly& p, const TruncatedSeries& a) {
    std::vector<SparsePoly> out(a.order() + 1);
    for (long i = 0; i <= a.order(); ++i) out[i] = mul(p, a.coeff(i));
    return TruncatedSeries(a.order(), std::move(out));
}

TruncatedSeries t_derivative(const TruncatedSeries& a) {
    if (a.order() == 0) return TruncatedSeries(0);
    std::vector<SparsePoly> out(a.order());
    for (long i = 1; i <= a.order(); ++i)
        out[i - 1] = scalar_mul(Coefficient(i), a.coeff(i));
    return TruncatedSeries(a.order() - 1, std::move(out));
}

TruncatedSeries z_derivative(const TruncatedSeries& a) {
    std::vector<SparsePoly> out(a.order() + 1);
    for (long i = 0; i <= a.order(); ++i) out[i] = derivative(a.coeff(i));
    return TruncatedSeries(a.order(), std::move(out));
}

TruncatedSeries truncate(const TruncatedSeries& a, long order) {
    long n = std::min(order, a.order());
    std::vector<SparsePoly> out(a.coeffs().begin(), a.coeffs().begin() + n + 1);
    return TruncatedSeries(n, std::move(out));
}

}  // namespace sparsepoly
