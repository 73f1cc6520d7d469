#ifndef SPARSEPOLY_FAMILY_HPP
#define SPARSEPOLY_FAMILY_HPP

// Constructors for the exponent sequences h, the polynomials H_n and
// f_{m,n}, binomial coefficients, and finite differences.

#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "sparsepoly/poly.hpp"

namespace sparsepoly {

struct IndexOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact C(n,k); 0 when k < 0 or k > n. Rows up to n = 256 are cached
// (scans sweep contiguous n); beyond that the multiplicative formula is used.
Coefficient binomial(long n, long k);

class ExponentRule {
public:
    enum class Kind { Binomial, Geometric, ExplicitTable };

    static ExponentRule binomial_rule(long m);  // h_j = C(j,m), m >= 1
    static ExponentRule geometric();            // h_j = 2^j
    static ExponentRule table(std::vector<Exponent> values);

    Kind kind() const { return kind_; }
    long m() const { return m_; }
    const std::vector<Exponent>& values() const { return table_; }

    // h_j; throws IndexOutOfRange for a table overrun.
    Exponent h(long j) const;

    // True when h_{j+1} > h_j for all j in [lo, hi-1]; tables are validated
    // only on the range actually used.
    bool strictly_increasing_on(long lo, long hi) const;
    // h_j >= j - c for all j in [0, hi]; returns the smallest such c >= 0.
    // Used for certified tail bounds.
    long linear_defect(long hi) const;

    // CLI syntax: "binom:m", "geom", "table:0,1,3,7".
    static ExponentRule parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const ExponentRule&, const ExponentRule&) = default;

private:
    Kind kind_ = Kind::Binomial;
    long m_ = 1;
    std::vector<Exponent> table_;
};

SparsePoly H_poly(const ExponentRule& rule, long n);
SparsePoly f_poly(long m, long n);

// Delta^r H_n = sum_k (-1)^k C(r,k) H_{n+r-k}.
SparsePoly forward_difference(const ExponentRule& rule, long n, long r);

// Memoizing wrapper; cached polynomials equal fresh construction, and the
// cache is internally synchronized for concurrent readers.
class FamilyHandle {
public:
    explicit FamilyHandle(ExponentRule rule) : rule_(std::move(rule)) {}

    const ExponentRule& rule() const { return rule_; }
    SparsePoly H(long n) const;

private:
    ExponentRule rule_;
    mutable std::mutex mutex_;
    mutable std::map<long, SparsePoly> cache_;
};

}  // namespace sparsepoly

#endif
