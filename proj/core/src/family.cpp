#include "sparsepoly/family.hpp"

#include <sstream>

namespace sparsepoly {

namespace {

constexpr long kPascalCacheRows = 256;

const std::vector<std::vector<Coefficient>>& pascal_rows() {
    static const std::vector<std::vector<Coefficient>> rows = [] {
        std::vector<std::vector<Coefficient>> r(kPascalCacheRows + 1);
        r[0] = {Coefficient(1)};
        for (long n = 1; n <= kPascalCacheRows; ++n) {
            r[n].resize(n + 1);
            r[n][0] = 1;
            r[n][n] = 1;
            for (long k = 1; k < n; ++k) r[n][k] = r[n - 1][k - 1] + r[n - 1][k];
        }
        return r;
    }();
    return rows;
}

}  // namespace

Coefficient binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (n <= kPascalCacheRows) return pascal_rows()[n][k];
    if (k > n - k) k = n - k;
    Coefficient c = 1;
    for (long i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;  // exact at every step
    }
    return c;
}

ExponentRule ExponentRule::binomial_rule(long m) {
    if (m < 1) throw std::invalid_argument("binomial rule requires m >= 1");
    ExponentRule r;
    r.kind_ = Kind::Binomial;
    r.m_ = m;
    return r;
}

ExponentRule ExponentRule::geometric() {
    ExponentRule r;
    r.kind_ = Kind::Geometric;
    return r;
}

ExponentRule ExponentRule::table(std::vector<Exponent> values) {
    for (const auto& v : values)
        if (v < 0) throw std::invalid_argument("table exponents must be >= 0");
    ExponentRule r;
    r.kind_ = Kind::ExplicitTable;
    r.table_ = std::move(values);
    return r;
}

Exponent ExponentRule::h(long j) const {
    if (j < 0) throw IndexOutOfRange("h_j needs j >= 0");
    switch (kind_) {
        case Kind::Binomial:
            return binomial(j, m_);
        case Kind::Geometric: {
            Exponent e;
            mpz_ui_pow_ui(e.get_mpz_t(), 2, static_cast<unsigned long>(j));
            return e;
        }
        case Kind::ExplicitTable:
            if (static_cast<std::size_t>(j) >= table_.size())
                throw IndexOutOfRange("table rule has no h_" + std::to_string(j));
            return table_[j];
    }
    throw std::logic_error("unreachable");
}

bool ExponentRule::strictly_increasing_on(long lo, long hi) const {
    for (long j = lo; j < hi; ++j)
        if (!(h(j + 1) > h(j))) return false;
    return true;
}

long ExponentRule::linear_defect(long hi) const {
    switch (kind_) {
        case Kind::Binomial:
            // C(j,m) >= j - m + 1, so h_j >= j - (m-1)
            return m_ - 1;
        case Kind::Geometric:
            return 0;  // 2^j >= j
        case Kind::ExplicitTable: {
            long c = 0;
            for (long j = 0; j <= hi; ++j) {
                Exponent d = j - h(j);
                if (d > c) c = d.get_si();
            }
            return c;
        }
    }
    throw std::logic_error("unreachable");
}

ExponentRule ExponentRule::parse(std::string_view text) {
    if (text == "geom") return geometric();
    if (text.starts_with("binom:")) {
        long m = std::stol(std::string(text.substr(6)));
        return binomial_rule(m);
    }
    if (text.starts_with("table:")) {
        std::vector<Exponent> vals;
        std::string rest(text.substr(6));
        std::istringstream is(rest);
        std::string tok;
        while (std::getline(is, tok, ','))
            vals.emplace_back(tok);
        if (vals.empty()) throw std::invalid_argument("empty table rule");
        return table(std::move(vals));
    }
    throw std::invalid_argument("bad rule syntax: " + std::string(text) +
                                " (expected binom:m, geom, or table:a,b,...)");
}

std::string ExponentRule::to_string() const {
    switch (kind_) {
        case Kind::Binomial:
            return "binom:" + std::to_string(m_);
        case Kind::Geometric:
            return "geom";
        case Kind::ExplicitTable: {
            std::string s = "table:";
            for (std::size_t i = 0; i < table_.size(); ++i) {
                if (i) s += ',';
                s += table_[i].get_str();
            }
            return s;
        }
    }
    throw std::logic_error("unreachable");
}

SparsePoly H_poly(const ExponentRule& rule, long n) {
    if (n < 0) throw std::invalid_argument("H_poly needs n >= 0");
    std::vector<Term> terms;
    terms.reserve(n + 1);
    for (long j = 0; j <= n; ++j)
        terms.push_back(Term{rule.h(j), binomial(n, j)});
    // equal exponents merge here; for binom:m all j < m land on z^0
    return SparsePoly::from_terms(std::move(terms));
}

SparsePoly f_poly(long m, long n) {
    return H_poly(ExponentRule::binomial_rule(m), n);
}

SparsePoly forward_difference(const ExponentRule& rule, long n, long r) {
    if (n < 0 || r < 0) throw std::invalid_argument("forward_difference needs n,r >= 0");
    SparsePoly acc;
    for (long k = 0; k <= r; ++k) {
        Coefficient c = binomial(r, k);
        if (k % 2) c = -c;
        acc = add(acc, scalar_mul(c, H_poly(rule, n + r - k)));
    }
    return acc;
}

SparsePoly FamilyHandle::H(long n) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
    }
    SparsePoly p = H_poly(rule_, n);
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(n, std::move(p)).first->second;
}

}  // namespace sparsepoly
