#include "sparsepoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace sparsepoly {

SparsePoly SparsePoly::constant(Coefficient c) {
    return monomial(std::move(c), 0);
}

SparsePoly SparsePoly::monomial(Coefficient c, Exponent e) {
    SparsePoly p;
    if (c != 0) p.terms_.push_back(Term{std::move(e), std::move(c)});
    return p;
}

SparsePoly SparsePoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exp < b.exp; });
    SparsePoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Exponent& SparsePoly::degree() const {
    if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
    return terms_.back().exp;
}

const Coefficient& SparsePoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading coeff of zero polynomial");
    return terms_.back().coeff;
}

Coefficient SparsePoly::coeff_at(const Exponent& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& x) { return t.exp < x; });
    if (it != terms_.end() && it->exp == e) return it->coeff;
    return 0;
}

Coefficient SparsePoly::coefficient_sum() const {
    Coefficient s = 0;
    for (const auto& t : terms_) s += t.coeff;
    return s;
}

SparsePoly add(const SparsePoly& p, const SparsePoly& q) {
    SparsePoly r;
    std::vector<Term> out;
    out.reserve(p.term_count() + q.term_count());
    auto a = p.terms().begin(), ae = p.terms().end();
    auto b = q.terms().begin(), be = q.terms().end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->exp < b->exp)) {
            out.push_back(*a++);
        } else if (a == ae || b->exp < a->exp) {
            out.push_back(*b++);
        } else {
            Coefficient c = a->coeff + b->coeff;
            if (c != 0) out.push_back(Term{a->exp, std::move(c)});
            ++a;
            ++b;
        }
    }
    return SparsePoly::from_terms(std::move(out));
}

SparsePoly negate(const SparsePoly& p) {
    std::vector<Term> out = p.terms();
    for (auto& t : out) t.coeff = -t.coeff;
    return SparsePoly::from_terms(std::move(out));
}

SparsePoly sub(const SparsePoly& p, const SparsePoly& q) {
    return add(p, negate(q));
}

SparsePoly scalar_mul(const Coefficient& c, const SparsePoly& p) {
    if (c == 0) return {};
    std::vector<Term> out = p.terms();
    for (auto& t : out) t.coeff *= c;
    return SparsePoly::from_terms(std::move(out));
}

SparsePoly shift(const SparsePoly& p, const Exponent& e) {
    std::vector<Term> out = p.terms();
    for (auto& t : out) t.exp += e;
    return SparsePoly::from_terms(std::move(out));
}

SparsePoly mul(const SparsePoly& p, const SparsePoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::map<Exponent, Coefficient> acc;
    for (const auto& a : p.terms())
        for (const auto& b : q.terms())
            acc[a.exp + b.exp] += a.coeff * b.coeff;
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) out.push_back(Term{e, std::move(c)});
    SparsePoly r;
    // acc is already sorted and merged
    return SparsePoly::from_terms(std::move(out));
}

Rational pow_rational(const Rational& x, const Exponent& e) {
    if (e < 0) throw std::invalid_argument("pow_rational: negative exponent");
    Rational result = 1;
    Rational base = x;
    const mpz_class& bits = e;
    mp_bitcnt_t nbits = mpz_sizeinbase(bits.get_mpz_t(), 2);
    if (e == 0) return result;
    for (mp_bitcnt_t i = 0; i < nbits; ++i) {
        if (mpz_tstbit(bits.get_mpz_t(), i)) result *= base;
        if (i + 1 < nbits) base *= base;
    }
    return result;
}

Rational eval_exact(const SparsePoly& p, const Rational& xin) {
    Rational x = xin;
    x.canonicalize();  // gmp rational ops require canonical operands
    Rational sum = 0;
    Rational power = 1;  // x^{previous exponent}
    Exponent prev = 0;
    for (const auto& t : p.terms()) {
        Exponent gap = t.exp - prev;
        if (x == 0) {
            power = (t.exp == 0) ? 1 : 0;
        } else if (gap != 0) {
            power *= pow_rational(x, gap);
        }
        sum += Rational(t.coeff) * power;
        prev = t.exp;
    }
    return sum;
}

SparsePoly derivative(const SparsePoly& p) {
    std::vector<Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        if (t.exp == 0) continue;
        out.push_back(Term{t.exp - 1, t.coeff * t.exp});
    }
    return SparsePoly::from_terms(std::move(out));
}

SparsePoly div_one_minus_z(const SparsePoly& p) {
    if (p.is_zero()) return {};
    if (p.coefficient_sum() != 0)
        throw NotDivisible("div_one_minus_z: p(1) != 0");
    // If p = (1-z) q then q_e = sum_{i <= e} p_i; the partial sum is
    // constant across every gap between consecutive exponents of p.
    std::vector<Term> out;
    Coefficient run = 0;
    const auto& ts = p.terms();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        run += ts[i].coeff;
        if (run == 0) continue;
        // run is the quotient coefficient for exponents ts[i].exp .. next-1
        Exponent hi = (i + 1 < ts.size()) ? ts[i + 1].exp : ts[i].exp;
        // the final partial sum is zero (p(1) = 0), so i+1 < size here
        for (Exponent e = ts[i].exp; e < hi; ++e)
            out.push_back(Term{e, run});
    }
    return SparsePoly::from_terms(std::move(out));
}

std::pair<long, SparsePoly> one_minus_z_multiplicity(const SparsePoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("one_minus_z_multiplicity: zero polynomial");
    long k = 0;
    SparsePoly q = p;
    while (q.coefficient_sum() == 0) {
        q = div_one_minus_z(q);
        ++k;
    }
    return {k, std::move(q)};
}

std::vector<Coefficient> to_dense(const SparsePoly& p, long cap) {
    if (p.is_zero()) return {};
    if (p.degree() > cap)
        throw DegreeCapExceeded("to_dense: degree " + p.degree().get_str() +
                                " exceeds cap " + std::to_string(cap));
    std::vector<Coefficient> out(p.degree().get_ui() + 1, Coefficient(0));
    for (const auto& t : p.terms()) out[t.exp.get_ui()] = t.coeff;
    return out;
}

std::string format_poly(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << t.coeff.get_str();
        if (t.exp != 0) os << "*z^" << t.exp.get_str();
    }
    return os.str();
}

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

mpz_class parse_integer(std::string_view s, std::size_t& i) {
    skip_ws(s, i);
    std::size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw ParseError("expected integer at position " + std::to_string(start));
    return mpz_class(std::string(s.substr(start, i - start)));
}

}  // namespace

SparsePoly parse_poly(std::string_view text) {
    std::vector<Term> terms;
    std::size_t i = 0;
    skip_ws(text, i);
    if (i == text.size()) throw ParseError("empty polynomial text");
    bool negate_next = false;
    while (true) {
        mpz_class c = parse_integer(text, i);
        if (negate_next) c = -c;
        mpz_class e = 0;
        skip_ws(text, i);
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws(text, i);
            if (i + 1 >= text.size() || text[i] != 'z' || text[i + 1] != '^')
                throw ParseError("expected z^ after '*' at position " + std::to_string(i));
            i += 2;
            e = parse_integer(text, i);
            if (e < 0) throw ParseError("negative exponent");
        }
        terms.push_back(Term{std::move(e), std::move(c)});
        skip_ws(text, i);
        if (i == text.size()) break;
        if (text[i] == '+') {
            negate_next = false;
        } else if (text[i] == '-') {
            negate_next = true;
        } else {
            throw ParseError("unexpected character at position " + std::to_string(i));
        }
        // '-' as separator means subtract the following (unsigned) term;
        // "a + -b*z^e" also parses since the sign can sit on the integer.
        if (text[i] == '-') {
            ++i;
        } else {
            ++i;
        }
        skip_ws(text, i);
    }
    // duplicate exponents are rejected rather than merged: canonical input only
    SparsePoly p = SparsePoly::from_terms(terms);
    std::size_t nonzero_inputs = 0;
    for (const auto& t : terms)
        if (t.coeff != 0) ++nonzero_inputs;
    if (p.term_count() != nonzero_inputs)
        throw ParseError("duplicate exponents in polynomial text");
    return p;
}

}  // namespace sparsepoly
