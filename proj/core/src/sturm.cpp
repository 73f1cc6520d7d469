#include "sparsepoly/sturm.hpp"

#include <algorithm>

namespace sparsepoly {

namespace {

long deg(const DensePoly& p) { return static_cast<long>(p.size()) - 1; }

void trim(DensePoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// divide by the positive content; the sign of every coefficient is kept
void make_primitive(DensePoly& p) {
    Coefficient content = 0;
    for (const auto& c : p) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        if (content == 1) return;
    }
    if (content == 0 || content == 1) return;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

// pseudo-remainder of a by b (deg a >= deg b >= 0): rem(lc(b)^{da-db+1} a, b)
DensePoly pseudo_rem(DensePoly a, const DensePoly& b) {
    long da = deg(a), db = deg(b);
    const Coefficient& lb = b.back();
    Coefficient scale = 1;
    for (long i = 0; i < da - db + 1; ++i) scale *= lb;
    for (auto& c : a) c *= scale;
    for (long k = da; k >= db; --k) {
        if (a[k] == 0) continue;
        Coefficient q = a[k] / lb;  // exact by the pre-scaling
        for (long i = 0; i <= db; ++i) a[k - db + i] -= q * b[i];
    }
    trim(a);
    return a;
}

int sign_of(const Coefficient& c) { return sgn(c); }

// exact quotient p / g over the integers (g | p)
DensePoly exact_div(const DensePoly& p, const DensePoly& g) {
    DensePoly rem = p;
    DensePoly q(p.size() - g.size() + 1);
    for (long k = deg(rem); k >= deg(g); --k) {
        if (rem[k] == 0) continue;
        Coefficient c;
        mpz_divexact(c.get_mpz_t(), rem[k].get_mpz_t(), g.back().get_mpz_t());
        q[k - deg(g)] = c;
        for (long i = 0; i <= deg(g); ++i) rem[k - deg(g) + i] -= c * g[i];
    }
    trim(rem);
    if (!rem.empty()) throw std::logic_error("exact_div: division not exact");
    trim(q);
    return q;
}

std::vector<DensePoly> build_chain(DensePoly p0) {
    make_primitive(p0);
    std::vector<DensePoly> chain;
    chain.push_back(p0);
    DensePoly p1 = dense_derivative(p0);
    trim(p1);
    if (p1.empty()) return chain;
    make_primitive(p1);
    chain.push_back(p1);
    while (true) {
        const DensePoly& a = chain[chain.size() - 2];
        const DensePoly& b = chain.back();
        if (deg(b) < 0) break;
        if (deg(a) < deg(b)) throw std::logic_error("sturm: degree order violated");
        DensePoly r = pseudo_rem(a, b);
        if (r.empty()) break;
        // the next Sturm element is -(a mod b) up to a positive factor;
        // pseudo_rem scaled by lc(b)^{delta+1}, whose sign must be undone
        long delta = deg(a) - deg(b);
        bool scale_negative = (sign_of(b.back()) < 0) && ((delta + 1) % 2 == 1);
        if (!scale_negative)
            for (auto& c : r) c = -c;
        make_primitive(r);
        chain.push_back(std::move(r));
    }
    return chain;
}

}  // namespace

DensePoly dense_derivative(const DensePoly& p) {
    if (p.size() <= 1) return {};
    DensePoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Coefficient(i);
    return d;
}

Coefficient dense_eval(const DensePoly& p, const Coefficient& x) {
    Coefficient v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

Rational dense_eval_rational(const DensePoly& p, const Rational& x) {
    Rational v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + Rational(p[i]);
    return v;
}

int dense_sign_at(const DensePoly& p, const Rational& x) {
    // homogenized Horner: sign of p(u/v) = sign of sum c_i u^i v^{d-i}
    const mpz_class& u = x.get_num();
    const mpz_class& v = x.get_den();
    Coefficient acc = 0;
    Coefficient vp = 1;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * u + p[i] * vp;
        if (i > 0) vp *= v;
    }
    return sign_of(acc);
}

SturmChain::SturmChain(DensePoly p) {
    trim(p);
    if (p.empty()) throw std::invalid_argument("SturmChain: zero polynomial");
    chain_ = build_chain(std::move(p));
    if (deg(chain_.back()) > 0) {
        // nontrivial gcd(p, p'): divide it out and rebuild over the
        // square-free part so distinct roots are counted
        was_square_free_ = false;
        DensePoly g = chain_.back();
        DensePoly sf = exact_div(chain_.front(), g);
        make_primitive(sf);
        chain_ = build_chain(std::move(sf));
    }
}

long SturmChain::variations_at(const Rational& x) const {
    const mpz_class& u = x.get_num();
    const mpz_class& v = x.get_den();
    int prev = 0;
    long var = 0;
    for (const auto& p : chain_) {
        // sign of p(u/v) via homogenized integer Horner
        Coefficient acc = 0;
        Coefficient vp = 1;
        // walk coefficients from the top; multiply the running value by u
        // and add c_i * v^{d-i}
        for (std::size_t i = p.size(); i-- > 0;) {
            acc = acc * u + p[i] * vp;
            if (i > 0) vp *= v;
        }
        int s = sign_of(acc);
        if (s != 0) {
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
    }
    return var;
}

long SturmChain::variations_at_minus_inf() const {
    int prev = 0;
    long var = 0;
    for (const auto& p : chain_) {
        int s = sign_of(p.back());
        if (deg(p) % 2 == 1) s = -s;
        if (s != 0) {
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
    }
    return var;
}

long SturmChain::variations_at_plus_inf() const {
    int prev = 0;
    long var = 0;
    for (const auto& p : chain_) {
        int s = sign_of(p.back());
        if (s != 0) {
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
    }
    return var;
}

long SturmChain::count_in(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

long SturmChain::count_all() const {
    return variations_at_minus_inf() - variations_at_plus_inf();
}

long SturmChain::count_below(const Rational& b) const {
    return variations_at_minus_inf() - variations_at(b);
}

Rational SturmChain::root_bound() const {
    const DensePoly& p = chain_.front();
    Coefficient maxc = 0;
    for (const auto& c : p) {
        Coefficient a = abs(c);
        if (a > maxc) maxc = a;
    }
    return 1 + Rational(maxc) / Rational(abs(p.back()));
}

std::vector<RationalInterval> isolate_negative_roots(const SturmChain& chain,
                                                     const Rational& max_width) {
    std::vector<RationalInterval> out;
    Rational lo = -chain.root_bound();
    Rational hi = 0;
    if (dense_eval_rational(chain.square_free_part(), hi) == 0)
        throw std::invalid_argument("isolate_negative_roots: root at 0");
    struct Node { Rational lo, hi; long vlo, vhi; };
    // variation differences are cached at interval endpoints relative to hi=0;
    // the count in (lo, hi] is vlo - vhi
    std::vector<Node> stack;
    Node root;
    root.lo = lo;
    root.hi = hi;
    root.vlo = chain.count_in(lo, hi);
    root.vhi = 0;
    stack.push_back(root);
    while (!stack.empty()) {
        Node nd = stack.back();
        stack.pop_back();
        long cnt = nd.vlo - nd.vhi;
        if (cnt == 0) continue;
        if (cnt == 1 && nd.hi - nd.lo <= max_width) {
            out.push_back(RationalInterval{nd.lo, nd.hi});
            continue;
        }
        Rational mid = (nd.lo + nd.hi) / 2;
        long cm = chain.count_in(mid, nd.hi);
        Node left{nd.lo, mid, nd.vlo, nd.vhi + cm};
        Node right{mid, nd.hi, nd.vhi + cm, nd.vhi};
        stack.push_back(left);
        stack.push_back(right);
    }
    std::sort(out.begin(), out.end(),
              [](const RationalInterval& a, const RationalInterval& b) {
                  return a.lo < b.lo;
              });
    return out;
}

}  // namespace sparsepoly
