#include "lipeq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <ostream>
#include <sstream>

namespace lipeq {

const Int& SparsePoly::leading_coeff() const {
    static const Int kZero = 0;
    return terms_.empty() ? kZero : terms_.begin()->second;
}

void SparsePoly::add_term(Exp e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& g) {
    for (const auto& [e, c] : g.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& g) {
    for (const auto& [e, c] : g.terms_) add_term(e, -c);
    return *this;
}

SparsePoly operator*(const SparsePoly& f, const SparsePoly& g) {
    SparsePoly r;
    for (const auto& [ef, cf] : f)
        for (const auto& [eg, cg] : g) r.add_term(ef + eg, cf * cg);
    return r;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& g) { return *this = *this * g; }

SparsePoly& SparsePoly::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Rat SparsePoly::evaluate(const Rat& x) const {
    Rat acc = 0;
    Rat p = 1;
    Exp last = 0;
    // ascending order so powers build up incrementally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (; last < it->first; ++last) p *= x;
        acc += Rat(it->second) * p;
    }
    return acc;
}

int SparsePoly::sign_at(const Rat& x) const {
    if (terms_.empty()) return 0;
    // sign(f(p/q)) = sign(sum c_i p^{e_i} q^{d-e_i}) for q > 0
    const Int p = numerator(x), q = denominator(x);
    const Exp d = degree();
    Int acc = 0;
    for (const auto& [e, c] : terms_)
        acc += c * int_pow(p, static_cast<unsigned long long>(e)) *
               int_pow(q, static_cast<unsigned long long>(d - e));
    return acc.sign();
}

SparsePoly derivative(const SparsePoly& f) {
    SparsePoly r;
    for (const auto& [e, c] : f)
        if (e > 0) r.add_term(e - 1, c * e);
    return r;
}

Int content(const SparsePoly& f) {
    Int g = 0;
    for (const auto& [e, c] : f) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

SparsePoly primitive_part(const SparsePoly& f) {
    if (f.is_zero()) return f;
    Int c = content(f);
    if (f.leading_coeff() < 0) c = -c;
    SparsePoly r;
    for (const auto& [e, v] : f) r.add_term(e, v / c);
    return r;
}

SparsePoly exact_div(const SparsePoly& f, const SparsePoly& g) {
    if (g.is_zero()) throw DivideByZero();
    SparsePoly q, r = f;
    const auto eg = g.degree();
    const Int& cg = g.leading_coeff();
    while (!r.is_zero() && r.degree() >= eg) {
        const Int& cr = r.leading_coeff();
        if (cr % cg != 0) throw NotDivisible();
        SparsePoly t = SparsePoly::monomial(cr / cg, r.degree() - eg);
        q += t;
        r -= t * g;
    }
    if (!r.is_zero()) throw NotDivisible();
    return q;
}

bool divides(const SparsePoly& g, const SparsePoly& f) {
    if (g.is_zero()) return f.is_zero();
    try {
        exact_div(f, g);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

SparsePoly reciprocal(const SparsePoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    const auto d = f.degree();
    SparsePoly r;
    for (const auto& [e, c] : f) r.add_term(d - e, c);
    return r;
}

namespace {

// Pseudo-remainder of a by b: returns r with lc(b)^(deg a - deg b + 1) * a = q*b + r.
SparsePoly pseudo_rem(const SparsePoly& a, const SparsePoly& b) {
    const auto eb = b.degree();
    const Int& cb = b.leading_coeff();
    long long d = a.degree() - eb + 1;
    if (d < 0) d = 0;
    SparsePoly r = a;
    long long steps = 0;
    while (!r.is_zero() && r.degree() >= eb) {
        SparsePoly t = SparsePoly::monomial(r.leading_coeff(), r.degree() - eb);
        r *= cb;
        r -= t * b;
        ++steps;
    }
    for (; steps < d; ++steps) r *= cb;
    return r;
}

}  // namespace

SparsePoly poly_gcd(const SparsePoly& f, const SparsePoly& g) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("poly_gcd: both arguments are zero");
    if (f.is_zero()) return primitive_part(g);
    if (g.is_zero()) return primitive_part(f);
    SparsePoly a = primitive_part(f), b = primitive_part(g);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        SparsePoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return a;  // primitive with positive leading coefficient
}

SparsePoly squarefree_part(const SparsePoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.degree() == 0) return f;
    return exact_div(f, poly_gcd(f, derivative(f)));
}

Interval::Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo < hi)) throw std::invalid_argument("Interval requires lo < hi");
}

namespace {

// Divides out roots sitting exactly on an endpoint so open-interval counting
// stays exact.
SparsePoly strip_endpoint_roots(SparsePoly g, const Rat& point) {
    const SparsePoly lin =
        SparsePoly::monomial(denominator(point), 1) - SparsePoly(Int(numerator(point)));
    while (!g.is_constant() && g.sign_at(point) == 0) g = exact_div(g, lin);
    return g;
}

SparsePoly prepare_for_counting(const SparsePoly& f, const Interval& I) {
    SparsePoly g = squarefree_part(f);
    g = strip_endpoint_roots(std::move(g), I.lo);
    g = strip_endpoint_roots(std::move(g), I.hi);
    return g;
}

// Divides by the (positive) content without touching the sign; chain elements
// may only be rescaled by positive constants.
SparsePoly divide_content(const SparsePoly& f) {
    if (f.is_zero()) return f;
    const Int c = content(f);
    SparsePoly r;
    for (const auto& [e, v] : f) r.add_term(e, v / c);
    return r;
}

std::vector<SparsePoly> sturm_chain(const SparsePoly& g) {
    std::vector<SparsePoly> chain;
    chain.push_back(divide_content(g));
    SparsePoly d = divide_content(derivative(g));
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const SparsePoly& p0 = chain[chain.size() - 2];
        const SparsePoly& p1 = chain.back();
        SparsePoly r = pseudo_rem(p0, p1);
        if (r.is_zero()) break;
        // next element must be a positive multiple of -(p0 mod p1); the
        // pseudo-remainder multiplier lc(p1)^d may be negative, in which
        // case r already carries the flipped sign.
        long long d0 = p0.degree() - p1.degree() + 1;
        bool neg_mult = p1.leading_coeff() < 0 && (d0 & 1);
        SparsePoly next = divide_content(r);
        if (!neg_mult) next = -next;
        chain.push_back(std::move(next));
    }
    return chain;
}

int sign_variations(const std::vector<SparsePoly>& chain, const Rat& x) {
    int vars = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

}  // namespace

int sturm_count(const SparsePoly& f, const Interval& I) {
    SparsePoly g = prepare_for_counting(f, I);
    if (g.is_constant()) return 0;
    auto chain = sturm_chain(g);
    return sign_variations(chain, I.lo) - sign_variations(chain, I.hi);
}

Interval bisect_root(const SparsePoly& f, const Interval& I, const Rat& tol) {
    if (tol <= 0) throw std::invalid_argument("bisect_root: tol must be positive");
    int n = sturm_count(f, I);
    if (n != 1) throw RootCountNotOne(n);
    SparsePoly g = prepare_for_counting(f, I);
    Rat lo = I.lo, hi = I.hi;
    int slo = g.sign_at(lo);
    while (hi - lo > tol) {
        Rat mid = (lo + hi) / 2;
        int sm = g.sign_at(mid);
        if (sm == 0) {
            // the root is exactly mid; return a straddling interval inside I
            Rat h = tol / 2;
            if (mid - h <= I.lo) h = (mid - I.lo) / 2;
            if (mid + h >= I.hi) h = std::min(h, Rat((I.hi - mid) / 2));
            return Interval(mid - h, mid + h);
        }
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return Interval(lo, hi);
}

namespace {

constexpr long long kMaxCyclotomicIndex = 10000;
std::map<long long, SparsePoly> g_cyclotomic_cache;
std::mutex g_cyclotomic_mutex;

SparsePoly cyclotomic_unlocked(long long n) {
    auto it = g_cyclotomic_cache.find(n);
    if (it != g_cyclotomic_cache.end()) return it->second;
    SparsePoly p = SparsePoly::monomial(1, n) - SparsePoly::one();
    for (long long d = 1; d <= n / 2; ++d)
        if (n % d == 0) p = exact_div(p, cyclotomic_unlocked(d));
    g_cyclotomic_cache.emplace(n, p);
    return p;
}

}  // namespace

SparsePoly cyclotomic(long long n) {
    if (n < 1 || n > kMaxCyclotomicIndex) throw UnsupportedIndex(n);
    std::lock_guard<std::mutex> lock(g_cyclotomic_mutex);
    return cyclotomic_unlocked(n);
}

bool cyclotomic_divides(long long n, const SparsePoly& f) {
    return divides(cyclotomic(n), f);
}

std::string to_string(const SparsePoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
            first = false;
        } else {
            out += a < 0 ? "-" : "+";
            if (a < 0) a = -a;
        }
        if (e == 0 || a != 1) out += a.str();
        if (e > 0) {
            out += "x";
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

SparsePoly parse_poly(const std::string& s) {
    SparsePoly p;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i == s.size()) throw ParseError("empty polynomial");
    bool any = false;
    while (true) {
        skip_ws();
        int sgn = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            sgn = s[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (any) {
            break;
        }
        bool have_coeff = false;
        Int coeff = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                coeff = coeff * 10 + (s[i++] - '0');
            have_coeff = true;
        }
        SparsePoly::Exp e = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    throw ParseError("missing exponent in '" + s + "'");
                e = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    e = e * 10 + (s[i++] - '0');
            }
        } else if (!have_coeff) {
            throw ParseError("expected term at position " + std::to_string(i) + " in '" + s + "'");
        }
        p.add_term(e, sgn < 0 ? Int(-coeff) : coeff);
        any = true;
        skip_ws();
        if (i == s.size()) return p;
    }
    throw ParseError("trailing input at position " + std::to_string(i) + " in '" + s + "'");
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& f) { return os << to_string(f); }

}  // namespace lipeq
