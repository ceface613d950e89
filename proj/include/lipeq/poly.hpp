#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lipeq/errors.hpp"
#include "lipeq/rational.hpp"

namespace lipeq {

// Sparse integer-coefficient polynomial keyed by exponent. Canonical form:
// no zero coefficients are stored, so equality is term-map equality and the
// zero polynomial has an empty map. Terms iterate by descending exponent.
class SparsePoly {
public:
    using Exp = std::int64_t;
    using TermMap = std::map<Exp, Int, std::greater<Exp>>;

    SparsePoly() = default;
    explicit SparsePoly(const Int& constant) { add_term(0, constant); }
    explicit SparsePoly(long long constant) { add_term(0, Int(constant)); }

    static SparsePoly monomial(const Int& coeff, Exp e) {
        SparsePoly p;
        p.add_term(e, coeff);
        return p;
    }
    static SparsePoly x() { return monomial(1, 1); }
    static SparsePoly one() { return SparsePoly(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.count(0) && terms_.at(0) == 1; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.count(0)); }

    // -1 for the zero polynomial.
    Exp degree() const { return terms_.empty() ? -1 : terms_.begin()->first; }

    Int coeff(Exp e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }
    const Int& leading_coeff() const;

    std::size_t term_count() const { return terms_.size(); }
    TermMap::const_iterator begin() const { return terms_.begin(); }
    TermMap::const_iterator end() const { return terms_.end(); }

    // Adds c*x^e, dropping the term if the coefficient cancels to zero.
    void add_term(Exp e, const Int& c);

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& g);
    SparsePoly& operator-=(const SparsePoly& g);
    SparsePoly& operator*=(const SparsePoly& g);
    SparsePoly& operator*=(const Int& c);

    friend SparsePoly operator+(SparsePoly f, const SparsePoly& g) { return f += g; }
    friend SparsePoly operator-(SparsePoly f, const SparsePoly& g) { return f -= g; }
    friend SparsePoly operator*(const SparsePoly& f, const SparsePoly& g);
    friend SparsePoly operator*(SparsePoly f, const Int& c) { return f *= c; }
    friend bool operator==(const SparsePoly& f, const SparsePoly& g) { return f.terms_ == g.terms_; }
    friend bool operator!=(const SparsePoly& f, const SparsePoly& g) { return !(f == g); }

    Rat evaluate(const Rat& x) const;
    // Exact sign of f(x) at a rational point, via the homogenized integer sum.
    int sign_at(const Rat& x) const;

private:
    TermMap terms_;
};

SparsePoly derivative(const SparsePoly& f);

// gcd of |coefficients|; 0 for the zero polynomial.
Int content(const SparsePoly& f);
// f / content(f), sign-normalized to a positive leading coefficient.
SparsePoly primitive_part(const SparsePoly& f);

// Exact quotient f/g. Throws DivideByZero when g = 0 and NotDivisible when
// the division leaves a remainder (or needs non-integer coefficients).
SparsePoly exact_div(const SparsePoly& f, const SparsePoly& g);
bool divides(const SparsePoly& g, const SparsePoly& f);

// x^deg(f) * f(1/x). Throws ZeroPolynomial.
SparsePoly reciprocal(const SparsePoly& f);

// Primitive gcd with positive leading coefficient, computed by a primitive
// polynomial remainder sequence over the integers (no rational arithmetic,
// contents stripped each step to bound growth).
SparsePoly poly_gcd(const SparsePoly& f, const SparsePoly& g);

// f / gcd(f, f'): same distinct roots as f, all simple. Throws ZeroPolynomial.
SparsePoly squarefree_part(const SparsePoly& f);

// Open interval with exact rational endpoints, lo < hi.
struct Interval {
    Rat lo, hi;
    Interval(Rat l, Rat h);
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
};

// Exact number of distinct real roots of f in the open interval I.
// Works on the square-free part; endpoint roots are divided out first so the
// open-interval semantics are exact. Throws ZeroPolynomial.
int sturm_count(const SparsePoly& f, const Interval& I);

// Shrinks I around the unique root of f in I to width <= tol, keeping a sign
// change across the returned interval. Throws RootCountNotOne unless
// sturm_count(f, I) == 1.
Interval bisect_root(const SparsePoly& f, const Interval& I, const Rat& tol);

// n-th cyclotomic polynomial, from the recursive divisibility construction
// (x^n - 1 divided by the cyclotomics of the proper divisors). Cached.
// Supported for 1 <= n <= 10000; throws UnsupportedIndex beyond.
SparsePoly cyclotomic(long long n);
bool cyclotomic_divides(long long n, const SparsePoly& f);

// Canonical text form: terms by descending exponent, e.g. "x^8+x^7+x-1".
std::string to_string(const SparsePoly& f);
// Parses the same grammar (integer coefficients, x^k, +/-). Throws ParseError.
SparsePoly parse_poly(const std::string& s);

std::ostream& operator<<(std::ostream& os, const SparsePoly& f);

}  // namespace lipeq
