#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lipeq/poly.hpp"

namespace lipeq {

// --- trinomials x^a + eps*x^b + delta --------------------------------------

enum class TriVerdict { Irreducible, Exceptional };

struct TrinomialReport {
    // input as given
    long long a = 0, b = 0;
    int eps = 1, delta = -1;
    // parameters of the analysed orientation (after the reciprocal transform
    // when a < 2b): ell = gcd stays the same, a1/b1/eps/delta may differ
    long long ell = 0, a1 = 0, b1 = 0;
    int eps_eff = 1, delta_eff = -1;
    bool reciprocal_applied = false;
    TriVerdict verdict = TriVerdict::Irreducible;
    // present iff Exceptional; cyclo_factor * cofactor == the input trinomial
    std::optional<SparsePoly> cyclo_factor, cofactor;
};

// Classifies x^a + eps*x^b + delta. For b < a < 2b the reciprocal-transformed
// trinomial is analysed instead and the factorization is mapped back (the
// quadratic-in-x^ell factor is palindromic, so it transfers unchanged).
// Throws DegenerateInput if a == b, ExceptionalContractViolated if the
// exceptional conditions hold but the constructed factor fails exact division.
TrinomialReport trinomial_analyze(long long a, long long b, int eps, int delta);

SparsePoly trinomial_poly(long long a, long long b, int eps, int delta);

// --- quadrinomials x^a + e1*x^b + e2*x^c + e3 -------------------------------

// Parity/gcd irreducibility criterion for x^a + x^b + x^c - 1.
struct FJCriterion {
    long long a = 0, b = 0, c = 0;  // sorted descending
    int k = 0;                      // gcd(a,b,c) = 2^k * m_odd
    long long m_odd = 1;
    long long a_prime = 0, b_prime = 0, c_prime = 0;
    long long abar = 0, bbar = 0, cbar = 0;
    long long res_a = 0, res_b = 0, res_c = 0;  // a' mod 2*abar etc.
    bool irreducible = false;                   // true iff all three residues nonzero
};

// Throws DegenerateInput unless a, b, c are distinct positive integers.
FJCriterion quadrinomial_irreducible(long long a, long long b, long long c);

enum class QuadForm { Form8r7r1, Form8r7r1Neg, Form8r4r2r, Form8r6r4r };

std::string quad_form_name(QuadForm form);
SparsePoly quad_form_poly(QuadForm form, long long r);
std::vector<SparsePoly> quad_form_factors(QuadForm form, long long r);

struct QuadReport {
    long long a = 0, b = 0, c = 0;
    int e1 = 1, e2 = 1, e3 = -1;
    SparsePoly f;
    SparsePoly A;  // unit-root factor: gcd(f, f*), monic here
    SparsePoly B;  // f / A
    std::optional<QuadForm> exceptional_form;
    long long r = 0;                  // scale parameter when exceptional
    std::vector<SparsePoly> factors;  // product equals f exactly
    bool b_irreducible = false;       // theorem fact, set iff no exceptional form
};

// Splits f into its unit-root part A = gcd(f, f*) and cofactor B = f/A, and
// recognizes the four exceptional shapes whose cofactor splits further.
// Throws BadOrdering unless a > b > c > 0.
QuadReport quadrinomial_decompose(long long a, long long b, long long c, int e1, int e2, int e3);

SparsePoly quadrinomial_poly(long long a, long long b, long long c, int e1, int e2, int e3);

struct UnitRootLocalization {
    long long t = 1;
    long long a1 = 0, b1 = 0, c1 = 0;
    long long t1 = 0, t2 = 0, t3 = 0;
    std::vector<long long> candidate_orders;  // n | 2*t*t_i for some i
    std::vector<long long> confirmed_orders;  // subset with Phi_n | f
};

// Localizes all possible root-of-unity orders of the quadrinomial among the
// divisors of 2*t*t_i, then confirms by cyclotomic divisibility.
UnitRootLocalization unit_root_candidates(long long a, long long b, long long c, int e1, int e2,
                                          int e3);

void to_json(nlohmann::json& j, const TrinomialReport& r);
void to_json(nlohmann::json& j, const FJCriterion& c);
void to_json(nlohmann::json& j, const QuadReport& r);
void to_json(nlohmann::json& j, const UnitRootLocalization& u);

}  // namespace lipeq
