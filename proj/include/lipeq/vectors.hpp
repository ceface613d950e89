#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lipeq/poly.hpp"

namespace lipeq {

// Contraction vector given as exponents over an unspecified common ratio
// lambda in (0,1): entry a_i stands for lambda^{a_i}. Canonical storage is
// ascending with multiplicities.
struct PowerVector {
    std::vector<long long> exponents;

    PowerVector() = default;
    explicit PowerVector(std::vector<long long> e);

    std::size_t size() const { return exponents.size(); }
    long long max_exponent() const { return exponents.back(); }

    static PowerVector parse(const std::string& csv);  // "8,7,1"
    std::string str() const;                           // canonical "1,7,8"

    friend bool operator==(const PowerVector&, const PowerVector&) = default;
};

// Sum of x^{a_i} minus 1, duplicate exponents collected into coefficients.
// Its unique root in (0,1) is lambda^s for the Hausdorff dimension s.
SparsePoly char_poly(const PowerVector& v);

struct DimensionInfo {
    SparsePoly char_poly;
    Interval root_interval;
    Rat approx;  // lies inside root_interval
};

inline const Rat kDefaultDimensionTol = Rat(Int(1), int_pow(10, 12));

// Isolates the unique root of char_poly(v) in (0,1) to width <= tol.
DimensionInfo dimension(const PowerVector& v, const Rat& tol = kDefaultDimensionTol);

// Exact: true iff the two characteristic polynomials share a root in (0,1)
// (checked through gcd, square-free part and Sturm counting; no floats).
bool same_dimension(const PowerVector& v, const PowerVector& w);

// (a, m) when v consists of the exponent a repeated m times.
std::optional<std::pair<long long, int>> is_homogeneous(const PowerVector& v);

// All (q, k) with k >= 2, q >= 1 and k^q = m, ascending q. Requires m >= 2.
std::vector<std::pair<long long, long long>> perfect_power_exponents(long long m);

// Multiplicative rank of a power vector is always 1: every entry is a power
// of the single ratio lambda.
inline int rank(const PowerVector&) { return 1; }

// Divides all exponents by their overall gcd; never done implicitly. Returns
// the reduced vector and stores the gcd in g when given.
PowerVector reduce_by_gcd(const PowerVector& v, long long* g = nullptr);

// Contraction vector with explicit rational ratios in (0,1).
struct RatioVector {
    std::vector<Rat> ratios;

    RatioVector() = default;
    explicit RatioVector(std::vector<Rat> r);

    std::size_t size() const { return ratios.size(); }
    bool sum_at_least_one() const;

    static RatioVector parse(const std::string& csv);  // "1/2,1/3"
    std::string str() const;

    friend bool operator==(const RatioVector&, const RatioVector&) = default;
};

// Rank of the free abelian multiplicative group generated by the ratios:
// integer rank of the matrix of prime-exponent vectors, by fraction-free
// (Bareiss) elimination.
int rank(const RatioVector& v);

}  // namespace lipeq
