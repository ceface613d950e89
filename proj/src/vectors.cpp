#include "lipeq/vectors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace lipeq {

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

PowerVector::PowerVector(std::vector<long long> e) : exponents(std::move(e)) {
    if (exponents.size() < 2)
        throw std::invalid_argument("a power vector needs at least 2 entries");
    for (long long x : exponents)
        if (x <= 0) throw std::invalid_argument("power vector exponents must be positive");
    std::sort(exponents.begin(), exponents.end());
}

PowerVector PowerVector::parse(const std::string& csv) {
    std::vector<long long> e;
    for (const auto& p : split_csv(csv)) {
        if (p.empty()) throw ParseError("empty entry in power vector '" + csv + "'");
        try {
            std::size_t pos = 0;
            long long v = std::stoll(p, &pos);
            if (pos != p.size()) throw std::invalid_argument(p);
            e.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad exponent '" + p + "' in power vector '" + csv + "'");
        }
    }
    try {
        return PowerVector(std::move(e));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

std::string PowerVector::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i) os << ",";
        os << exponents[i];
    }
    return os.str();
}

SparsePoly char_poly(const PowerVector& v) {
    SparsePoly p;
    for (long long e : v.exponents) p.add_term(e, 1);
    p.add_term(0, -1);
    return p;
}

DimensionInfo dimension(const PowerVector& v, const Rat& tol) {
    SparsePoly p = char_poly(v);
    Interval unit(Rat(0), Rat(1));
    // value -1 at 0 and (size-1) >= 1 at 1, strictly increasing in between
    Interval iso = bisect_root(p, unit, tol);
    Rat mid = iso.mid();
    return DimensionInfo{std::move(p), std::move(iso), std::move(mid)};
}

bool same_dimension(const PowerVector& v, const PowerVector& w) {
    SparsePoly g = poly_gcd(char_poly(v), char_poly(w));
    if (g.degree() < 1) return false;
    return sturm_count(squarefree_part(g), Interval(Rat(0), Rat(1))) >= 1;
}

std::optional<std::pair<long long, int>> is_homogeneous(const PowerVector& v) {
    if (v.exponents.front() != v.exponents.back()) return std::nullopt;
    return std::make_pair(v.exponents.front(), static_cast<int>(v.size()));
}

std::vector<std::pair<long long, long long>> perfect_power_exponents(long long m) {
    if (m < 2) throw std::invalid_argument("perfect_power_exponents requires m >= 2");
    std::vector<std::pair<long long, long long>> out;
    for (long long q = 1;; ++q) {
        // integer q-th root of m, found from a floating guess then corrected
        long long k = std::llround(std::pow(static_cast<double>(m), 1.0 / static_cast<double>(q)));
        for (long long cand = std::max<long long>(2, k - 2); cand <= k + 2; ++cand) {
            if (int_pow(cand, static_cast<unsigned long long>(q)) == m) {
                out.emplace_back(q, cand);
                break;
            }
        }
        if (int_pow(2, static_cast<unsigned long long>(q + 1)) > m) break;
    }
    return out;
}

PowerVector reduce_by_gcd(const PowerVector& v, long long* g) {
    long long d = 0;
    for (long long e : v.exponents) d = std::gcd(d, e);
    if (g) *g = d;
    std::vector<long long> out;
    out.reserve(v.size());
    for (long long e : v.exponents) out.push_back(e / d);
    return PowerVector(std::move(out));
}

RatioVector::RatioVector(std::vector<Rat> r) : ratios(std::move(r)) {
    if (ratios.size() < 2)
        throw std::invalid_argument("a ratio vector needs at least 2 entries");
    for (const Rat& x : ratios)
        if (!(x > 0 && x < 1))
            throw std::invalid_argument("ratios must lie strictly between 0 and 1");
    std::sort(ratios.begin(), ratios.end());
}

bool RatioVector::sum_at_least_one() const {
    Rat s = 0;
    for (const Rat& r : ratios) s += r;
    return s >= 1;
}

RatioVector RatioVector::parse(const std::string& csv) {
    std::vector<Rat> r;
    for (const auto& p : split_csv(csv)) {
        if (p.empty()) throw ParseError("empty entry in ratio vector '" + csv + "'");
        r.push_back(parse_rational(p));
    }
    try {
        return RatioVector(std::move(r));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

std::string RatioVector::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (i) os << ",";
        os << fraction_string(ratios[i]);
    }
    return os.str();
}

namespace {

void factor_into(std::map<Int, long long>& exps, Int n, long long mult) {
    for (Int p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            exps[p] += mult;
            n /= p;
        }
    }
    if (n > 1) exps[n] += mult;
}

// Integer matrix rank by fraction-free Gaussian elimination.
int bareiss_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[r][col] - m[i][col] * m[r][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[r][col];
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace

int rank(const RatioVector& v) {
    // prime-exponent vector of each ratio (numerator minus denominator)
    std::vector<std::map<Int, long long>> rows;
    std::map<Int, long long> all_primes;
    for (const Rat& x : v.ratios) {
        std::map<Int, long long> e;
        factor_into(e, numerator(x), 1);
        factor_into(e, denominator(x), -1);
        for (const auto& [p, k] : e) all_primes[p] = 0;
        rows.push_back(std::move(e));
    }
    std::vector<Int> primes;
    for (const auto& [p, k] : all_primes) primes.push_back(p);
    std::vector<std::vector<Int>> m;
    for (const auto& row : rows) {
        std::vector<Int> r(primes.size(), 0);
        for (std::size_t j = 0; j < primes.size(); ++j) {
            auto it = row.find(primes[j]);
            if (it != row.end()) r[j] = it->second;
        }
        m.push_back(std::move(r));
    }
    return bareiss_rank(std::move(m));
}

}  // namespace lipeq
