#pragma once

// Randomized property suites shared between the unit tests and the
// acceptance run. Fixed seeds, exact-arithmetic oracles, no floats.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "lipeq/decide.hpp"

namespace lipeq::props {

struct Result {
    std::string name;
    int cases = 0;
    int failures = 0;
    bool ok() const { return failures == 0; }
};

inline SparsePoly random_poly(std::mt19937_64& rng, int max_terms = 8, long long max_deg = 64) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<long long> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-9, 9);
    SparsePoly p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(deg(rng), coeff(rng));
    return p;
}

inline SparsePoly random_nonzero_poly(std::mt19937_64& rng, int max_terms = 8,
                                      long long max_deg = 64) {
    while (true) {
        SparsePoly p = random_poly(rng, max_terms, max_deg);
        if (!p.is_zero()) return p;
    }
}

inline Result ring_laws(int cases = 200) {
    Result r{"ring laws (assoc/comm/distrib)"};
    std::mt19937_64 rng(0x1a2b3c01);
    for (int i = 0; i < cases; ++i) {
        SparsePoly f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
        bool ok = (f + g) + h == f + (g + h);
        ok = ok && f + g == g + f;
        ok = ok && (f * g) * h == f * (g * h);
        ok = ok && f * g == g * f;
        ok = ok && f * (g + h) == f * g + f * h;
        r.cases++;
        if (!ok) r.failures++;
    }
    return r;
}

inline Result mul_div_roundtrip(int cases = 200) {
    Result r{"exact_div(f*g, g) == f"};
    std::mt19937_64 rng(0x1a2b3c02);
    for (int i = 0; i < cases; ++i) {
        SparsePoly f = random_poly(rng), g = random_nonzero_poly(rng);
        r.cases++;
        try {
            if (exact_div(f * g, g) != f) r.failures++;
        } catch (const Error&) {
            r.failures++;
        }
    }
    return r;
}

inline Result gcd_divides(int cases = 200) {
    Result r{"poly_gcd divides both inputs"};
    std::mt19937_64 rng(0x1a2b3c03);
    for (int i = 0; i < cases; ++i) {
        SparsePoly f = random_nonzero_poly(rng, 5, 24), g = random_nonzero_poly(rng, 5, 24);
        // plant a common factor half the time
        if (i % 2) {
            SparsePoly h = random_nonzero_poly(rng, 3, 8);
            f = f * h;
            g = g * h;
        }
        SparsePoly d = poly_gcd(f, g);
        r.cases++;
        if (!divides(d, f) || !divides(d, g)) r.failures++;
    }
    return r;
}

inline Result reciprocal_involution(int cases = 200) {
    Result r{"reciprocal is an involution (nonzero constant term)"};
    std::mt19937_64 rng(0x1a2b3c04);
    for (int i = 0; i < cases; ++i) {
        SparsePoly f = random_nonzero_poly(rng);
        if (f.coeff(0) == 0) f.add_term(0, 1);
        r.cases++;
        if (reciprocal(reciprocal(f)) != f) r.failures++;
    }
    return r;
}

namespace detail {

// Exact sign-change bisection count for a square-free polynomial whose roots
// are pairwise farther apart than min_gap and avoid the interval endpoints.
inline int bisection_count(const SparsePoly& f, const Rat& a, const Rat& b, const Rat& min_gap) {
    const int sa = f.sign_at(a), sb = f.sign_at(b);
    if (b - a < min_gap) return sa != sb ? 1 : 0;
    const Rat mid = (a + b) / 2;
    if (f.sign_at(mid) == 0) {
        Rat off = std::min(Rat((b - a) / 4), Rat(min_gap / 4));
        return bisection_count(f, a, mid - off, min_gap) + 1 +
               bisection_count(f, mid + off, b, min_gap);
    }
    return bisection_count(f, a, mid, min_gap) + bisection_count(f, mid, b, min_gap);
}

}  // namespace detail

inline Result sturm_vs_bisection(int cases = 200) {
    Result r{"sturm_count matches sign-change bisection on (0,1)"};
    std::mt19937_64 rng(0x1a2b3c05);
    std::uniform_int_distribution<int> nroots(1, 5);
    std::uniform_int_distribution<long long> num(-12, 24), den(1, 12);
    for (int i = 0; i < cases; ++i) {
        const int k = nroots(rng);
        std::vector<Rat> roots;
        while (static_cast<int>(roots.size()) < k) {
            Rat root(num(rng), den(rng));
            if (root == 0 || root == 1) continue;
            if (std::find(roots.begin(), roots.end(), root) != roots.end()) continue;
            roots.push_back(root);
        }
        SparsePoly f = SparsePoly::one();
        int inside = 0;
        for (const Rat& root : roots) {
            SparsePoly lin = SparsePoly::monomial(denominator(root), 1);
            lin.add_term(0, -numerator(root));
            f *= lin;
            if (root > 0 && root < 1) ++inside;
        }
        Rat min_gap = 2;
        for (std::size_t x = 0; x < roots.size(); ++x)
            for (std::size_t y = x + 1; y < roots.size(); ++y)
                min_gap = std::min(min_gap, Rat(abs(Rat(roots[x] - roots[y]))));
        const int sturm = sturm_count(f, Interval(Rat(0), Rat(1)));
        const int bisect = detail::bisection_count(f, Rat(0), Rat(1), min_gap);
        r.cases++;
        if (sturm != inside || bisect != inside) r.failures++;
    }
    return r;
}

inline PowerVector random_power_vector(std::mt19937_64& rng, int max_size = 6,
                                       long long max_exp = 12) {
    std::uniform_int_distribution<int> sz(2, max_size);
    std::uniform_int_distribution<long long> ex(1, max_exp);
    std::vector<long long> e;
    const int n = sz(rng);
    for (int i = 0; i < n; ++i) e.push_back(ex(rng));
    return PowerVector(std::move(e));
}

inline Result charpoly_root_unique(int cases = 200) {
    Result r{"char_poly: -1 at 0, size-1 at 1, one root in (0,1)"};
    std::mt19937_64 rng(0x1a2b3c06);
    for (int i = 0; i < cases; ++i) {
        PowerVector v = random_power_vector(rng);
        SparsePoly p = char_poly(v);
        bool ok = p.evaluate(Rat(0)) == Rat(-1);
        ok = ok && p.evaluate(Rat(1)) == Rat(static_cast<long long>(v.size()) - 1);
        ok = ok && sturm_count(p, Interval(Rat(0), Rat(1))) == 1;
        r.cases++;
        if (!ok) r.failures++;
    }
    return r;
}

inline Result same_dimension_vs_intervals(int cases = 100) {
    Result r{"same_dimension agrees with interval disjointness at 1e-12"};
    std::mt19937_64 rng(0x1a2b3c07);
    for (int i = 0; i < cases; ++i) {
        PowerVector v = random_power_vector(rng, 4, 8);
        PowerVector w = random_power_vector(rng, 4, 8);
        if (i % 2) {
            // construct an equal-dimension partner by expanding v's multiset
            ExpMultiset s(v.exponents);
            std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
            for (int step = 0; step < 2; ++step)
                s = expand(s, s.entries[pick(rng) % s.size()], ExpMultiset(v.exponents));
            w = PowerVector(s.entries);
        }
        const bool same = same_dimension(v, w);
        Interval a = dimension(v).root_interval;
        Interval b = dimension(w).root_interval;
        const bool disjoint = a.hi < b.lo || b.hi < a.lo;
        r.cases++;
        if (same == disjoint) r.failures++;
        if (same != same_dimension(w, v) || !same_dimension(v, v)) r.failures++;
    }
    return r;
}

inline ExpMultiset random_base(std::mt19937_64& rng, int max_size = 4, long long max_exp = 6) {
    std::uniform_int_distribution<int> sz(2, max_size);
    std::uniform_int_distribution<long long> ex(1, max_exp);
    std::vector<long long> e;
    const int n = sz(rng);
    for (int i = 0; i < n; ++i) e.push_back(ex(rng));
    return ExpMultiset(std::move(e));
}

inline Result expand_preserves_dimension(int cases = 200) {
    Result r{"expand preserves the characteristic root"};
    std::mt19937_64 rng(0x1a2b3c08);
    for (int i = 0; i < cases; ++i) {
        ExpMultiset base = random_base(rng);
        ExpMultiset state = base;
        std::uniform_int_distribution<std::size_t> pick(0, 1 << 20);
        for (int step = 0; step < 2; ++step)
            state = expand(state, state.entries[pick(rng) % state.size()], base);
        ExpMultiset next = expand(state, state.entries[pick(rng) % state.size()], base);
        r.cases++;
        if (!same_dimension(PowerVector(state.entries), PowerVector(next.entries)))
            r.failures++;
    }
    return r;
}

inline Result collapse_inverts_expand(int cases = 200) {
    Result r{"collapse(expand(S,v,B), v, B) == S"};
    std::mt19937_64 rng(0x1a2b3c09);
    for (int i = 0; i < cases; ++i) {
        ExpMultiset base = random_base(rng);
        ExpMultiset state = base;
        std::uniform_int_distribution<std::size_t> pick(0, 1 << 20);
        for (int step = 0; step < 3; ++step) {
            long long v = state.entries[pick(rng) % state.size()];
            ExpMultiset grown = expand(state, v, base);
            r.cases++;
            if (collapse(grown, v, base) != state) r.failures++;
            state = std::move(grown);
        }
    }
    return r;
}

inline Result cuts_verify(int cases = 40) {
    Result r{"every enumerated cut verifies against its word list"};
    std::mt19937_64 rng(0x1a2b3c0a);
    SearchBudget tiny{10, 8, 3};
    for (int i = 0; i < cases; ++i) {
        ExpMultiset base = random_base(rng, 3, 4);
        for (const auto& [cut, words] : enumerate_cuts(base, tiny)) {
            r.cases++;
            if (!verify_partition(WeightedPartition{base, words, cut})) r.failures++;
        }
    }
    return r;
}

inline Result refinement_verifies(int cases = 40) {
    Result r{"common_refinement output re-verifies"};
    std::mt19937_64 rng(0x1a2b3c0b);
    SearchBudget budget;
    for (int i = 0; i < cases; ++i) {
        ExpMultiset v = random_base(rng, 3, 4);
        ExpMultiset w = v;
        std::uniform_int_distribution<std::size_t> pick(0, 1 << 20);
        for (int step = 0; step < 2; ++step)
            w = expand(w, w.entries[pick(rng) % w.size()], v);
        auto ref = common_refinement(ExpMultiset(v), w, budget);
        r.cases++;
        if (!ref) {
            r.failures++;
            continue;
        }
        bool ok = verify_partition(ref->left) && verify_partition(ref->right);
        ok = ok && ref->left.weights == ref->right.weights;
        ok = ok && ref->left.base == v && ref->right.base == w;
        if (!ok) r.failures++;
    }
    return r;
}

inline Result partition_construction(int cases = 200) {
    Result r{"partition_for_homogeneous: verified, lengths match"};
    std::mt19937_64 rng(0x1a2b3c0c);
    std::uniform_int_distribution<int> alphabet(2, 4), splits(1, 4);
    for (int i = 0; i < cases; ++i) {
        const int m = alphabet(rng);
        // random complete prefix-free length profile built by splitting leaves
        std::vector<long long> lengths(m, 1);
        const int extra = splits(rng);
        std::uniform_int_distribution<std::size_t> pick(0, 1 << 20);
        for (int s = 0; s < extra; ++s) {
            std::size_t at = pick(rng) % lengths.size();
            long long l = lengths[at];
            lengths.erase(lengths.begin() + static_cast<std::ptrdiff_t>(at));
            for (int j = 0; j < m; ++j) lengths.push_back(l + 1);
        }
        ExpMultiset targets(lengths);
        Partition p = partition_for_homogeneous(m, targets);
        std::vector<long long> got;
        for (const Word& w : p.words) got.push_back(static_cast<long long>(w.length()));
        std::sort(got.begin(), got.end());
        r.cases++;
        if (!verify_partition(p) || got != targets.entries) r.failures++;
    }
    return r;
}

inline Result perfect_power_property(int cases = 200) {
    Result r{"perfect_power_exponents: contains (1,m), all pairs exact, none missing"};
    std::mt19937_64 rng(0x1a2b3c0d);
    std::uniform_int_distribution<long long> ms(2, 4096);
    for (int i = 0; i < cases; ++i) {
        const long long m = ms(rng);
        auto pairs = perfect_power_exponents(m);
        bool ok = !pairs.empty() && pairs.front() == std::make_pair(1LL, m);
        for (const auto& [q, k] : pairs) ok = ok && int_pow(k, static_cast<unsigned>(q)) == m;
        // brute-force cross-check for missing exponents
        for (long long q = 2; q <= 12 && ok; ++q)
            for (long long k = 2; k <= 8; ++k) {
                if (int_pow(k, static_cast<unsigned>(q)) == m &&
                    std::find(pairs.begin(), pairs.end(), std::make_pair(q, k)) == pairs.end())
                    ok = false;
            }
        r.cases++;
        if (!ok) r.failures++;
    }
    return r;
}

inline std::vector<Result> all() {
    return {ring_laws(),
            mul_div_roundtrip(),
            gcd_divides(),
            reciprocal_involution(),
            sturm_vs_bisection(),
            charpoly_root_unique(),
            same_dimension_vs_intervals(),
            expand_preserves_dimension(),
            collapse_inverts_expand(),
            cuts_verify(),
            refinement_verifies(),
            partition_construction(),
            perfect_power_property()};
}

}  // namespace lipeq::props
