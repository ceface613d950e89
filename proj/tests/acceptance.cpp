// Acceptance suite: runs every gate criterion and prints one line per
// criterion. Exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "lipeq/decide.hpp"
#include "properties.hpp"

using namespace lipeq;

namespace {

int g_failures = 0;

void report(int index, const std::string& title, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "C" << index << ": " << title;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

PowerVector V(std::vector<long long> e) { return PowerVector(std::move(e)); }

bool verified_equivalent(const Verdict& v, const PowerVector& a, const PowerVector& b) {
    if (v.outcome != Outcome::Equivalent || !v.certificate) return false;
    const auto* chain = std::get_if<CertificateChain>(&*v.certificate);
    if (!chain) return false;
    return verify_certificate(*chain, ExpMultiset(a.exponents), ExpMultiset(b.exponents));
}

// 1. classification sweep: a=b+c, gcd(a,b,c)=1, 3<=a<=12 against all
//    1<=e<d<=10; equivalent exactly for the three classified shapes
void criterion1() {
    int pairs = 0, wrong = 0, unknown = 0, unverified = 0, contradictions = 0, roundtrip = 0;
    for (long long a = 3; a <= 12; ++a)
        for (long long c = 1; 2 * c < a; ++c) {
            const long long b = a - c;
            if (std::gcd(a, std::gcd(b, c)) != 1) continue;
            for (long long d = 2; d <= 10; ++d)
                for (long long e = 1; e < d; ++e) {
                    const bool expect_eq =
                        (a == 4 && b == 3 && c == 1 && d == 2 && e == 1) ||
                        (a == 8 && b == 7 && c == 1 &&
                         ((d == 5 && e == 1) || (d == 3 && e == 2)));
                    PowerVector alpha = V({a, b, c}), beta = V({d, e});
                    Verdict verdict = decide(alpha, beta);
                    ++pairs;
                    if (verdict.outcome == Outcome::Unknown) ++unknown;
                    const bool got_eq = verdict.outcome == Outcome::Equivalent;
                    if (got_eq != expect_eq) ++wrong;
                    if (got_eq && !verified_equivalent(verdict, alpha, beta)) ++unverified;
                    // swapping the inputs must never contradict the outcome
                    Verdict swapped = decide(beta, alpha);
                    const bool sw_eq = swapped.outcome == Outcome::Equivalent;
                    const bool sw_ne = swapped.outcome == Outcome::NotEquivalent;
                    if ((got_eq && sw_ne) ||
                        (verdict.outcome == Outcome::NotEquivalent && sw_eq))
                        ++contradictions;
                    // the verdict JSON round-trips through its parser
                    nlohmann::json out = verdict;
                    if (nlohmann::json(verdict_from_json(out)) != out) ++roundtrip;
                }
        }
    std::ostringstream os;
    os << pairs << " pairs, " << wrong << " wrong, " << unknown << " unknown, " << unverified
       << " unverified certificates, " << contradictions << " order contradictions, "
       << roundtrip << " round-trip failures";
    report(1, "three-vs-two classification sweep",
           wrong == 0 && unknown == 0 && unverified == 0 && contradictions == 0 &&
               roundtrip == 0,
           os.str());
}

// 2. the chain for {8,4,2} vs {3,2} passes through {5,1} with the stated
//    first refinement
void criterion2() {
    Verdict v = decide(V({8, 4, 2}), V({3, 2}));
    bool ok = v.outcome == Outcome::Equivalent && v.certificate.has_value();
    std::string detail;
    if (ok) {
        const auto* chain = std::get_if<CertificateChain>(&*v.certificate);
        ok = chain && chain->vectors.size() == 3 &&
             chain->vectors[1] == ExpMultiset({1, 5}) &&
             chain->links[0].left.weights == ExpMultiset({4, 6, 6, 8, 8, 10, 12}) &&
             verify_chain(*chain);
        if (chain) {
            std::ostringstream os;
            os << "chain";
            for (const auto& vec : chain->vectors) os << " {" << vec.str() << "}";
            detail = os.str();
        }
    }
    report(2, "{8,4,2} ~ {3,2} via {5,1} with refinement {4,6,6,8,8,10,12}", ok, detail);
}

// 3. the four exceptional quadrinomial identities, r = 1..5, bit-exact
void criterion3() {
    int checked = 0, bad = 0;
    for (long long r = 1; r <= 5; ++r)
        for (QuadForm form : {QuadForm::Form8r7r1, QuadForm::Form8r7r1Neg, QuadForm::Form8r4r2r,
                              QuadForm::Form8r6r4r}) {
            SparsePoly prod = SparsePoly::one();
            for (const SparsePoly& f : quad_form_factors(form, r)) prod *= f;
            ++checked;
            if (prod != quad_form_poly(form, r)) ++bad;
        }
    report(3, "exceptional identities multiply back exactly", bad == 0,
           std::to_string(checked) + " identities");
}

// 4. criterion vs decomposition cross-validation over all triples <= 30
void criterion4() {
    const auto start = std::chrono::steady_clock::now();
    int triples = 0, disagreements = 0;
    for (long long a = 3; a <= 30; ++a)
        for (long long b = 2; b < a; ++b)
            for (long long c = 1; c < b; ++c) {
                const bool fj = quadrinomial_irreducible(a, b, c).irreducible;
                QuadReport rep = quadrinomial_decompose(a, b, c, 1, 1, -1);
                const bool dec =
                    rep.A == SparsePoly::one() && !rep.exceptional_form.has_value();
                ++triples;
                if (fj != dec) ++disagreements;
            }
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    std::ostringstream os;
    os << triples << " triples, " << disagreements << " disagreements, " << secs << "s";
    report(4, "parity criterion matches gcd decomposition (a,b,c <= 30)",
           disagreements == 0 && secs < 60, os.str());
}

// 5. all-odd distinct triples <= 29 are irreducible
void criterion5() {
    int triples = 0, exceptions = 0;
    for (long long a = 5; a <= 29; a += 2)
        for (long long b = 3; b < a; b += 2)
            for (long long c = 1; c < b; c += 2) {
                ++triples;
                if (!quadrinomial_irreducible(a, b, c).irreducible) ++exceptions;
            }
    report(5, "all-odd triples are irreducible", exceptions == 0,
           std::to_string(triples) + " triples");
}

// 6. trinomial sweep to a=40: the exceptional factor divides exactly with the
//    right cofactor degree; irreducible verdicts never attempt division
void criterion6() {
    int exceptional = 0, bad = 0;
    for (long long a = 2; a <= 40; ++a)
        for (long long b = 1; b < a; ++b)
            for (int eps : {1, -1})
                for (int delta : {1, -1}) {
                    TrinomialReport r = trinomial_analyze(a, b, eps, delta);
                    if (r.verdict == TriVerdict::Irreducible) {
                        if (r.cyclo_factor || r.cofactor) ++bad;
                        continue;
                    }
                    ++exceptional;
                    const SparsePoly tri = trinomial_poly(a, b, eps, delta);
                    const int mu = ((r.eps_eff == -1 && (r.b1 & 1)) ? -1 : 1) *
                                   ((r.delta_eff == -1 && (r.a1 & 1)) ? -1 : 1);
                    SparsePoly expect = SparsePoly::monomial(1, 2 * r.ell);
                    expect.add_term(r.ell, mu);
                    expect.add_term(0, 1);
                    bool ok = r.cyclo_factor && *r.cyclo_factor == expect;
                    ok = ok && *r.cyclo_factor * *r.cofactor == tri;
                    ok = ok && r.cofactor->degree() == a - 2 * r.ell;
                    if (!ok) ++bad;
                }
    std::ostringstream os;
    os << exceptional << " exceptional cases, " << bad << " violations";
    report(6, "trinomial exceptional factor sweep (a <= 40, all sign patterns)", bad == 0,
           os.str());
}

// 7. homogeneous theorem instances
void criterion7() {
    Verdict eq = decide(V({1, 2, 2}), V({1, 1}));
    bool ok = eq.outcome == Outcome::Equivalent && eq.rule == "R2" &&
              verified_equivalent(eq, V({1, 2, 2}), V({1, 1}));
    int bad = 0;
    for (long long d = 1; d <= 10; ++d)
        for (long long e = 1; e <= d; ++e) {
            Verdict v = decide(V({1, 1, 1}), V({d, e}));
            if (v.outcome != Outcome::NotEquivalent) ++bad;
        }
    report(7, "homogeneous characterization: {1,2,2}~(1,1); (1,1,1) vs pairs never", ok && bad == 0,
           std::to_string(bad) + " failures in the pair sweep");
}

// 8. two-vs-three homogeneous same-lambda powers are never equivalent
void criterion8() {
    int bad = 0;
    for (long long a = 1; a <= 10; ++a)
        for (long long b = 1; b <= 10; ++b) {
            Verdict v = decide(V({a, a}), V({b, b, b}));
            if (v.outcome != Outcome::NotEquivalent) ++bad;
        }
    report(8, "(lambda^a x2) vs (lambda^b x3) always distinct", bad == 0,
           std::to_string(bad) + " failures");
}

// 9. numeric pins: golden-ratio conjugate and the exact 1/2 root
void criterion9() {
    DimensionInfo g = dimension(PowerVector({2, 1}));
    const Rat target(Int("618033988749"), int_pow(10, 12));
    const Rat tol(Int(1), int_pow(10, 9));
    bool ok = g.root_interval.lo > target - tol && g.root_interval.hi < target + tol;
    DimensionInfo h = dimension(PowerVector({1, 2, 2}));
    ok = ok && h.root_interval.lo < Rat(1, 2) && h.root_interval.hi > Rat(1, 2);
    report(9, "dimension({2,1}) = 0.618033988749 +- 1e-9; dimension({1,2,2}) straddles 1/2", ok);
}

// 10. randomized property suites, fixed seeds
void criterion10() {
    bool ok = true;
    std::ostringstream os;
    int total_cases = 0;
    for (const auto& r : props::all()) {
        total_cases += r.cases;
        if (!r.ok()) {
            ok = false;
            os << " [" << r.name << ": " << r.failures << "/" << r.cases << " failed]";
        }
    }
    report(10, "module property suites", ok,
           std::to_string(total_cases) + " randomized cases" + os.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failures == 0)
        std::cout << "all acceptance criteria passed" << std::endl;
    else
        std::cout << g_failures << " acceptance criteria FAILED" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
