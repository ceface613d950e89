#include "lipeq/irreducibility.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lipeq {

namespace {

void require_sign(int s, const char* name) {
    if (s != 1 && s != -1)
        throw std::invalid_argument(std::string(name) + " must be +1 or -1");
}

int sign_pow(int s, long long e) { return (s == -1 && (e & 1)) ? -1 : 1; }

}  // namespace

SparsePoly trinomial_poly(long long a, long long b, int eps, int delta) {
    SparsePoly p = SparsePoly::monomial(1, a);
    p.add_term(b, eps);
    p.add_term(0, delta);
    return p;
}

TrinomialReport trinomial_analyze(long long a, long long b, int eps, int delta) {
    if (a <= 0 || b <= 0) throw DegenerateInput("trinomial exponents must be positive");
    if (a == b) throw DegenerateInput("trinomial requires a != b");
    require_sign(eps, "eps");
    require_sign(delta, "delta");

    TrinomialReport rep;
    rep.a = a;
    rep.b = b;
    rep.eps = eps;
    rep.delta = delta;

    const SparsePoly input = trinomial_poly(a, b, eps, delta);

    // normalize to a monic leading term: x^a + eps x^b + delta with a > b
    long long ea = a, eb = b;
    int ee = eps, ed = delta;
    if (eb > ea) {
        // eps * (x^b + eps x^a + eps*delta) reproduces the input
        std::swap(ea, eb);
        ed = ee * delta;
    }
    // the classification needs ea >= 2*eb; otherwise analyse delta * f*(x),
    // which is x^ea + (eps*delta) x^(ea-eb) + delta
    if (ea < 2 * eb) {
        eb = ea - eb;
        ee = ee * ed;
        rep.reciprocal_applied = true;
    }

    rep.ell = std::gcd(ea, eb);
    rep.a1 = ea / rep.ell;
    rep.b1 = eb / rep.ell;
    rep.eps_eff = ee;
    rep.delta_eff = ed;

    const bool div3 = (rep.a1 + rep.b1) % 3 == 0;
    const bool odd_case = (rep.a1 & 1) && (rep.b1 & 1) && ee == 1;
    const bool a_even_case = !(rep.a1 & 1) && ed == 1;
    const bool b_even_case = !(rep.b1 & 1) && ee == ed;
    if (!(div3 && (odd_case || a_even_case || b_even_case))) {
        rep.verdict = TriVerdict::Irreducible;
        return rep;
    }

    rep.verdict = TriVerdict::Exceptional;
    const int mu = sign_pow(ee, rep.b1) * sign_pow(ed, rep.a1);
    SparsePoly factor = SparsePoly::monomial(1, 2 * rep.ell);
    factor.add_term(rep.ell, mu);
    factor.add_term(0, 1);
    // the factor is palindromic, so it divides the original trinomial in both
    // orientations; divide the input directly
    SparsePoly cof;
    try {
        cof = exact_div(input, factor);
    } catch (const NotDivisible&) {
        throw ExceptionalContractViolated(
            "exceptional conditions matched but the factor does not divide x^" +
            std::to_string(a) + (eps > 0 ? "+" : "-") + "x^" + std::to_string(b) +
            (delta > 0 ? "+1" : "-1"));
    }
    rep.cyclo_factor = std::move(factor);
    rep.cofactor = std::move(cof);
    return rep;
}

FJCriterion quadrinomial_irreducible(long long a, long long b, long long c) {
    if (a <= 0 || b <= 0 || c <= 0)
        throw DegenerateInput("quadrinomial exponents must be positive");
    long long v[3] = {a, b, c};
    std::sort(v, v + 3, std::greater<>());
    if (v[0] == v[1] || v[1] == v[2])
        throw DegenerateInput("quadrinomial criterion requires distinct exponents");

    FJCriterion fj;
    fj.a = v[0];
    fj.b = v[1];
    fj.c = v[2];
    long long g = std::gcd(fj.a, std::gcd(fj.b, fj.c));
    fj.k = 0;
    while ((g & 1) == 0) {
        g >>= 1;
        ++fj.k;
    }
    fj.m_odd = g;
    fj.a_prime = fj.a >> fj.k;
    fj.b_prime = fj.b >> fj.k;
    fj.c_prime = fj.c >> fj.k;
    fj.abar = std::gcd(fj.a_prime, fj.b_prime - fj.c_prime);
    fj.bbar = std::gcd(fj.b_prime, fj.a_prime - fj.c_prime);
    fj.cbar = std::gcd(fj.c_prime, fj.a_prime - fj.b_prime);
    fj.res_a = fj.a_prime % (2 * fj.abar);
    fj.res_b = fj.b_prime % (2 * fj.bbar);
    fj.res_c = fj.c_prime % (2 * fj.cbar);
    fj.irreducible = fj.res_a != 0 && fj.res_b != 0 && fj.res_c != 0;
    return fj;
}

SparsePoly quadrinomial_poly(long long a, long long b, long long c, int e1, int e2, int e3) {
    SparsePoly p = SparsePoly::monomial(1, a);
    p.add_term(b, e1);
    p.add_term(c, e2);
    p.add_term(0, e3);
    return p;
}

std::string quad_form_name(QuadForm form) {
    switch (form) {
        case QuadForm::Form8r7r1: return "Form8r7r1";
        case QuadForm::Form8r7r1Neg: return "Form8r7r1Neg";
        case QuadForm::Form8r4r2r: return "Form8r4r2r";
        case QuadForm::Form8r6r4r: return "Form8r6r4r";
    }
    return "?";
}

SparsePoly quad_form_poly(QuadForm form, long long r) {
    switch (form) {
        case QuadForm::Form8r7r1: return quadrinomial_poly(8 * r, 7 * r, r, 1, 1, -1);
        case QuadForm::Form8r7r1Neg: return quadrinomial_poly(8 * r, 7 * r, r, -1, -1, -1);
        case QuadForm::Form8r4r2r: return quadrinomial_poly(8 * r, 4 * r, 2 * r, 1, 1, -1);
        case QuadForm::Form8r6r4r: return quadrinomial_poly(8 * r, 6 * r, 4 * r, -1, -1, -1);
    }
    throw std::logic_error("bad form");
}

std::vector<SparsePoly> quad_form_factors(QuadForm form, long long r) {
    SparsePoly quad = SparsePoly::monomial(1, 2 * r);
    quad.add_term(0, 1);  // x^{2r} + 1
    const auto cubic = [&](int c2, long long e2, int c0) {
        SparsePoly p = SparsePoly::monomial(1, 3 * r);
        p.add_term(e2, c2);
        p.add_term(0, c0);
        return p;
    };
    switch (form) {
        case QuadForm::Form8r7r1:
            return {quad, cubic(1, 2 * r, -1), cubic(-1, r, 1)};
        case QuadForm::Form8r7r1Neg:
            return {quad, cubic(-1, 2 * r, 1), cubic(-1, r, -1)};
        case QuadForm::Form8r4r2r:
            return {quad, cubic(1, 2 * r, -1), cubic(-1, 2 * r, 1)};
        case QuadForm::Form8r6r4r:
            return {quad, cubic(-1, r, -1), cubic(-1, r, 1)};
    }
    throw std::logic_error("bad form");
}

QuadReport quadrinomial_decompose(long long a, long long b, long long c, int e1, int e2, int e3) {
    if (!(a > b && b > c && c > 0)) throw BadOrdering("quadrinomial requires a > b > c > 0");
    require_sign(e1, "e1");
    require_sign(e2, "e2");
    require_sign(e3, "e3");

    QuadReport rep;
    rep.a = a;
    rep.b = b;
    rep.c = c;
    rep.e1 = e1;
    rep.e2 = e2;
    rep.e3 = e3;
    rep.f = quadrinomial_poly(a, b, c, e1, e2, e3);
    rep.A = poly_gcd(rep.f, reciprocal(rep.f));
    rep.B = exact_div(rep.f, rep.A);

    if (a % 8 == 0) {
        const long long r = a / 8;
        const bool pos = e1 == 1 && e2 == 1 && e3 == -1;
        const bool neg = e1 == -1 && e2 == -1 && e3 == -1;
        if (pos && b == 7 * r && c == r) rep.exceptional_form = QuadForm::Form8r7r1;
        if (neg && b == 7 * r && c == r) rep.exceptional_form = QuadForm::Form8r7r1Neg;
        if (pos && b == 4 * r && c == 2 * r) rep.exceptional_form = QuadForm::Form8r4r2r;
        if (neg && b == 6 * r && c == 4 * r) rep.exceptional_form = QuadForm::Form8r6r4r;
        if (rep.exceptional_form) rep.r = r;
    }

    if (rep.exceptional_form) {
        rep.factors = quad_form_factors(*rep.exceptional_form, rep.r);
        SparsePoly prod = SparsePoly::one();
        for (const auto& f : rep.factors) prod *= f;
        if (prod != rep.f)
            throw CertificateError("exceptional factor list does not multiply back to " +
                                   to_string(rep.f));
        rep.b_irreducible = false;
    } else {
        rep.factors = {rep.A, rep.B};
        rep.b_irreducible = true;
    }
    return rep;
}

UnitRootLocalization unit_root_candidates(long long a, long long b, long long c, int e1, int e2,
                                          int e3) {
    if (!(a > b && b > c && c > 0)) throw BadOrdering("quadrinomial requires a > b > c > 0");
    require_sign(e1, "e1");
    require_sign(e2, "e2");
    require_sign(e3, "e3");

    UnitRootLocalization u;
    u.t = std::gcd(a, std::gcd(b, c));
    u.a1 = a / u.t;
    u.b1 = b / u.t;
    u.c1 = c / u.t;
    u.t1 = std::gcd(u.a1, u.b1 - u.c1);
    u.t2 = std::gcd(u.b1, u.a1 - u.c1);
    u.t3 = std::gcd(u.c1, u.a1 - u.b1);

    std::set<long long> orders;
    for (long long ti : {u.t1, u.t2, u.t3}) {
        const long long bound = 2 * u.t * ti;
        for (long long n = 1; n <= bound; ++n)
            if (bound % n == 0) orders.insert(n);
    }
    u.candidate_orders.assign(orders.begin(), orders.end());

    const SparsePoly f = quadrinomial_poly(a, b, c, e1, e2, e3);
    for (long long n : u.candidate_orders)
        if (cyclotomic_divides(n, f)) u.confirmed_orders.push_back(n);
    return u;
}

void to_json(nlohmann::json& j, const TrinomialReport& r) {
    j = {{"input", {{"a", r.a}, {"b", r.b}, {"eps", r.eps}, {"delta", r.delta}}},
         {"poly", to_string(trinomial_poly(r.a, r.b, r.eps, r.delta))},
         {"ell", r.ell},
         {"a1", r.a1},
         {"b1", r.b1},
         {"eps_eff", r.eps_eff},
         {"delta_eff", r.delta_eff},
         {"reciprocal_applied", r.reciprocal_applied},
         {"verdict", r.verdict == TriVerdict::Irreducible ? "Irreducible" : "Exceptional"}};
    if (r.cyclo_factor) j["cyclo_factor"] = to_string(*r.cyclo_factor);
    if (r.cofactor) j["cofactor"] = to_string(*r.cofactor);
}

void to_json(nlohmann::json& j, const FJCriterion& c) {
    j = {{"a", c.a},
         {"b", c.b},
         {"c", c.c},
         {"k", c.k},
         {"m_odd", c.m_odd},
         {"a_prime", c.a_prime},
         {"b_prime", c.b_prime},
         {"c_prime", c.c_prime},
         {"abar", c.abar},
         {"bbar", c.bbar},
         {"cbar", c.cbar},
         {"residues", {c.res_a, c.res_b, c.res_c}},
         {"irreducible", c.irreducible}};
}

void to_json(nlohmann::json& j, const QuadReport& r) {
    j = {{"input",
          {{"a", r.a}, {"b", r.b}, {"c", r.c}, {"signs", {r.e1, r.e2, r.e3}}}},
         {"poly", to_string(r.f)},
         {"A", to_string(r.A)},
         {"B", to_string(r.B)},
         {"b_irreducible", r.b_irreducible}};
    if (r.exceptional_form) {
        j["exceptional_form"] = quad_form_name(*r.exceptional_form);
        j["r"] = r.r;
    } else {
        j["exceptional_form"] = nullptr;
    }
    auto& fs = j["factors"] = nlohmann::json::array();
    for (const auto& f : r.factors) fs.push_back(to_string(f));
}

void to_json(nlohmann::json& j, const UnitRootLocalization& u) {
    j = {{"t", u.t},           {"a1", u.a1}, {"b1", u.b1},
         {"c1", u.c1},         {"t1", u.t1}, {"t2", u.t2},
         {"t3", u.t3},         {"candidate_orders", u.candidate_orders},
         {"confirmed_orders", u.confirmed_orders}};
}

}  // namespace lipeq
