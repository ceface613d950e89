#include "lipeq/decide.hpp"

#include <algorithm>
#include <numeric>

namespace lipeq {

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Equivalent: return "Equivalent";
        case Outcome::NotEquivalent: return "NotEquivalent";
        case Outcome::Unknown: return "Unknown";
    }
    return "?";
}

ExpMultiset to_multiset(const PowerVector& v) { return ExpMultiset(v.exponents); }

bool verify_certificate(const CertificateChain& chain, const ExpMultiset& v,
                        const ExpMultiset& w) {
    if (!verify_chain(chain)) return false;
    if (chain.vectors.front() != v) return false;
    if (chain.vectors.back() != w) return false;
    if (chain.vectors.size() == 1 && v != w) return false;
    return true;
}

namespace {

Verdict make_base(const PowerVector& v, const PowerVector& w, const SearchBudget& budget) {
    Verdict out;
    out.inputs = {{"alpha", v.exponents}, {"beta", w.exponents}};
    out.budget = budget;
    return out;
}

Verdict equivalent_with_chain(Verdict out, const char* rule, CertificateChain chain,
                              const PowerVector& v, const PowerVector& w) {
    if (!verify_certificate(chain, to_multiset(v), to_multiset(w)))
        throw CertificateError("certificate for rule " + std::string(rule) +
                               " failed re-verification");
    out.outcome = Outcome::Equivalent;
    out.rule = rule;
    out.certificate = std::move(chain);
    return out;
}

// Shrinks isolating intervals until they are disjoint; the two roots differ
// whenever the exact shared-root test failed, so this terminates.
DimensionMismatch disjoint_intervals(const PowerVector& v, const PowerVector& w) {
    Rat tol = kDefaultDimensionTol;
    while (true) {
        Interval a = dimension(v, tol).root_interval;
        Interval b = dimension(w, tol).root_interval;
        if (a.hi < b.lo || b.hi < a.lo) return DimensionMismatch{a, b};
        tol /= 1024;
    }
}

// Homogeneous characterization. Assumes same dimension already established.
Verdict homogeneous_rule(Verdict out, const PowerVector& v, const PowerVector& w) {
    const bool v_homog = is_homogeneous(v).has_value();
    const PowerVector& H = v_homog ? v : w;
    const PowerVector& O = v_homog ? w : v;
    const auto [a, m] = *is_homogeneous(H);

    for (const auto& [q, k] : perfect_power_exponents(m)) {
        bool divides_all = true;
        for (long long b : O.exponents)
            if ((q * b) % a != 0) {
                divides_all = false;
                break;
            }
        if (!divides_all) continue;
        std::vector<long long> p;
        long long pmax = 0;
        for (long long b : O.exponents) {
            p.push_back(q * b / a);
            pmax = std::max(pmax, p.back());
        }
        Int kraft = 0;
        for (long long pj : p)
            kraft += int_pow(k, static_cast<unsigned long long>(pmax - pj));
        if (kraft != int_pow(k, static_cast<unsigned long long>(pmax))) continue;

        // matched; reduce to an exponent dividing a so the intermediate
        // vector has integer entries over the same ratio
        const long long qc = std::gcd(q, a);
        const long long kc_ll = [&] {
            Int kc = int_pow(k, static_cast<unsigned long long>(q / qc));
            return kc.convert_to<long long>();
        }();
        const long long d = a / qc;
        std::vector<long long> pc;
        for (long long b : O.exponents) pc.push_back(b / d);

        ExpMultiset hm = to_multiset(H), om = to_multiset(O);
        ExpMultiset u(std::vector<long long>(static_cast<std::size_t>(kc_ll), d));

        const auto partition_of_u_matching = [&](const ExpMultiset& lengths) {
            Partition part = partition_for_homogeneous(static_cast<int>(kc_ll), lengths);
            WeightedPartition wp;
            wp.base = u;
            wp.words = part.words;
            std::vector<long long> weights;
            for (const Word& word : wp.words) weights.push_back(word_weight(word, u));
            std::sort(weights.begin(), weights.end());
            wp.weights = ExpMultiset(std::move(weights));
            return wp;
        };

        CertificateChain chain;
        if (u == hm) {
            chain.vectors = {hm, om};
            chain.links.push_back({partition_of_u_matching(ExpMultiset(pc)),
                                   trivial_partition(om)});
        } else if (u == om) {
            chain.vectors = {hm, om};
            chain.links.push_back(
                {trivial_partition(hm),
                 partition_of_u_matching(
                     ExpMultiset(std::vector<long long>(H.size(), qc)))});
        } else {
            chain.vectors = {hm, u, om};
            chain.links.push_back(
                {trivial_partition(hm),
                 partition_of_u_matching(
                     ExpMultiset(std::vector<long long>(H.size(), qc)))});
            chain.links.push_back({partition_of_u_matching(ExpMultiset(pc)),
                                   trivial_partition(om)});
        }
        if (!v_homog) {
            std::reverse(chain.vectors.begin(), chain.vectors.end());
            std::reverse(chain.links.begin(), chain.links.end());
            for (auto& link : chain.links) std::swap(link.left, link.right);
        }
        return equivalent_with_chain(std::move(out), "R2", std::move(chain), v, w);
    }

    out.outcome = Outcome::NotEquivalent;
    out.rule = "R2";
    out.witness = TheoremInstance{
        "homogeneous-characterization",
        {{"a", a}, {"m", m}, {"other", O.exponents}, {"swapped", !v_homog}}};
    return out;
}

std::optional<CertificateChain> searched_chain(const PowerVector& v, const PowerVector& w,
                                               const SearchBudget& budget) {
    return equivalence_chain(to_multiset(v), to_multiset(w), budget);
}

Verdict two_branch_rule(Verdict out, const PowerVector& v, const PowerVector& w,
                        const SearchBudget& budget) {
    const long long v_lo = v.exponents[0], v_hi = v.exponents[1];
    const long long w_lo = w.exponents[0], w_hi = w.exponents[1];
    const bool pattern = (v_hi == 5 * v_lo && w_hi == 3 * v_lo && w_lo == 2 * v_lo) ||
                         (w_hi == 5 * w_lo && v_hi == 3 * w_lo && v_lo == 2 * w_lo);
    if (pattern) {
        if (auto chain = searched_chain(v, w, budget))
            return equivalent_with_chain(std::move(out), "R3", std::move(*chain), v, w);
        out.outcome = Outcome::Equivalent;
        out.rule = "R3";
        out.certificate = TheoremInstance{
            "two-branch-classification",
            {{"alpha", v.exponents}, {"beta", w.exponents}}};
        return out;
    }
    out.outcome = Outcome::NotEquivalent;
    out.rule = "R3";
    out.witness = TheoremInstance{"two-branch-classification",
                                  {{"alpha", v.exponents}, {"beta", w.exponents}}};
    return out;
}

// Criteria for a three-entry vector against a two-entry one. Returns nothing
// when no rule clause applies (duplicates were already filtered by the
// caller; the classification clause needs its own hypotheses).
std::optional<Verdict> three_two_rule(Verdict out, const PowerVector& v, const PowerVector& w,
                                      const SearchBudget& budget) {
    const bool v_is_three = v.size() == 3;
    const PowerVector& t3 = v_is_three ? v : w;
    const PowerVector& t2 = v_is_three ? w : v;
    const long long a = t3.exponents[2], b = t3.exponents[1], c = t3.exponents[0];
    const long long d = t2.exponents[1], e = t2.exponents[0];

    if (a < d) {
        out.outcome = Outcome::NotEquivalent;
        out.rule = "R5";
        out.witness = MaxExponent{v_is_three ? a : d, v_is_three ? d : a};
        return out;
    }
    FJCriterion fj = quadrinomial_irreducible(a, b, c);
    if (fj.irreducible) {
        out.outcome = Outcome::NotEquivalent;
        out.rule = "R5";
        out.witness = IrreducibleQuadrinomial{fj};
        return out;
    }
    if (a == b + c && std::gcd(a, std::gcd(b, c)) == 1) {
        const bool equivalent =
            (a == 4 && b == 3 && c == 1 && d == 2 && e == 1) ||
            (a == 8 && b == 7 && c == 1 && ((d == 5 && e == 1) || (d == 3 && e == 2)));
        if (equivalent) {
            if (auto chain = searched_chain(v, w, budget))
                return equivalent_with_chain(std::move(out), "R5", std::move(*chain), v, w);
            out.outcome = Outcome::Equivalent;
            out.rule = "R5";
            out.certificate = TheoremInstance{
                "three-vs-two-classification",
                {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", e}}};
            return out;
        }
        out.outcome = Outcome::NotEquivalent;
        out.rule = "R5";
        out.witness = TheoremInstance{
            "three-vs-two-classification",
            {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", e}}};
        return out;
    }
    return std::nullopt;
}

}  // namespace

Verdict decide(const PowerVector& v, const PowerVector& w, const SearchBudget& budget) {
    Verdict out = make_base(v, w, budget);

    // R0: identical canonical multisets
    if (v == w) {
        CertificateChain trivial{{to_multiset(v)}, {}};
        return equivalent_with_chain(std::move(out), "R0", std::move(trivial), v, w);
    }

    // R1: Hausdorff dimension is an invariant
    if (!same_dimension(v, w)) {
        out.outcome = Outcome::NotEquivalent;
        out.rule = "R1";
        out.witness = disjoint_intervals(v, w);
        return out;
    }

    // R2: either side homogeneous -> complete characterization
    if (is_homogeneous(v) || is_homogeneous(w))
        return homogeneous_rule(std::move(out), v, w);

    // R3: both two-branch -> complete classification
    if (v.size() == 2 && w.size() == 2) return two_branch_rule(std::move(out), v, w, budget);

    // R5: three against two, distinct exponents only (a duplicated exponent
    // collapses the quadrinomial into a trinomial with a coefficient, where
    // these criteria do not apply)
    if ((v.size() == 3 && w.size() == 2) || (v.size() == 2 && w.size() == 3)) {
        const PowerVector& t3 = v.size() == 3 ? v : w;
        const PowerVector& t2 = v.size() == 3 ? w : v;
        const bool distinct3 = t3.exponents[0] != t3.exponents[1] &&
                               t3.exponents[1] != t3.exponents[2];
        const bool distinct2 = t2.exponents[0] != t2.exponents[1];
        if (distinct3 && distinct2) {
            if (auto verdict = three_two_rule(make_base(v, w, budget), v, w, budget))
                return *std::move(verdict);
        }
    }

    // R6: bounded refinement-chain search
    if (auto chain = searched_chain(v, w, budget))
        return equivalent_with_chain(std::move(out), "R6", std::move(*chain), v, w);
    out.outcome = Outcome::Unknown;
    out.rule = "R6";
    return out;
}

Verdict decide_ratio(const RatioVector& v, const RatioVector& w) {
    Verdict out;
    std::vector<std::string> av, bv;
    for (const Rat& r : v.ratios) av.push_back(fraction_string(r));
    for (const Rat& r : w.ratios) bv.push_back(fraction_string(r));
    out.inputs = {{"alpha", av}, {"beta", bv}};

    if (v == w) {
        out.outcome = Outcome::Equivalent;
        out.rule = "R0";
        out.certificate = TheoremInstance{"permutation", {{"alpha", av}, {"beta", bv}}};
        return out;
    }
    if (v.size() == w.size()) {
        const int m = static_cast<int>(v.size());
        const int rank_v = rank(v), rank_w = rank(w);
        if (rank_v == m || rank_w == m) {
            out.outcome = Outcome::NotEquivalent;
            out.rule = "R4";
            out.witness = TheoremInstance{
                "full-rank-permutation",
                {{"rank_alpha", rank_v}, {"rank_beta", rank_w}, {"m", m}}};
            return out;
        }
    }
    out.outcome = Outcome::Unknown;
    out.rule = "R4";
    return out;
}

void to_json(nlohmann::json& j, const TheoremInstance& t) {
    j = {{"name", t.name}, {"params", t.params}};
}

namespace {

nlohmann::json interval_json(const Interval& i) {
    return {fraction_string(i.lo), fraction_string(i.hi)};
}

}  // namespace

void to_json(nlohmann::json& j, const Witness& w) {
    if (const auto* dm = std::get_if<DimensionMismatch>(&w)) {
        j = {{"kind", "DimensionMismatch"},
             {"alpha_interval", interval_json(dm->alpha_interval)},
             {"beta_interval", interval_json(dm->beta_interval)}};
    } else if (const auto* iq = std::get_if<IrreducibleQuadrinomial>(&w)) {
        j = {{"kind", "IrreducibleQuadrinomial"}, {"criterion", iq->criterion}};
    } else if (const auto* me = std::get_if<MaxExponent>(&w)) {
        j = {{"kind", "MaxExponent"},
             {"alpha_max", me->alpha_max},
             {"beta_max", me->beta_max}};
    } else if (const auto* ti = std::get_if<TheoremInstance>(&w)) {
        j = {{"kind", "TheoremInstance"}, {"name", ti->name}, {"params", ti->params}};
    }
}

void to_json(nlohmann::json& j, const Certificate& c) {
    if (const auto* chain = std::get_if<CertificateChain>(&c)) {
        j = *chain;
        j["type"] = "chain";
    } else if (const auto* ti = std::get_if<TheoremInstance>(&c)) {
        j = {{"type", "theorem"}, {"name", ti->name}, {"params", ti->params}};
    }
}

void to_json(nlohmann::json& j, const SearchBudget& b) {
    j = {{"max_weight", b.max_weight}, {"max_size", b.max_size}, {"max_chain", b.max_chain}};
}

void to_json(nlohmann::json& j, const Verdict& v) {
    j = {{"outcome", outcome_name(v.outcome)},
         {"rule", v.rule},
         {"inputs", v.inputs},
         {"budget", v.budget}};
    j["certificate"] = v.certificate ? nlohmann::json(*v.certificate) : nlohmann::json(nullptr);
    j["witness"] = v.witness ? nlohmann::json(*v.witness) : nlohmann::json(nullptr);
}

namespace {

Interval interval_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("expected a two-element interval");
    return Interval(parse_rational(j[0].get<std::string>()),
                    parse_rational(j[1].get<std::string>()));
}

TheoremInstance theorem_from_json(const nlohmann::json& j) {
    return TheoremInstance{j.at("name").get<std::string>(),
                           j.contains("params") ? j.at("params") : nlohmann::json::object()};
}

FJCriterion criterion_from_json(const nlohmann::json& j) {
    FJCriterion c;
    c.a = j.at("a").get<long long>();
    c.b = j.at("b").get<long long>();
    c.c = j.at("c").get<long long>();
    c.k = j.at("k").get<int>();
    c.m_odd = j.at("m_odd").get<long long>();
    c.a_prime = j.at("a_prime").get<long long>();
    c.b_prime = j.at("b_prime").get<long long>();
    c.c_prime = j.at("c_prime").get<long long>();
    c.abar = j.at("abar").get<long long>();
    c.bbar = j.at("bbar").get<long long>();
    c.cbar = j.at("cbar").get<long long>();
    c.res_a = j.at("residues")[0].get<long long>();
    c.res_b = j.at("residues")[1].get<long long>();
    c.res_c = j.at("residues")[2].get<long long>();
    c.irreducible = j.at("irreducible").get<bool>();
    return c;
}

}  // namespace

Verdict verdict_from_json(const nlohmann::json& j) {
    try {
        Verdict v;
        const std::string outcome = j.at("outcome").get<std::string>();
        if (outcome == "Equivalent")
            v.outcome = Outcome::Equivalent;
        else if (outcome == "NotEquivalent")
            v.outcome = Outcome::NotEquivalent;
        else if (outcome == "Unknown")
            v.outcome = Outcome::Unknown;
        else
            throw ParseError("unknown outcome '" + outcome + "'");
        v.rule = j.at("rule").get<std::string>();
        v.inputs = j.at("inputs");
        const auto& b = j.at("budget");
        v.budget.max_weight = b.at("max_weight").get<long long>();
        v.budget.max_size = b.at("max_size").get<int>();
        v.budget.max_chain = b.at("max_chain").get<int>();
        if (j.contains("certificate") && !j.at("certificate").is_null()) {
            const auto& c = j.at("certificate");
            if (c.at("type") == "chain")
                v.certificate = chain_from_json(c);
            else
                v.certificate = theorem_from_json(c);
        }
        if (j.contains("witness") && !j.at("witness").is_null()) {
            const auto& w = j.at("witness");
            const std::string kind = w.at("kind").get<std::string>();
            if (kind == "DimensionMismatch")
                v.witness = DimensionMismatch{interval_from_json(w.at("alpha_interval")),
                                              interval_from_json(w.at("beta_interval"))};
            else if (kind == "IrreducibleQuadrinomial")
                v.witness = IrreducibleQuadrinomial{criterion_from_json(w.at("criterion"))};
            else if (kind == "MaxExponent")
                v.witness = MaxExponent{w.at("alpha_max").get<long long>(),
                                        w.at("beta_max").get<long long>()};
            else if (kind == "TheoremInstance")
                v.witness = theorem_from_json(w);
            else
                throw ParseError("unknown witness kind '" + kind + "'");
        }
        return v;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("bad verdict JSON: ") + ex.what());
    }
}

}  // namespace lipeq
