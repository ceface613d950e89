#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "lipeq/derivation.hpp"
#include "lipeq/irreducibility.hpp"
#include "lipeq/vectors.hpp"

namespace lipeq {

enum class Outcome { Equivalent, NotEquivalent, Unknown };

std::string outcome_name(Outcome o);

// A named theorem application with the matched parameters; used both as an
// equivalence certificate (trusted classification) and as a witness.
struct TheoremInstance {
    std::string name;
    nlohmann::json params;
};

struct DimensionMismatch {
    Interval alpha_interval, beta_interval;  // disjoint isolating intervals
};

struct IrreducibleQuadrinomial {
    FJCriterion criterion;
};

struct MaxExponent {
    long long alpha_max = 0, beta_max = 0;
};

using Witness = std::variant<DimensionMismatch, IrreducibleQuadrinomial, MaxExponent,
                             TheoremInstance>;
using Certificate = std::variant<CertificateChain, TheoremInstance>;

struct Verdict {
    Outcome outcome = Outcome::Unknown;
    std::string rule;  // "R0".."R6"
    std::optional<Certificate> certificate;
    std::optional<Witness> witness;
    nlohmann::json inputs;
    SearchBudget budget;
};

// Applies the decision rules in fixed order (equality, dimension, homogeneous
// characterization, two-branch classification, three-vs-two criteria, bounded
// refinement search). Every Equivalent verdict carries a certificate that is
// re-verified before return; a verification failure throws CertificateError.
Verdict decide(const PowerVector& v, const PowerVector& w, const SearchBudget& budget = {});

// Ratio mode: equality plus the full-rank permutation criterion only.
Verdict decide_ratio(const RatioVector& v, const RatioVector& w);

// Structural re-verification of a chain certificate against the inputs it
// claims to connect; independent of the search that produced it.
bool verify_certificate(const CertificateChain& chain, const ExpMultiset& v,
                        const ExpMultiset& w);

ExpMultiset to_multiset(const PowerVector& v);

void to_json(nlohmann::json& j, const TheoremInstance& t);
void to_json(nlohmann::json& j, const Witness& w);
void to_json(nlohmann::json& j, const Certificate& c);
void to_json(nlohmann::json& j, const Verdict& v);
void to_json(nlohmann::json& j, const SearchBudget& b);

// Inverse of the verdict serialization; throws ParseError on malformed input.
Verdict verdict_from_json(const nlohmann::json& j);

}  // namespace lipeq
