#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "lipeq/poly.hpp"

namespace lipeq {

// Canonical multiset of positive integer exponents (sorted ascending).
struct ExpMultiset {
    std::vector<long long> entries;

    ExpMultiset() = default;
    explicit ExpMultiset(std::vector<long long> e);

    std::size_t size() const { return entries.size(); }
    long long total() const;
    long long max_entry() const { return entries.back(); }
    bool contains(long long v) const;

    std::string str() const;  // "2,5,6"
    static ExpMultiset parse(const std::string& csv);

    friend bool operator==(const ExpMultiset&, const ExpMultiset&) = default;
    friend auto operator<=>(const ExpMultiset& a, const ExpMultiset& b) {
        return a.entries <=> b.entries;
    }
};

// Word over the alphabet {1..m}; letter i carries the weight of the i-th
// entry of the (canonically sorted) base multiset.
struct Word {
    std::vector<int> letters;

    std::size_t length() const { return letters.size(); }
    std::string str() const;  // digits when all letters <= 9, else dot-joined
    static Word parse(const std::string& s);

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) { return a.letters <=> b.letters; }
};

long long word_weight(const Word& w, const ExpMultiset& base);

// Prefix-free complete word list over {1..base_size}; completeness in the
// exact Kraft sense (sum of base_size^-length equals 1).
struct Partition {
    int base_size = 0;
    std::vector<Word> words;
};

// Word list rooted in a weighted base; weights holds the multiset of word
// weights (sum of letter weights along each word).
struct WeightedPartition {
    ExpMultiset base;
    std::vector<Word> words;
    ExpMultiset weights;
};

WeightedPartition trivial_partition(const ExpMultiset& base);

// One step of a certificate chain: two partitions with equal weight multisets.
struct RefinementLink {
    WeightedPartition left, right;
};

struct CertificateChain {
    std::vector<ExpMultiset> vectors;  // v_0 .. v_k
    std::vector<RefinementLink> links;  // links[i] connects vectors[i], vectors[i+1]
};

struct SearchBudget {
    long long max_weight = 24;  // cap on the largest exponent in any cut
    int max_size = 64;          // cap on multiset cardinality
    int max_chain = 3;          // cap on intermediate vectors in a chain
};

// Replaces one copy of `value` by {value + b : b in base}. Throws ValueAbsent.
ExpMultiset expand(const ExpMultiset& state, long long value, const ExpMultiset& base);

// Inverse move: removes {value + b : b in base} (with multiplicity), inserts
// one copy of `value`. Throws PatternAbsent.
ExpMultiset collapse(const ExpMultiset& state, long long value, const ExpMultiset& base);

// All multisets reachable from base by repeated expand moves within the
// budget caps, base included. Exhaustive; meant for small budgets.
std::set<ExpMultiset> cuts_within(const ExpMultiset& base, const SearchBudget& budget);

// Same enumeration, keeping a witnessing word list per cut.
std::map<ExpMultiset, std::vector<Word>> enumerate_cuts(const ExpMultiset& base,
                                                        const SearchBudget& budget);

struct Refinement {
    ExpMultiset refinement;
    WeightedPartition left, right;  // cuts of the two inputs, equal weights
};

// Meet-in-the-middle search (iterative deepening on total weight) for a
// multiset that is a cut of both trees. Deterministic: smallest total weight
// first, lexicographically least multiset on ties. Returns nothing when the
// budget (or the internal per-side state cap) is exhausted.
std::optional<Refinement> common_refinement(const ExpMultiset& v, const ExpMultiset& w,
                                            const SearchBudget& budget);

// Chain of refinement links between v and w, at most budget.max_chain
// intermediate vectors. Candidates for intermediates are the two-entry
// multisets with entries <= max_weight that pass the exact same-dimension
// test. The returned chain is verified before being handed back.
std::optional<CertificateChain> equivalence_chain(const ExpMultiset& v, const ExpMultiset& w,
                                                  const SearchBudget& budget);

// Constructive partition for a homogeneous base: prefix-free complete word
// list over {1..m} whose length multiset equals targets. Requires the exact
// Kraft equality sum m^-a_i = 1; throws KraftViolation otherwise.
Partition partition_for_homogeneous(int m, const ExpMultiset& targets);

// Structural re-verification: prefix-freeness and completeness by the
// recursive tree check, weights recomputed from scratch and compared.
bool verify_partition(const WeightedPartition& p);
bool verify_partition(const Partition& p);

// Structural chain check: bases line up with the vector list, every
// partition verifies, and the two weight multisets of each link are equal.
bool verify_chain(const CertificateChain& chain);

void to_json(nlohmann::json& j, const ExpMultiset& m);
void to_json(nlohmann::json& j, const WeightedPartition& p);
void to_json(nlohmann::json& j, const CertificateChain& c);
CertificateChain chain_from_json(const nlohmann::json& j);

}  // namespace lipeq
