#include "lipeq/derivation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

namespace lipeq {

namespace {

// Hard stop for the meet-in-the-middle search so probes between incompatible
// trees terminate; reaching it means "no certificate within budget".
constexpr std::size_t kRefineNodeCap = 20000;

}  // namespace

ExpMultiset::ExpMultiset(std::vector<long long> e) : entries(std::move(e)) {
    if (entries.empty()) throw std::invalid_argument("multiset must be nonempty");
    for (long long x : entries)
        if (x <= 0) throw std::invalid_argument("multiset entries must be positive");
    std::sort(entries.begin(), entries.end());
}

long long ExpMultiset::total() const {
    long long t = 0;
    for (long long x : entries) t += x;
    return t;
}

bool ExpMultiset::contains(long long v) const {
    return std::binary_search(entries.begin(), entries.end(), v);
}

std::string ExpMultiset::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ",";
        os << entries[i];
    }
    return os.str();
}

ExpMultiset ExpMultiset::parse(const std::string& csv) {
    std::vector<long long> e;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw ParseError("empty entry in multiset '" + csv + "'");
        try {
            std::size_t pos = 0;
            e.push_back(std::stoll(cur, &pos));
            if (pos != cur.size()) throw std::invalid_argument(cur);
        } catch (const std::exception&) {
            throw ParseError("bad entry '" + cur + "' in multiset '" + csv + "'");
        }
        cur.clear();
    };
    for (char ch : csv) {
        if (ch == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(ch)))
            cur += ch;
    }
    flush();
    try {
        return ExpMultiset(std::move(e));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

std::string Word::str() const {
    bool digits = std::all_of(letters.begin(), letters.end(), [](int l) { return l <= 9; });
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (digits)
            out += static_cast<char>('0' + letters[i]);
        else {
            if (i) out += '.';
            out += std::to_string(letters[i]);
        }
    }
    return out;
}

Word Word::parse(const std::string& s) {
    Word w;
    if (s.empty()) throw ParseError("empty word");
    if (s.find('.') != std::string::npos) {
        std::string cur;
        for (char ch : s) {
            if (ch == '.') {
                if (cur.empty()) throw ParseError("bad word '" + s + "'");
                w.letters.push_back(std::stoi(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (cur.empty()) throw ParseError("bad word '" + s + "'");
        w.letters.push_back(std::stoi(cur));
    } else {
        for (char ch : s) {
            if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
                throw ParseError("bad word '" + s + "'");
            w.letters.push_back(ch - '0');
        }
    }
    return w;
}

long long word_weight(const Word& w, const ExpMultiset& base) {
    long long t = 0;
    for (int l : w.letters) {
        if (l < 1 || static_cast<std::size_t>(l) > base.size())
            throw std::invalid_argument("word letter out of alphabet range");
        t += base.entries[l - 1];
    }
    return t;
}

WeightedPartition trivial_partition(const ExpMultiset& base) {
    WeightedPartition p;
    p.base = base;
    for (std::size_t i = 1; i <= base.size(); ++i) p.words.push_back(Word{{static_cast<int>(i)}});
    p.weights = base;
    return p;
}

ExpMultiset expand(const ExpMultiset& state, long long value, const ExpMultiset& base) {
    auto it = std::lower_bound(state.entries.begin(), state.entries.end(), value);
    if (it == state.entries.end() || *it != value)
        throw ValueAbsent("value " + std::to_string(value) + " not in {" + state.str() + "}");
    std::vector<long long> out;
    out.reserve(state.size() - 1 + base.size());
    out.insert(out.end(), state.entries.begin(), it);
    out.insert(out.end(), it + 1, state.entries.end());
    for (long long b : base.entries) out.push_back(value + b);
    return ExpMultiset(std::move(out));
}

ExpMultiset collapse(const ExpMultiset& state, long long value, const ExpMultiset& base) {
    std::vector<long long> out = state.entries;
    for (long long b : base.entries) {
        auto it = std::lower_bound(out.begin(), out.end(), value + b);
        if (it == out.end() || *it != value + b)
            throw PatternAbsent("children of " + std::to_string(value) + " over {" + base.str() +
                                "} not contained in {" + state.str() + "}");
        out.erase(it);
    }
    out.push_back(value);
    return ExpMultiset(std::move(out));
}

namespace {

// Replaces the lexicographically least word of the given weight with its
// children; keeps the list sorted.
std::vector<Word> expand_words(const std::vector<Word>& words, long long value,
                               const ExpMultiset& base) {
    std::vector<Word> out;
    out.reserve(words.size() - 1 + base.size());
    bool done = false;
    for (const Word& w : words) {
        if (!done && word_weight(w, base) == value) {
            for (std::size_t i = 1; i <= base.size(); ++i) {
                Word child = w;
                child.letters.push_back(static_cast<int>(i));
                out.push_back(std::move(child));
            }
            done = true;
        } else {
            out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool within_budget(const ExpMultiset& m, const SearchBudget& b) {
    return m.max_entry() <= b.max_weight && m.size() <= static_cast<std::size_t>(b.max_size);
}

std::vector<long long> distinct_values(const ExpMultiset& m) {
    std::vector<long long> v = m.entries;
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::map<ExpMultiset, std::vector<Word>> enumerate_cuts(const ExpMultiset& base,
                                                        const SearchBudget& budget) {
    if (base.size() < 2) throw std::invalid_argument("base must have at least 2 entries");
    std::map<ExpMultiset, std::vector<Word>> info;
    std::set<ExpMultiset> pending;
    info.emplace(base, trivial_partition(base).words);
    pending.insert(base);
    while (!pending.empty()) {
        ExpMultiset cur = *pending.begin();
        pending.erase(pending.begin());
        const auto& words = info.at(cur);
        for (long long v : distinct_values(cur)) {
            ExpMultiset next = expand(cur, v, base);
            if (!within_budget(next, budget)) continue;
            if (info.count(next)) continue;
            info.emplace(next, expand_words(words, v, base));
            pending.insert(next);
        }
    }
    return info;
}

std::set<ExpMultiset> cuts_within(const ExpMultiset& base, const SearchBudget& budget) {
    std::set<ExpMultiset> out;
    for (const auto& [m, words] : enumerate_cuts(base, budget)) out.insert(m);
    return out;
}

namespace {

SparsePoly multiset_char_poly(const ExpMultiset& m) {
    SparsePoly p;
    for (long long e : m.entries) p.add_term(e, 1);
    p.add_term(0, -1);
    return p;
}

// Exact shared-root test on (0,1) for two exponent multisets.
bool same_char_root(const ExpMultiset& a, const ExpMultiset& b) {
    SparsePoly g = poly_gcd(multiset_char_poly(a), multiset_char_poly(b));
    if (g.degree() < 1) return false;
    return sturm_count(squarefree_part(g), Interval(Rat(0), Rat(1))) >= 1;
}

// One side of the meet-in-the-middle search: cuts of `base` discovered level
// by level in increasing total weight.
struct SearchSide {
    ExpMultiset base;
    std::map<long long, std::map<ExpMultiset, std::vector<Word>>> levels;
    std::set<ExpMultiset> seen;
    std::size_t created = 0;

    explicit SearchSide(const ExpMultiset& b) : base(b) {
        levels[b.total()].emplace(b, trivial_partition(b).words);
        seen.insert(b);
        created = 1;
    }

    long long next_total() const {
        return levels.empty() ? -1 : levels.begin()->first;
    }

    // Expands every state at the given total. Returns false when the state
    // cap is exhausted.
    bool expand_level(long long t, const SearchBudget& budget) {
        auto it = levels.find(t);
        if (it == levels.end()) return true;
        for (const auto& [state, words] : it->second) {
            for (long long v : distinct_values(state)) {
                ExpMultiset next = expand(state, v, base);
                if (!within_budget(next, budget)) continue;
                if (!seen.insert(next).second) continue;
                if (++created > kRefineNodeCap) return false;
                auto nw = expand_words(words, v, base);
                levels[next.total()].emplace(std::move(next), std::move(nw));
            }
        }
        levels.erase(t);
        return true;
    }
};

}  // namespace

std::optional<Refinement> common_refinement(const ExpMultiset& v, const ExpMultiset& w,
                                            const SearchBudget& budget) {
    if (!same_char_root(v, w)) return std::nullopt;
    SearchSide A(v), B(w);
    while (true) {
        long long ta = A.next_total(), tb = B.next_total();
        if (ta < 0 && tb < 0) return std::nullopt;
        long long t = ta < 0 ? tb : tb < 0 ? ta : std::min(ta, tb);
        // all states with smaller totals are expanded, so both @t are final
        auto ia = A.levels.find(t);
        auto ib = B.levels.find(t);
        if (ia != A.levels.end() && ib != B.levels.end()) {
            auto sa = ia->second.begin();
            auto sb = ib->second.begin();
            while (sa != ia->second.end() && sb != ib->second.end()) {
                if (sa->first == sb->first) {
                    Refinement r;
                    r.refinement = sa->first;
                    r.left = WeightedPartition{v, sa->second, sa->first};
                    r.right = WeightedPartition{w, sb->second, sb->first};
                    return r;
                }
                if (sa->first < sb->first)
                    ++sa;
                else
                    ++sb;
            }
        }
        if (!A.expand_level(t, budget)) return std::nullopt;
        if (!B.expand_level(t, budget)) return std::nullopt;
        // a side with no pending levels has no cuts left to offer
        if (A.levels.empty() || B.levels.empty()) return std::nullopt;
    }
}

namespace {

CertificateChain chain_from_path(
    const std::vector<ExpMultiset>& path,
    const std::map<std::pair<ExpMultiset, ExpMultiset>, Refinement>& edges) {
    CertificateChain chain;
    chain.vectors = path;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        chain.links.push_back({edges.at({path[i], path[i + 1]}).left,
                               edges.at({path[i], path[i + 1]}).right});
    return chain;
}

}  // namespace

std::optional<CertificateChain> equivalence_chain(const ExpMultiset& v, const ExpMultiset& w,
                                                  const SearchBudget& budget) {
    if (v == w) return CertificateChain{{v}, {}};
    if (!same_char_root(v, w)) return std::nullopt;

    // goal first, then the two-entry same-dimension candidates in canonical order
    std::vector<ExpMultiset> candidates{w};
    for (long long p = 1; p <= budget.max_weight; ++p)
        for (long long q = p; q <= budget.max_weight; ++q) {
            ExpMultiset cand(std::vector<long long>{p, q});
            if (cand == v || cand == w) continue;
            if (same_char_root(cand, v)) candidates.push_back(std::move(cand));
        }

    std::map<std::pair<ExpMultiset, ExpMultiset>, Refinement> edges;
    std::map<std::pair<ExpMultiset, ExpMultiset>, bool> probed;
    auto edge = [&](const ExpMultiset& a, const ExpMultiset& b) -> bool {
        auto key = std::make_pair(a, b);
        auto it = probed.find(key);
        if (it != probed.end()) return it->second;
        auto r = common_refinement(a, b, budget);
        probed[key] = r.has_value();
        if (r) edges.emplace(key, std::move(*r));
        return probed[key];
    };

    std::deque<std::vector<ExpMultiset>> queue{{v}};
    std::set<ExpMultiset> visited{v};
    while (!queue.empty()) {
        std::vector<ExpMultiset> path = std::move(queue.front());
        queue.pop_front();
        const ExpMultiset& cur = path.back();
        for (const ExpMultiset& cand : candidates) {
            if (cand == cur) continue;
            if (cand != w && visited.count(cand)) continue;
            if (!edge(cur, cand)) continue;
            if (cand == w) {
                std::vector<ExpMultiset> full = path;
                full.push_back(w);
                CertificateChain chain = chain_from_path(full, edges);
                if (!verify_chain(chain))
                    throw CertificateError("searched chain failed re-verification");
                return chain;
            }
            // path holds v plus path.size()-1 intermediates so far
            if (path.size() <= static_cast<std::size_t>(budget.max_chain)) {
                visited.insert(cand);
                std::vector<ExpMultiset> next = path;
                next.push_back(cand);
                queue.push_back(std::move(next));
            }
        }
    }
    return std::nullopt;
}

Partition partition_for_homogeneous(int m, const ExpMultiset& targets) {
    if (m < 2) throw std::invalid_argument("alphabet size must be at least 2");
    // exact Kraft equality: sum m^(L - a_i) must equal m^L
    const long long L = targets.max_entry();
    Int lhs = 0;
    for (long long a : targets.entries)
        lhs += int_pow(m, static_cast<unsigned long long>(L - a));
    if (lhs != int_pow(m, static_cast<unsigned long long>(L)))
        throw KraftViolation("sum of " + std::to_string(m) + "^-a_i is not exactly 1 for {" +
                             targets.str() + "}");

    // induction on the largest length: replace the block of maximal-length
    // targets by r = count/m parents one level up, recurse, then expand the
    // lexicographically greatest r words of that length back into children
    std::vector<long long> lengths = targets.entries;
    struct Frame {
        long long level;
        long long expand_count;
    };
    std::vector<Frame> plan;
    while (lengths.back() > 1) {
        const long long ell = lengths.back();
        auto first = std::lower_bound(lengths.begin(), lengths.end(), ell);
        const long long n1 = lengths.end() - first;
        if (n1 % m != 0)
            throw KraftViolation("internal: maximal-length block not divisible by alphabet size");
        const long long r = n1 / m;
        lengths.erase(first, lengths.end());
        lengths.insert(std::lower_bound(lengths.begin(), lengths.end(), ell - 1), r, ell - 1);
        plan.push_back({ell - 1, r});
    }
    if (static_cast<long long>(lengths.size()) != m)
        throw KraftViolation("internal: base case does not fill the alphabet");

    std::vector<Word> words;
    for (int i = 1; i <= m; ++i) words.push_back(Word{{i}});
    for (auto it = plan.rbegin(); it != plan.rend(); ++it) {
        // take the lex-greatest expand_count words of length `level`
        std::vector<Word> at_level;
        for (const Word& w : words)
            if (static_cast<long long>(w.length()) == it->level) at_level.push_back(w);
        std::sort(at_level.begin(), at_level.end());
        std::set<Word> chosen(at_level.end() - it->expand_count, at_level.end());
        std::vector<Word> next;
        for (const Word& w : words) {
            if (chosen.count(w)) {
                for (int i = 1; i <= m; ++i) {
                    Word child = w;
                    child.letters.push_back(i);
                    next.push_back(std::move(child));
                }
            } else {
                next.push_back(w);
            }
        }
        words = std::move(next);
    }
    std::sort(words.begin(), words.end());
    return Partition{m, std::move(words)};
}

namespace {

// Recursive tree check: below every node either exactly one word terminates,
// or all m branches are present and complete.
bool complete_and_prefix_free(const std::vector<const Word*>& group, std::size_t depth, int m) {
    if (group.empty()) return false;
    if (group.size() == 1 && group[0]->length() == depth) return true;
    std::vector<std::vector<const Word*>> buckets(m);
    for (const Word* w : group) {
        if (w->length() <= depth) return false;  // a proper prefix of another word
        const int l = w->letters[depth];
        if (l < 1 || l > m) return false;
        buckets[l - 1].push_back(w);
    }
    for (const auto& b : buckets)
        if (!complete_and_prefix_free(b, depth + 1, m)) return false;
    return true;
}

bool words_form_partition(const std::vector<Word>& words, int m) {
    if (words.empty() || m < 1) return false;
    std::vector<const Word*> group;
    group.reserve(words.size());
    for (const Word& w : words) {
        if (w.length() == 0) return false;
        group.push_back(&w);
    }
    return complete_and_prefix_free(group, 0, m);
}

}  // namespace

bool verify_partition(const WeightedPartition& p) {
    const int m = static_cast<int>(p.base.size());
    if (!words_form_partition(p.words, m)) return false;
    std::vector<long long> weights;
    for (const Word& w : p.words) {
        for (int l : w.letters)
            if (l < 1 || l > m) return false;
        weights.push_back(word_weight(w, p.base));
    }
    std::sort(weights.begin(), weights.end());
    return weights == p.weights.entries;
}

bool verify_partition(const Partition& p) {
    return words_form_partition(p.words, p.base_size);
}

bool verify_chain(const CertificateChain& chain) {
    if (chain.vectors.empty()) return false;
    if (chain.links.size() + 1 != chain.vectors.size()) return false;
    for (std::size_t i = 0; i < chain.links.size(); ++i) {
        const RefinementLink& link = chain.links[i];
        if (link.left.base != chain.vectors[i]) return false;
        if (link.right.base != chain.vectors[i + 1]) return false;
        if (!verify_partition(link.left)) return false;
        if (!verify_partition(link.right)) return false;
        if (link.left.weights != link.right.weights) return false;
    }
    return true;
}

void to_json(nlohmann::json& j, const ExpMultiset& m) { j = m.entries; }

void to_json(nlohmann::json& j, const WeightedPartition& p) {
    auto words = nlohmann::json::array();
    for (const Word& w : p.words) words.push_back(w.str());
    j = {{"base", p.base.entries}, {"words", words}, {"weights", p.weights.entries}};
}

void to_json(nlohmann::json& j, const CertificateChain& c) {
    auto vectors = nlohmann::json::array();
    for (const auto& v : c.vectors) vectors.push_back(v.entries);
    auto links = nlohmann::json::array();
    for (const auto& l : c.links) links.push_back({{"left", l.left}, {"right", l.right}});
    j = {{"vectors", vectors}, {"links", links}};
}

namespace {

ExpMultiset multiset_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty integer array");
    std::vector<long long> e;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError("multiset entries must be integers");
        e.push_back(x.get<long long>());
    }
    try {
        return ExpMultiset(std::move(e));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

WeightedPartition partition_from_json(const nlohmann::json& j) {
    WeightedPartition p;
    p.base = multiset_from_json(j.at("base"));
    for (const auto& w : j.at("words")) {
        if (!w.is_string()) throw ParseError("partition words must be strings");
        p.words.push_back(Word::parse(w.get<std::string>()));
    }
    p.weights = multiset_from_json(j.at("weights"));
    return p;
}

}  // namespace

CertificateChain chain_from_json(const nlohmann::json& j) {
    CertificateChain c;
    if (!j.contains("vectors")) throw ParseError("certificate is missing 'vectors'");
    for (const auto& v : j.at("vectors")) c.vectors.push_back(multiset_from_json(v));
    if (j.contains("links"))
        for (const auto& l : j.at("links"))
            c.links.push_back({partition_from_json(l.at("left")),
                               partition_from_json(l.at("right"))});
    return c;
}

}  // namespace lipeq
