#include "lipeq/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lipeq/decide.hpp"

namespace lipeq::cli {

namespace {

using nlohmann::json;

struct GlobalOpts {
    std::string format = "text";
    std::string tol;
    SearchBudget budget;
};

long long env_or(const char* name, long long fallback) {
    const char* s = std::getenv(name);
    if (!s || !*s) return fallback;
    try {
        return std::stoll(s);
    } catch (const std::exception&) {
        return fallback;
    }
}

SearchBudget budget_from_env() {
    SearchBudget b;
    b.max_weight = env_or("LIPEQ_BUDGET_MAX_WEIGHT", b.max_weight);
    b.max_size = static_cast<int>(env_or("LIPEQ_BUDGET_MAX_SIZE", b.max_size));
    b.max_chain = static_cast<int>(env_or("LIPEQ_BUDGET_MAX_CHAIN", b.max_chain));
    return b;
}

Rat tol_or_default(const GlobalOpts& g) {
    if (g.tol.empty()) return kDefaultDimensionTol;
    Rat t = parse_rational(g.tol);
    if (t <= 0) throw ParseError("tolerance must be positive");
    return t;
}

void emit(const GlobalOpts& g, const json& j, std::ostream& out,
          const std::string& text) {
    if (g.format == "json")
        out << j.dump(2) << "\n";
    else
        out << text;
}

int exit_code_for(Outcome o) {
    switch (o) {
        case Outcome::Equivalent: return kExitEquivalent;
        case Outcome::NotEquivalent: return kExitNotEquivalent;
        case Outcome::Unknown: return kExitUnknown;
    }
    return kExitInternal;
}

std::string verdict_text(const Verdict& v) {
    std::ostringstream os;
    os << "outcome: " << outcome_name(v.outcome) << "\n";
    os << "rule: " << v.rule << "\n";
    if (v.certificate) {
        if (const auto* chain = std::get_if<CertificateChain>(&*v.certificate)) {
            os << "certificate: chain";
            for (std::size_t i = 0; i < chain->vectors.size(); ++i)
                os << (i ? " ~ " : " ") << "{" << chain->vectors[i].str() << "}";
            os << " (" << chain->links.size() << " link"
               << (chain->links.size() == 1 ? "" : "s") << ")\n";
            for (std::size_t i = 0; i < chain->links.size(); ++i)
                os << "  refinement " << i + 1 << ": {"
                   << chain->links[i].left.weights.str() << "}\n";
        } else if (const auto* ti = std::get_if<TheoremInstance>(&*v.certificate)) {
            os << "certificate: theorem " << ti->name << " " << ti->params.dump() << "\n";
        }
    }
    if (v.witness) {
        json wj = *v.witness;
        os << "witness: " << wj.dump() << "\n";
    }
    return os.str();
}

int cmd_decide(const GlobalOpts& g, const std::string& alpha, const std::string& beta,
               std::ostream& out) {
    Verdict v = decide(PowerVector::parse(alpha), PowerVector::parse(beta), g.budget);
    emit(g, v, out, verdict_text(v));
    return exit_code_for(v.outcome);
}

int cmd_decide_ratio(const GlobalOpts& g, const std::string& alpha, const std::string& beta,
                     std::ostream& out, std::ostream& err) {
    RatioVector a = RatioVector::parse(alpha), b = RatioVector::parse(beta);
    if (a.sum_at_least_one())
        err << "warning: alpha ratios sum to >= 1 (not realizable on the line)\n";
    if (b.sum_at_least_one())
        err << "warning: beta ratios sum to >= 1 (not realizable on the line)\n";
    Verdict v = decide_ratio(a, b);
    emit(g, v, out, verdict_text(v));
    return exit_code_for(v.outcome);
}

int cmd_dim(const GlobalOpts& g, const std::string& vec, std::ostream& out) {
    PowerVector v = PowerVector::parse(vec);
    DimensionInfo info = dimension(v, tol_or_default(g));
    json j = {{"vector", v.exponents},
              {"char_poly", to_string(info.char_poly)},
              {"interval",
               {fraction_string(info.root_interval.lo), fraction_string(info.root_interval.hi)}},
              {"approx", decimal_string(info.approx, 15)},
              {"tol", fraction_string(tol_or_default(g))}};
    std::ostringstream os;
    os << "vector: " << v.str() << "\n"
       << "char_poly: " << to_string(info.char_poly) << "\n"
       << "interval: [" << fraction_string(info.root_interval.lo) << ", "
       << fraction_string(info.root_interval.hi) << "]\n"
       << "approx: " << decimal_string(info.approx, 15) << "\n";
    emit(g, j, out, os.str());
    return 0;
}

int cmd_poly_tri(const GlobalOpts& g, long long a, long long b, int eps, int delta,
                 std::ostream& out) {
    TrinomialReport rep = trinomial_analyze(a, b, eps, delta);
    json j = rep;
    emit(g, j, out, j.dump(2) + "\n");
    return 0;
}

int cmd_poly_quad(const GlobalOpts& g, long long a, long long b, long long c, int e1, int e2,
                  int e3, std::ostream& out) {
    QuadReport rep = quadrinomial_decompose(a, b, c, e1, e2, e3);
    json j = rep;
    if (e1 == 1 && e2 == 1 && e3 == -1) j["criterion"] = quadrinomial_irreducible(a, b, c);
    j["unit_roots"] = unit_root_candidates(a, b, c, e1, e2, e3);
    emit(g, j, out, j.dump(2) + "\n");
    return 0;
}

int cmd_refine(const GlobalOpts& g, const std::string& alpha, const std::string& beta,
               std::ostream& out) {
    ExpMultiset a = ExpMultiset::parse(alpha), b = ExpMultiset::parse(beta);
    auto r = common_refinement(a, b, g.budget);
    if (!r) {
        emit(g, json{{"found", false}}, out, "no common refinement within budget\n");
        return kExitUnknown;
    }
    json j = {{"found", true},
              {"refinement", r->refinement.entries},
              {"left", r->left},
              {"right", r->right}};
    std::ostringstream os;
    os << "refinement: {" << r->refinement.str() << "}\n";
    auto words_line = [&os](const char* side, const WeightedPartition& p) {
        os << side << " words:";
        for (const Word& w : p.words) os << " " << w.str();
        os << "\n";
    };
    words_line("left", r->left);
    words_line("right", r->right);
    emit(g, j, out, os.str());
    return 0;
}

int cmd_chain(const GlobalOpts& g, const std::string& alpha, const std::string& beta,
              std::ostream& out) {
    ExpMultiset a = ExpMultiset::parse(alpha), b = ExpMultiset::parse(beta);
    auto chain = equivalence_chain(a, b, g.budget);
    if (!chain) {
        emit(g, json{{"found", false}}, out, "no chain within budget\n");
        return kExitUnknown;
    }
    json j = *chain;
    j["found"] = true;
    std::ostringstream os;
    os << "chain:";
    for (std::size_t i = 0; i < chain->vectors.size(); ++i)
        os << (i ? " ~ " : " ") << "{" << chain->vectors[i].str() << "}";
    os << "\n";
    emit(g, j, out, os.str());
    return 0;
}

int cmd_partition(const GlobalOpts& g, int m, const std::string& targets, std::ostream& out) {
    Partition p = partition_for_homogeneous(m, ExpMultiset::parse(targets));
    json words = json::array();
    for (const Word& w : p.words) words.push_back(w.str());
    json j = {{"base_size", p.base_size}, {"words", words}};
    std::ostringstream os;
    os << "words:";
    for (const Word& w : p.words) os << " " << w.str();
    os << "\n";
    emit(g, j, out, os.str());
    return 0;
}

int cmd_rank(const GlobalOpts& g, const std::string& ratios, std::ostream& out,
             std::ostream& err) {
    RatioVector v = RatioVector::parse(ratios);
    if (v.sum_at_least_one())
        err << "warning: ratios sum to >= 1 (not realizable on the line)\n";
    int r = rank(v);
    json rs = json::array();
    for (const Rat& x : v.ratios) rs.push_back(fraction_string(x));
    emit(g, json{{"ratios", rs}, {"rank", r}}, out, "rank: " + std::to_string(r) + "\n");
    return 0;
}

int cmd_verify_cert(const std::string& path, std::ostream& out, std::ostream& err) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            err << "error: cannot open '" << path << "'\n";
            return kExitParse;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& ex) {
        err << "error: malformed JSON: " << ex.what() << "\n";
        return kExitParse;
    }
    try {
        // accept a bare chain, a certificate object, or a full verdict
        const json* node = &j;
        if (j.contains("certificate") && j["certificate"].is_object())
            node = &j["certificate"];
        if (node->contains("type") && (*node)["type"] == "theorem") {
            out << "theorem certificate (no structural content to verify)\n";
            return kExitEquivalent;
        }
        CertificateChain chain = chain_from_json(*node);
        bool ok = verify_chain(chain);
        if (ok && j.contains("inputs") && j["inputs"].contains("alpha") &&
            j["inputs"]["alpha"].is_array()) {
            std::vector<long long> a = j["inputs"]["alpha"].get<std::vector<long long>>();
            std::vector<long long> b = j["inputs"]["beta"].get<std::vector<long long>>();
            ok = verify_certificate(chain, ExpMultiset(std::move(a)), ExpMultiset(std::move(b)));
        }
        out << (ok ? "certificate verified\n" : "certificate INVALID\n");
        return ok ? kExitEquivalent : kExitNotEquivalent;
    } catch (const ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitParse;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact decision engine for Lipschitz equivalence of dust-like Cantor sets"};
    app.name("lipeq");

    GlobalOpts g;
    g.budget = budget_from_env();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--tol", g.tol, "root isolation tolerance, exact rational like 1/1000000000");
    app.add_option("--max-weight", g.budget.max_weight, "largest exponent allowed in any cut");
    app.add_option("--max-size", g.budget.max_size, "largest multiset size allowed in any cut");
    app.add_option("--max-chain", g.budget.max_chain, "maximum intermediate vectors in a chain");
    app.require_subcommand(1);

    std::string alpha, beta, vec, targets, path;
    long long a = 0, b = 0, c = 0;
    int eps = 1, delta = -1, e1 = 1, e2 = 1, e3 = -1, m = 2;

    auto* sc_decide = app.add_subcommand("decide", "decide equivalence of two power vectors");
    sc_decide->add_option("--alpha", alpha, "first vector, e.g. 8,7,1")->required();
    sc_decide->add_option("--beta", beta, "second vector, e.g. 3,2")->required();

    auto* sc_ratio = app.add_subcommand("decide-ratio", "decide equivalence of rational vectors");
    sc_ratio->add_option("--alpha", alpha, "first vector, e.g. 1/2,1/3")->required();
    sc_ratio->add_option("--beta", beta, "second vector")->required();

    auto* sc_dim = app.add_subcommand("dim", "isolate the dimension root of a power vector");
    sc_dim->add_option("vector", vec, "power vector, e.g. 2,1")->required();

    auto* sc_tri = app.add_subcommand("poly-tri", "analyze the trinomial x^a + eps*x^b + delta");
    sc_tri->add_option("a", a)->required();
    sc_tri->add_option("b", b)->required();
    sc_tri->add_option("--eps", eps)->check(CLI::IsMember({-1, 1}));
    sc_tri->add_option("--delta", delta)->check(CLI::IsMember({-1, 1}));

    auto* sc_quad =
        app.add_subcommand("poly-quad", "decompose the quadrinomial x^a+e1*x^b+e2*x^c+e3");
    sc_quad->add_option("a", a)->required();
    sc_quad->add_option("b", b)->required();
    sc_quad->add_option("c", c)->required();
    sc_quad->add_option("--e1", e1)->check(CLI::IsMember({-1, 1}));
    sc_quad->add_option("--e2", e2)->check(CLI::IsMember({-1, 1}));
    sc_quad->add_option("--e3", e3)->check(CLI::IsMember({-1, 1}));

    auto* sc_refine = app.add_subcommand("refine", "search a common refinement of two multisets");
    sc_refine->add_option("--alpha", alpha)->required();
    sc_refine->add_option("--beta", beta)->required();

    auto* sc_chain = app.add_subcommand("chain", "search an equivalence chain");
    sc_chain->add_option("--alpha", alpha)->required();
    sc_chain->add_option("--beta", beta)->required();

    auto* sc_part = app.add_subcommand("partition", "prefix-free complete words, given lengths");
    sc_part->add_option("m", m, "alphabet size")->required();
    sc_part->add_option("targets", targets, "length multiset, e.g. 1,2,2")->required();

    auto* sc_rank = app.add_subcommand("rank", "rank of the group generated by rational ratios");
    sc_rank->add_option("ratios", vec, "e.g. 1/2,1/3")->required();

    auto* sc_verify = app.add_subcommand("verify-cert", "re-verify a certificate file");
    sc_verify->add_option("path", path, "certificate JSON path, or - for stdin")->required();

    // global flags may follow the subcommand
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("lipeq");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (sc_decide->parsed()) return cmd_decide(g, alpha, beta, out);
        if (sc_ratio->parsed()) return cmd_decide_ratio(g, alpha, beta, out, err);
        if (sc_dim->parsed()) return cmd_dim(g, vec, out);
        if (sc_tri->parsed()) return cmd_poly_tri(g, a, b, eps, delta, out);
        if (sc_quad->parsed()) return cmd_poly_quad(g, a, b, c, e1, e2, e3, out);
        if (sc_refine->parsed()) return cmd_refine(g, alpha, beta, out);
        if (sc_chain->parsed()) return cmd_chain(g, alpha, beta, out);
        if (sc_part->parsed()) return cmd_partition(g, m, targets, out);
        if (sc_rank->parsed()) return cmd_rank(g, vec, out, err);
        if (sc_verify->parsed()) return cmd_verify_cert(path, out, err);
    } catch (const ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitParse;
    } catch (const CertificateError& ex) {
        err << "internal error: " << ex.what() << "\n";
        return kExitInternal;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitParse;
    }
    err << "no subcommand\n";
    return kExitUsage;
}

}  // namespace lipeq::cli
