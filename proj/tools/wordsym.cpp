// wordsym — generate prefixes of infinite words and analyze their factor,
// palindromic and symmetry-graph structure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordsym/errors.hpp"
#include "wordsym/factor_index.hpp"
#include "wordsym/generators.hpp"
#include "wordsym/palindromics.hpp"
#include "wordsym/repetitions.hpp"
#include "wordsym/symmetry.hpp"
#include "wordsym/symmetry_graph.hpp"
#include "wordsym/version.hpp"
#include "wordsym/word.hpp"

using json = nlohmann::ordered_json;
using namespace wordsym;

namespace {

constexpr int kExitVerdictFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitStabilization = 3;
constexpr int kExitHypothesis = 4;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InvalidInput("cannot open output file: " + out_path);
    out << text;
}

json trust_json(const TrustRange& t) {
    return json{{"trusted_n", t.trusted_n},
                {"certificate", TrustRange::certificate_name(t.certificate)},
                {"prefix_length", t.prefix_length}};
}

struct CommandContext {
    std::string out_path;
    std::string format = "csv";
};

int run_generate(const std::string& spec_text, std::size_t length,
                 const std::string& out_path) {
    WordSpec spec = WordSpec::parse(spec_text);
    Word w = spec.prefix(length);
    emit(format_word(w, spec.alphabet_size()) + "\n", out_path);
    return 0;
}

int run_complexity(const std::string& spec_text, int n_max,
                   const CommandContext& ctx) {
    WordSpec spec = WordSpec::parse(spec_text);
    try {
        FactorIndex idx = stabilize(spec, n_max + 2);
        std::ostringstream out;
        if (ctx.format == "csv") {
            out << "n,c,delta_c,delta2_c\n";
            for (int n = 0; n <= n_max; ++n)
                out << n << "," << idx.complexity(n) << "," << delta_c(idx, n)
                    << "," << delta2_c(idx, n) << "\n";
        } else {
            json rows = json::array();
            for (int n = 0; n <= n_max; ++n)
                rows.push_back({{"n", n},
                                {"c", idx.complexity(n)},
                                {"delta_c", delta_c(idx, n)},
                                {"delta2_c", delta2_c(idx, n)}});
            json envelope{{"command", "complexity"},
                          {"word", spec.text()},
                          {"trust", trust_json(idx.trust())},
                          {"rows", rows},
                          {"version", kVersion}};
            out << envelope.dump(2) << "\n";
        }
        emit(out.str(), ctx.out_path);
        return 0;
    } catch (const StabilizationFailure& e) {
        // Partial rows, flagged as untrusted.
        std::ostringstream out;
        out << "n,c,delta_c,delta2_c\n";
        const auto& partial = e.partial_complexity();
        for (std::size_t n = 0; n < partial.size(); ++n)
            out << n << "," << partial[n] << ",untrusted,untrusted\n";
        emit(out.str(), ctx.out_path);
        std::cerr << "error: " << e.what() << "\n";
        return kExitStabilization;
    }
}

const char* verdict_name(RichnessVerdict v) {
    switch (v) {
        case RichnessVerdict::rich_so_far: return "G-rich-so-far";
        case RichnessVerdict::almost_rich_so_far: return "almost-G-rich-so-far";
        case RichnessVerdict::not_rich: return "not-G-rich";
    }
    return "?";
}

int run_richness(const std::string& spec_text, const std::string& group_text,
                 int n_max, const CommandContext& ctx) {
    WordSpec spec = WordSpec::parse(spec_text);
    SymmetryGroup g = parse_group(group_text, spec.alphabet_size());
    RichnessReport report = g_richness_report(spec, g, n_max);

    std::vector<std::string> theta_names;
    for (int t : report.theta_indices)
        theta_names.push_back(format_symmetry(g.elements()[t]));

    std::ostringstream out;
    if (ctx.format == "csv") {
        out << "n,delta_c";
        for (const std::string& name : theta_names) out << ",p[" << name << "]";
        out << ",r,equality,loops_ok,tree_ok,pass\n";
        for (const RichnessRow& row : report.rows) {
            out << row.n << "," << row.delta_c;
            for (long long p : row.p_theta) out << "," << p;
            out << "," << row.r << "," << (row.equality ? "true" : "false") << ",";
            if (row.loops_ok) out << (*row.loops_ok ? "true" : "false");
            out << ",";
            if (row.tree_ok) out << (*row.tree_ok ? "true" : "false");
            out << "," << (row.pass ? "true" : "false") << "\n";
        }
    } else {
        json rows = json::array();
        for (const RichnessRow& row : report.rows) {
            json r{{"n", row.n}, {"delta_c", row.delta_c}};
            for (std::size_t i = 0; i < theta_names.size(); ++i)
                r["p[" + theta_names[i] + "]"] = row.p_theta[i];
            r["r"] = row.r;
            r["equality"] = row.equality;
            if (row.loops_ok) r["loops_ok"] = *row.loops_ok;
            if (row.tree_ok) r["tree_ok"] = *row.tree_ok;
            r["pass"] = row.pass;
            rows.push_back(std::move(r));
        }
        json envelope{{"command", "richness"},
                      {"word", spec.text()},
                      {"group", group_text},
                      {"group_size", report.group.size()},
                      {"trust", trust_json(report.trust)},
                      {"threshold", report.n_used},
                      {"rows", rows},
                      {"verdict", verdict_name(report.verdict)},
                      {"version", kVersion}};
        if (report.n0) envelope["n0"] = *report.n0;
        out << envelope.dump(2) << "\n";
    }
    emit(out.str(), ctx.out_path);
    std::cerr << "verdict: " << verdict_name(report.verdict) << " (#G = "
              << report.group.size() << ", threshold n >= " << report.n_used
              << ")\n";
    return report.verdict == RichnessVerdict::rich_so_far ? 0 : kExitVerdictFail;
}

int run_graph(const std::string& spec_text, const std::string& group_text, int n,
              const std::string& dot_path, const std::string& out_path) {
    WordSpec spec = WordSpec::parse(spec_text);
    SymmetryGroup g = parse_group(group_text, spec.alphabet_size());
    FactorIndex idx = stabilize(spec, n + 1);
    SymmetryGraph graph = build_gamma(idx, g, n);

    std::size_t loops = 0;
    for (const auto& cls : graph.classes)
        if (cls.loop) ++loops;

    std::string dot = export_dot(graph, g);
    std::ostringstream counts;
    counts << "vertices: " << graph.vertices.size() << "\n"
           << "edge-classes: " << graph.classes.size() << " (loops: " << loops
           << ")\n";

    if (!dot_path.empty()) {
        emit(dot, dot_path);
        emit(counts.str(), out_path);
    } else {
        emit(dot + counts.str(), out_path);
    }
    return 0;
}

int run_overlaps(const std::string& spec_text, std::size_t length,
                 std::size_t max_report, const std::string& out_path) {
    WordSpec spec = WordSpec::parse(spec_text);
    Word prefix = spec.prefix(length);
    auto witnesses = find_overlaps(prefix, max_report);
    std::ostringstream out;
    out << witnesses.size() << " overlaps\n";
    for (const auto& w : witnesses)
        out << "position=" << w.position << " w="
            << format_word(w.w, spec.alphabet_size()) << " w'="
            << format_word(w.w_prime, spec.alphabet_size()) << " factor="
            << format_word(w.factor, spec.alphabet_size()) << "\n";
    emit(out.str(), out_path);
    return 0;
}

int run_search(int alphabet, const std::string& theta_text, std::uint64_t budget,
               const std::string& checkpoint_path, bool resume,
               const std::string& out_path) {
    Symmetry theta = theta_text.empty() ? reversal(alphabet)
                                        : parse_symmetry(theta_text, alphabet);
    SearchCheckpoint next;
    SearchResult result;
    if (resume) {
        if (checkpoint_path.empty())
            throw InvalidInput("--resume requires --checkpoint FILE");
        std::ifstream in(checkpoint_path);
        if (!in) throw InvalidInput("cannot open checkpoint: " + checkpoint_path);
        SearchCheckpoint cp = SearchCheckpoint::load(in);
        result = resume_search(cp, budget, &next);
    } else {
        result = search_squarefree_rich(alphabet, theta, budget, &next);
    }
    if (!checkpoint_path.empty() && !result.exhausted) {
        std::ofstream out(checkpoint_path);
        if (!out) throw InvalidInput("cannot write checkpoint: " + checkpoint_path);
        next.save(out);
    }

    std::ostringstream out;
    out << "r=" << result.max_length << "\n";
    for (const Word& w : result.witnesses)
        out << "witness " << format_word(w, alphabet) << "\n";
    out << "nodes=" << result.nodes_explored
        << " exhausted=" << (result.exhausted ? "true" : "false") << "\n";
    emit(out.str(), out_path);
    return result.exhausted ? 0 : kExitVerdictFail;
}

const char* defect_verdict_name(DefectVerdict v) {
    switch (v) {
        case DefectVerdict::zero: return "zero";
        case DefectVerdict::finite_so_far: return "finite-so-far";
        case DefectVerdict::growing: return "growing";
    }
    return "?";
}

int run_defect(const std::string& spec_text, const std::string& theta_text,
               std::size_t max_prefix, const std::string& out_path) {
    WordSpec spec = WordSpec::parse(spec_text);
    Symmetry theta = theta_text.empty()
                         ? reversal(spec.alphabet_size())
                         : parse_symmetry(theta_text, spec.alphabet_size());
    DefectCurve curve = word_defect(spec, theta, max_prefix);
    std::ostringstream out;
    out << "prefix_length=" << curve.prefix_length << "\n";
    for (const auto& [len, d] : curve.samples)
        out << "defect[" << len << "]=" << d << "\n";
    out << "final_defect=" << curve.final_defect << "\n";
    out << "verdict=" << defect_verdict_name(curve.verdict) << "\n";
    emit(out.str(), out_path);
    return curve.verdict == DefectVerdict::zero ? 0 : kExitVerdictFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "wordsym — factor complexity, Θ-palindromic richness and symmetry "
        "graphs of infinite words"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.footer(
        "Word specs: tm | fib | example62 | tbm:b,m | champernowne |\n"
        "            periodic:<word> | literal:<word> | fixpoint:<file>:<seed>\n"
        "Symmetries: R (reversal) | a:0>1,1>0 (antimorphism) | m:0>1,1>0\n"
        "            (morphism); unlisted letters map to themselves.\n"
        "Groups:     semicolon-separated symmetries; the generated closure is\n"
        "            used and #G is reported.\n"
        "CSV columns (v1): complexity: n,c,delta_c,delta2_c\n"
        "                  richness:   n,delta_c,p[<theta>]...,r,equality,\n"
        "                              loops_ok,tree_ok,pass\n"
        "JSON (--format json) carries the same rows keyed by column name in\n"
        "an envelope {command, word, [group, group_size, threshold], trust,\n"
        "rows, [verdict], version}.\n"
        "Checkpoint files (search): 'wordsym-search-checkpoint v1' header,\n"
        "then 'alphabet/theta/best/nodes' lines, witness lines 'w <word>' and\n"
        "frontier lines 'f <word>'; pass --resume with --checkpoint to finish\n"
        "an interrupted run.\n"
        "Exit codes: 0 ok/verdict holds, 1 verdict fails, 2 bad input,\n"
        "            3 stabilization failure, 4 hypothesis violation.\n"
        "Environment: WORDSYM_MAX_PREFIX caps the stabilization prefix.");

    std::string spec_text, group_text, theta_text, out_path, dot_path,
        checkpoint_path, format = "csv";
    std::size_t length = 0, max_prefix = 100000, max_report = 20;
    std::uint64_t budget = 20'000'000;
    int n_max = 16, n = 2, alphabet = 2;
    bool resume = false;

    CLI::App* c_generate = app.add_subcommand("generate", "Write a prefix of a word");
    c_generate->add_option("spec", spec_text, "word spec")->required();
    c_generate->add_option("--length", length, "prefix length")->required();
    c_generate->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* c_complexity =
        app.add_subcommand("complexity", "Factor complexity table");
    c_complexity->add_option("spec", spec_text)->required();
    c_complexity->add_option("--n-max", n_max, "largest factor length")->required();
    c_complexity->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    c_complexity->add_option("--out", out_path);

    CLI::App* c_richness =
        app.add_subcommand("richness", "G-richness report (equality + graph tests)");
    c_richness->add_option("spec", spec_text)->required();
    c_richness->add_option("--group", group_text, "group generators")->required();
    c_richness->add_option("--n-max", n_max)->required();
    c_richness->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    c_richness->add_option("--out", out_path);

    CLI::App* c_graph = app.add_subcommand("graph", "Symmetry graph Γ_n as DOT");
    c_graph->add_option("spec", spec_text)->required();
    c_graph->add_option("--group", group_text)->required();
    c_graph->add_option("-n", n, "factor length")->required();
    c_graph->add_option("--dot", dot_path, "DOT output file");
    c_graph->add_option("--out", out_path);

    CLI::App* c_overlaps =
        app.add_subcommand("overlaps", "Overlapping factors (exponent > 2)");
    c_overlaps->add_option("spec", spec_text)->required();
    c_overlaps->add_option("--length", length)->required();
    c_overlaps->add_option("--max-report", max_report);
    c_overlaps->add_option("--out", out_path);

    CLI::App* c_search = app.add_subcommand(
        "search", "Longest square-free Θ-rich words using the whole alphabet");
    c_search->add_option("--alphabet", alphabet)->required();
    c_search->add_option("--theta", theta_text, "default: R");
    c_search->add_option("--budget", budget, "node budget");
    c_search->add_option("--checkpoint", checkpoint_path, "checkpoint file");
    c_search->add_flag("--resume", resume, "resume from the checkpoint");
    c_search->add_option("--out", out_path);

    CLI::App* c_defect = app.add_subcommand("defect", "Θ-defect along prefixes");
    c_defect->add_option("spec", spec_text)->required();
    c_defect->add_option("--theta", theta_text, "default: R");
    c_defect->add_option("--max-prefix", max_prefix);
    c_defect->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    auto started = std::chrono::steady_clock::now();
    int code = 0;
    try {
        CommandContext ctx{out_path, format};
        if (c_generate->parsed())
            code = run_generate(spec_text, length, out_path);
        else if (c_complexity->parsed())
            code = run_complexity(spec_text, n_max, ctx);
        else if (c_richness->parsed())
            code = run_richness(spec_text, group_text, n_max, ctx);
        else if (c_graph->parsed())
            code = run_graph(spec_text, group_text, n, dot_path, out_path);
        else if (c_overlaps->parsed())
            code = run_overlaps(spec_text, length, max_report, out_path);
        else if (c_search->parsed())
            code = run_search(alphabet, theta_text, budget, checkpoint_path,
                              resume, out_path);
        else if (c_defect->parsed())
            code = run_defect(spec_text, theta_text, max_prefix, out_path);
    } catch (const HypothesisViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (!e.symmetry().empty())
            std::cerr << "  symmetry: " << e.symmetry() << "\n";
        if (!e.factor().empty()) std::cerr << "  factor: " << e.factor() << "\n";
        return kExitHypothesis;
    } catch (const StabilizationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStabilization;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "wall-clock: " << elapsed.count() << " ms\n";
    return code;
}
