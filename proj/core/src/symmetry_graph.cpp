#include "wordsym/symmetry_graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "wordsym/errors.hpp"
#include "wordsym/palindromics.hpp"

namespace wordsym {

namespace {

void require_closure(const FactorIndex& idx, const SymmetryGroup& g, int up_to) {
    for (const Symmetry& s : g.elements()) {
        for (int n = 1; n <= up_to; ++n) {
            if (is_closed_under(idx, s, n)) continue;
            // Name an offending factor for the error message.
            for (const auto& [factor, data] : idx.factors_of_length(n)) {
                if (!idx.contains(s(factor)))
                    throw HypothesisViolation(
                        "language not closed under " + format_symmetry(s) +
                            ": image of " + format_word(factor, idx.alphabet_size()) +
                            " is missing",
                        format_symmetry(s), format_word(factor, idx.alphabet_size()));
            }
        }
    }
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SymmetryGraph build_gamma(const FactorIndex& idx, const SymmetryGroup& g, int n) {
    idx.require_trusted(n + 1, "build_gamma");
    require_closure(idx, g, std::min(idx.trust().trusted_n, n + 1));

    SymmetryGraph graph;
    graph.n = n;

    // Vertices: orbits of LS-or-RS factors of length n.
    SpecialFactors special = special_factors(idx, n);
    std::set<Word> specials(special.left.begin(), special.left.end());
    specials.insert(special.right.begin(), special.right.end());

    std::map<Word, int> vertex_of;  // canonical representative -> vertex id
    for (const Word& w : specials) {
        Word canon = orbit_canonical(w, g);
        if (vertex_of.count(canon)) continue;
        vertex_of.emplace(canon, 0);
    }
    for (auto& [canon, id] : vertex_of) {
        id = static_cast<int>(graph.vertices.size());
        std::vector<Word> members = orbit(canon, g);
        // Orbit members that are not factors cannot appear (closure), but the
        // orbit of a special factor may mix LS and RS members; keep them all.
        graph.vertices.push_back({canon, std::move(members)});
    }
    auto vertex_id = [&](const Word& w) {
        return vertex_of.at(orbit_canonical(w, g));
    };

    if (specials.empty()) return graph;

    // Directed edges: walk right extensions from each special factor through
    // non-special windows until the next special window.
    const long long window_count = idx.complexity(n);
    std::set<Word> labels;
    for (const Word& w : specials) {
        for (Letter a : idx.right_extensions(w)) {
            Word e = w;
            e.push_back(static_cast<char>(a));
            long long steps = 0;
            while (true) {
                std::string_view window(e.data() + e.size() - n, n);
                if (n == 0 || idx.is_special(window)) break;
                std::vector<Letter> ext = idx.right_extensions(Word(window));
                if (ext.empty())
                    throw TrustExhausted(
                        "build_gamma: walk ran out of certified right "
                        "extensions; stabilize over a longer prefix");
                e.push_back(static_cast<char>(ext.front()));
                if (++steps > window_count + 1)
                    throw TrustExhausted(
                        "build_gamma: walk did not reach a special factor "
                        "within the trusted window span");
            }
            labels.insert(std::move(e));
        }
    }

    for (const Word& e : labels) {
        int from = vertex_id(e.substr(0, n));
        int to = vertex_id(e.substr(e.size() - n));
        graph.directed.push_back({e, from, to});
    }

    // Undirected quotient: group directed edges by the orbit of their label.
    std::map<Word, SymmetryGraph::EdgeClass> classes;
    for (const auto& edge : graph.directed) {
        Word canon = orbit_canonical(edge.label, g);
        auto it = classes.find(canon);
        if (it == classes.end()) {
            SymmetryGraph::EdgeClass cls;
            cls.canonical = canon;
            cls.u = std::min(edge.from, edge.to);
            cls.v = std::max(edge.from, edge.to);
            cls.loop = edge.from == edge.to;
            classes.emplace(canon, std::move(cls));
        }
        classes[canon].members.push_back(edge.label);
    }
    for (auto& [canon, cls] : classes) {
        std::sort(cls.members.begin(), cls.members.end());
        graph.classes.push_back(std::move(cls));
    }
    return graph;
}

GRichnessFlags check_grichness_at(const SymmetryGraph& graph,
                                  const SymmetryGroup& g) {
    GRichnessFlags flags{true, true};

    // Loops: some member of the class must be fixed by an antimorphism of G.
    for (const auto& cls : graph.classes) {
        if (!cls.loop) continue;
        bool ok = false;
        for (const Word& e : cls.members) {
            for (const Symmetry& s : g.elements()) {
                if (s.is_antimorphism() && s(e) == e) {
                    ok = true;
                    break;
                }
            }
            if (ok) break;
        }
        if (!ok) flags.loops_ok = false;
    }

    // Tree after removing loops: connected and acyclic on edge classes;
    // the empty graph counts as a tree.
    int non_loop = 0;
    DisjointSet dsu(static_cast<int>(graph.vertices.size()));
    for (const auto& cls : graph.classes) {
        if (cls.loop) continue;
        ++non_loop;
        dsu.unite(cls.u, cls.v);
    }
    if (!graph.vertices.empty()) {
        int components = 0;
        for (int v = 0; v < static_cast<int>(graph.vertices.size()); ++v)
            if (dsu.find(v) == v) ++components;
        flags.tree_ok = components == 1 &&
                        non_loop == static_cast<int>(graph.vertices.size()) - 1;
    }
    return flags;
}

GRichnessFlags check_grichness_at(const FactorIndex& idx, const SymmetryGroup& g,
                                  int n) {
    return check_grichness_at(build_gamma(idx, g, n), g);
}

NThresholds compute_N(const FactorIndex& idx, const SymmetryGroup& g) {
    NThresholds out;
    const int trusted = idx.trust().trusted_n;
    const int k = idx.alphabet_size();

    // Least n with all letters in every factor; monotone in n.
    for (int n = 1; n <= trusted; ++n) {
        bool all = true;
        for (const auto& [factor, data] : idx.factors_of_length(n)) {
            std::uint64_t mask = 0;
            for (unsigned char c : factor) mask |= std::uint64_t{1} << c;
            if (std::popcount(mask) < k) {
                all = false;
                break;
            }
        }
        if (all) {
            out.all_letters = n;
            break;
        }
    }

    // Two antimorphisms (or morphisms) agree on v iff their quotient, a
    // non-identity morphism of G, fixes v letterwise; that needs every letter
    // of v to be a fixed letter of the quotient.
    std::vector<std::uint64_t> fixed_masks;
    for (int i = 0; i < g.size(); ++i) {
        if (i == g.identity_index()) continue;
        const Symmetry& s = g.elements()[i];
        if (!s.is_morphism()) continue;
        std::uint64_t mask = 0;
        for (int a = 0; a < s.alphabet_size(); ++a)
            if (s.perm[a] == a) mask |= std::uint64_t{1} << a;
        fixed_masks.push_back(mask);
    }
    int weak = 1;
    bool weak_ok = true;
    if (!fixed_masks.empty()) {
        // Largest length with a factor written entirely in some fixed-letter
        // set; factors of such factors inherit the property, so it is
        // downward closed.
        int worst = 0;
        for (int n = trusted; n >= 1; --n) {
            bool bad = false;
            for (const auto& [factor, data] : idx.factors_of_length(n)) {
                std::uint64_t mask = 0;
                for (unsigned char c : factor) mask |= std::uint64_t{1} << c;
                for (std::uint64_t fixed : fixed_masks) {
                    if ((mask & ~fixed) == 0) {
                        bad = true;
                        break;
                    }
                }
                if (bad) break;
            }
            if (bad) {
                worst = n;
                break;
            }
        }
        if (worst == trusted)
            weak_ok = false;  // cannot certify within the trusted range
        else
            weak = worst + 1;
    }
    if (weak_ok) out.weak = weak;
    return out;
}

ThetaPairBound theta_pair_bound(const FactorIndex& idx, const Symmetry& theta1,
                                const Symmetry& theta2, int n) {
    if (theta1 == theta2)
        throw HypothesisViolation("theta_pair_bound: antimorphisms are not distinct");
    if (!is_involutive_antimorphism(theta1) || !is_involutive_antimorphism(theta2))
        throw HypothesisViolation(
            "theta_pair_bound: both symmetries must be involutive antimorphisms");
    if (compose(theta1, theta2) != compose(theta2, theta1))
        throw HypothesisViolation("theta_pair_bound: antimorphisms do not commute");
    idx.require_trusted(n + 1, "theta_pair_bound");
    for (const Symmetry* theta : {&theta1, &theta2}) {
        for (int m = n; m <= n + 1; ++m)
            if (!is_closed_under(idx, *theta, m))
                throw HypothesisViolation(
                    "theta_pair_bound: language not closed under " +
                        format_symmetry(*theta),
                    format_symmetry(*theta));
    }

    auto p12 = [&](int m) {
        if (m == 0) return 1LL;
        long long count = 0;
        for (const auto& [factor, data] : idx.factors_of_length(m))
            if (is_theta_palindrome(factor, theta1) &&
                is_theta_palindrome(factor, theta2))
                ++count;
        return count;
    };

    ThetaPairBound res{};
    res.lhs = delta_c(idx, n) + 4;
    res.rhs = pal_complexity(idx, theta1, n) + pal_complexity(idx, theta2, n) -
              p12(n) + pal_complexity(idx, theta1, n + 1) +
              pal_complexity(idx, theta2, n + 1) - p12(n + 1);
    res.holds = res.lhs >= res.rhs;
    return res;
}

RichnessReport g_richness_report(const WordSpec& spec, const SymmetryGroup& g,
                                 int n_max) {
    if (n_max < 1) throw InvalidInput("g_richness_report: n_max must be >= 1");
    if (!g.contains_antimorphism())
        throw HypothesisViolation(
            "g_richness_report: the group contains no antimorphism");

    RichnessReport report;
    report.group = g;
    report.theta_indices = g.involutive_antimorphisms();

    FactorIndex idx = stabilize(spec, n_max + 1);
    report.trust = idx.trust();
    require_closure(idx, g, idx.trust().trusted_n);
    report.thresholds = compute_N(idx, g);

    // The equality test is justified from the weak threshold on (it implies
    // the all-letters route); below it the graph itself is examined.
    int threshold = n_max + 1;
    if (report.thresholds.weak)
        threshold = *report.thresholds.weak;
    else if (report.thresholds.all_letters)
        threshold = *report.thresholds.all_letters;
    report.n_used = threshold;

    for (int n = 1; n <= n_max; ++n) {
        RichnessRow row;
        row.n = n;
        row.delta_c = delta_c(idx, n);
        row.r = 0;
        for (int t : report.theta_indices) {
            const Symmetry& theta = g.elements()[t];
            long long pn = pal_complexity(idx, theta, n);
            long long pn1 = pal_complexity(idx, theta, n + 1);
            row.p_theta.push_back(pn);
            row.r += pn + pn1;
        }
        row.equality = row.delta_c + g.size() == row.r;
        if (n < threshold) {
            GRichnessFlags flags = check_grichness_at(idx, g, n);
            row.loops_ok = flags.loops_ok;
            row.tree_ok = flags.tree_ok;
            row.pass = flags.loops_ok && flags.tree_ok;
        } else {
            row.pass = row.equality;
        }
        report.rows.push_back(std::move(row));
    }

    int last_fail = 0;
    for (const RichnessRow& row : report.rows)
        if (!row.pass) last_fail = row.n;
    if (last_fail == 0) {
        report.verdict = RichnessVerdict::rich_so_far;
    } else if (last_fail < n_max) {
        report.verdict = RichnessVerdict::almost_rich_so_far;
        report.n0 = last_fail + 1;
    } else {
        report.verdict = RichnessVerdict::not_rich;
    }
    return report;
}

std::string export_dot(const SymmetryGraph& graph, const SymmetryGroup& g) {
    std::ostringstream out;
    const int k = g.alphabet_size();
    out << "graph gamma_" << graph.n << " {\n";
    for (const auto& v : graph.vertices) {
        out << "  \"" << format_word(v.canonical, k) << "\" [label=\""
            << format_word(v.canonical, k) << " (x" << v.members.size() << ")\"];\n";
    }
    for (const auto& cls : graph.classes) {
        out << "  \"" << format_word(graph.vertices[cls.u].canonical, k)
            << "\" -- \"" << format_word(graph.vertices[cls.v].canonical, k)
            << "\" [label=\"" << format_word(cls.canonical, k) << " (x"
            << cls.members.size() << ")";
        if (cls.loop) {
            for (const Word& e : cls.members) {
                bool annotated = false;
                for (const Symmetry& s : g.elements()) {
                    if (s.is_antimorphism() && s(e) == e) {
                        out << ", " << format_symmetry(s) << "-palindrome "
                            << format_word(e, k);
                        annotated = true;
                        break;
                    }
                }
                if (annotated) break;
            }
        }
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace wordsym
