#include <doctest.h>

TEST_SUITE_BEGIN("symmetry_graph");

#include <set>

#include "wordsym/errors.hpp"
#include "wordsym/factor_index.hpp"
#include "wordsym/generators.hpp"
#include "wordsym/palindromics.hpp"
#include "wordsym/symmetry_graph.hpp"

using namespace wordsym;

namespace {

SymmetryGroup g4() { return parse_group("R;a:0>1,1>0", 2); }

SymmetryGroup example62_group() {
    return parse_group("a:0>1,1>0;a:2>3,3>2", 4);
}

std::set<Word> members(const std::vector<Word>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("Γ₂ of the Thue-Morse word: one vertex, two palindromic loops") {
    FactorIndex tm = stabilize(WordSpec::thue_morse(), 8);
    SymmetryGraph graph = build_gamma(tm, g4(), 2);

    REQUIRE(graph.vertices.size() == 1);
    CHECK(graph.vertices[0].canonical == word_from_digits("01"));
    CHECK(members(graph.vertices[0].members) ==
          std::set<Word>{word_from_digits("01"), word_from_digits("10")});

    REQUIRE(graph.classes.size() == 2);
    CHECK(graph.classes[0].canonical == word_from_digits("010"));
    CHECK(members(graph.classes[0].members) ==
          std::set<Word>{word_from_digits("010"), word_from_digits("101")});
    CHECK(graph.classes[0].loop);
    CHECK(graph.classes[1].canonical == word_from_digits("0110"));
    CHECK(members(graph.classes[1].members) ==
          std::set<Word>{word_from_digits("0110"), word_from_digits("1001")});
    CHECK(graph.classes[1].loop);

    CHECK(graph.directed.size() == 4);
}

TEST_CASE("Γ_n of a periodic word is empty") {
    FactorIndex per = stabilize(WordSpec::parse("periodic:01"), 8);
    SymmetryGraph graph = build_gamma(per, g4(), 2);
    CHECK(graph.vertices.empty());
    CHECK(graph.directed.empty());
    CHECK(graph.classes.empty());

    GRichnessFlags flags = check_grichness_at(per, g4(), 5);
    CHECK(flags.loops_ok);
    CHECK(flags.tree_ok);  // empty graph counts as a tree
}

TEST_CASE("Γ₁ of example62") {
    FactorIndex ex = stabilize(WordSpec::example62(), 8);
    SymmetryGroup g = example62_group();
    REQUIRE(g.size() == 4);

    SymmetryGraph graph = build_gamma(ex, g, 1);
    REQUIRE(graph.vertices.size() == 1);
    CHECK(members(graph.vertices[0].members) ==
          std::set<Word>{word_from_digits("0"), word_from_digits("1")});
    REQUIRE(graph.classes.size() == 2);
    for (const auto& cls : graph.classes) CHECK(cls.loop);

    GRichnessFlags flags = check_grichness_at(graph, g);
    CHECK(flags.loops_ok);
    CHECK(flags.tree_ok);
}

TEST_CASE("check_grichness_at on the Thue-Morse word") {
    FactorIndex tm = stabilize(WordSpec::thue_morse(), 14);
    for (int n = 0; n <= 12; ++n) {
        GRichnessFlags flags = check_grichness_at(tm, g4(), n);
        CAPTURE(n);
        CHECK(flags.loops_ok);
        CHECK(flags.tree_ok);
    }
}

TEST_CASE("edge labels are G-invariant and edge counts match Σ #Lext") {
    for (const char* text : {"tm", "example62", "tbm:2,4"}) {
        WordSpec spec = WordSpec::parse(text);
        SymmetryGroup g = text == std::string("example62")
                              ? example62_group()
                              : (spec.alphabet_size() == 2
                                     ? g4()
                                     : parse_group(
                                           "a:1>3,3>1;a:0>1,1>0,2>3,3>2", 4));
        FactorIndex idx = stabilize(spec, 10);
        CAPTURE(text);
        for (int n = 1; n <= 6; ++n) {
            SymmetryGraph graph = build_gamma(idx, g, n);
            std::set<Word> labels;
            for (const auto& e : graph.directed) labels.insert(e.label);
            for (const Word& e : labels)
                for (const Symmetry& s : g.elements())
                    CHECK(labels.count(s(e)) == 1);

            SpecialFactors sp = special_factors(idx, n);
            std::set<Word> specials(sp.left.begin(), sp.left.end());
            specials.insert(sp.right.begin(), sp.right.end());
            long long lext_sum = 0;
            for (const Word& w : specials)
                lext_sum += static_cast<long long>(idx.left_extensions(w).size());
            CHECK(static_cast<long long>(graph.directed.size()) == lext_sum);
        }
    }
}

TEST_CASE("edge labels have special ends and non-special interiors") {
    FactorIndex tm = stabilize(WordSpec::thue_morse(), 12);
    SymmetryGroup g = g4();
    NThresholds thresholds = compute_N(tm, g);
    REQUIRE(thresholds.all_letters.has_value());
    for (int n = 2; n <= 8; ++n) {
        SymmetryGraph graph = build_gamma(tm, g, n);
        for (const auto& e : graph.directed) {
            REQUIRE(e.label.size() >= static_cast<std::size_t>(n) + 1);
            CHECK(tm.is_special(std::string_view(e.label).substr(0, n)));
            CHECK(tm.is_special(
                std::string_view(e.label).substr(e.label.size() - n)));
            for (std::size_t i = 1; i + n < e.label.size(); ++i)
                CHECK_FALSE(tm.is_special(std::string_view(e.label).substr(i, n)));
        }
        // Once every factor carries all letters, vertex classes have k or 2k
        // members for #G = 2k.
        if (n >= *thresholds.all_letters) {
            for (const auto& v : graph.vertices) {
                bool sized = v.members.size() == 2 || v.members.size() == 4;
                CHECK(sized);
            }
        }
    }
}

TEST_CASE("compute_N") {
    FactorIndex tm = stabilize(WordSpec::thue_morse(), 10);
    NThresholds tn = compute_N(tm, g4());
    REQUIRE(tn.all_letters.has_value());
    CHECK(*tn.all_letters == 3);
    REQUIRE(tn.weak.has_value());
    CHECK(*tn.weak == 1);  // the exchange morphism moves every letter

    FactorIndex per = stabilize(WordSpec::parse("periodic:01"), 8);
    NThresholds pn = compute_N(per, g4());
    CHECK(*pn.all_letters == 2);

    // Champernowne factors of length <= 4 never contain all ten letters.
    FactorIndex ch = stabilize(WordSpec::champernowne(), 3);
    NThresholds cn = compute_N(ch, SymmetryGroup::generate({reversal(10)}));
    CHECK_FALSE(cn.all_letters.has_value());
    CHECK(cn.weak.has_value());  // vacuous: no distinct pairs to separate
}

TEST_CASE("theta_pair_bound") {
    FactorIndex tm = stabilize(WordSpec::thue_morse(), 8);
    Symmetry tr = reversal(2);
    Symmetry theta = parse_symmetry("a:0>1,1>0", 2);

    ThetaPairBound r3 = theta_pair_bound(tm, tr, theta, 3);
    CHECK(r3.lhs == 8);
    CHECK(r3.rhs == 8);
    CHECK(r3.holds);

    // tr∘theta moves both letters, so no word of length >= 1 is fixed by
    // both and the rhs reduces to the plain palindrome sums.
    for (int n = 1; n <= 6; ++n) {
        ThetaPairBound r = theta_pair_bound(tm, tr, theta, n);
        CHECK(r.rhs == pal_complexity(tm, tr, n) + pal_complexity(tm, tr, n + 1) +
                           pal_complexity(tm, theta, n) +
                           pal_complexity(tm, theta, n + 1));
    }

    FactorIndex per = stabilize(WordSpec::parse("periodic:01"), 8);
    for (int n = 1; n <= 6; ++n) {
        ThetaPairBound r = theta_pair_bound(per, tr, theta, n);
        CAPTURE(n);
        CHECK(r.lhs == r.rhs);
    }

    CHECK_THROWS_AS(theta_pair_bound(tm, tr, tr, 2), HypothesisViolation);

    // Non-commuting pair on three letters.
    FactorIndex per3 = stabilize(WordSpec::parse("periodic:0120210"), 6);
    Symmetry a = parse_symmetry("a:0>1,1>0", 3);
    Symmetry b = parse_symmetry("a:1>2,2>1", 3);
    CHECK_THROWS_AS(theta_pair_bound(per3, a, b, 2), HypothesisViolation);
}

TEST_CASE("theta-pair inequality holds for all suitable test words") {
    Symmetry tr = reversal(2);
    Symmetry theta = parse_symmetry("a:0>1,1>0", 2);
    for (const char* text : {"tm", "tbm:4,2", "periodic:01"}) {
        FactorIndex idx = stabilize(WordSpec::parse(text), 12);
        CAPTURE(text);
        for (int n = 1; n <= 10; ++n) CHECK(theta_pair_bound(idx, tr, theta, n).holds);
    }
}

TEST_CASE("g_richness_report: verdicts and rows") {
    RichnessReport tm = g_richness_report(WordSpec::thue_morse(), g4(), 16);
    CHECK(tm.verdict == RichnessVerdict::rich_so_far);
    CHECK(tm.rows.size() == 16);
    for (const RichnessRow& row : tm.rows) {
        CHECK(row.equality);
        CHECK(row.pass);
        CHECK(row.r == row.delta_c + 4);
    }

    RichnessReport ex =
        g_richness_report(WordSpec::example62(), example62_group(), 16);
    CHECK(ex.verdict == RichnessVerdict::rich_so_far);
    for (const RichnessRow& row : ex.rows) {
        CHECK(row.delta_c == 2);
        CHECK(row.r == 6);
    }

    // TM is not Tr-rich: T_Tr(4) = 2 and odd palindromes vanish.
    RichnessReport tr_only =
        g_richness_report(WordSpec::thue_morse(), parse_group("R", 2), 16);
    CHECK(tr_only.verdict == RichnessVerdict::not_rich);
    CHECK_FALSE(tr_only.rows[3].pass);  // n = 4

    // (01)^ω under the full four-element group.
    RichnessReport per = g_richness_report(WordSpec::parse("periodic:01"), g4(), 12);
    CHECK(per.verdict == RichnessVerdict::rich_so_far);

    CHECK_THROWS_AS(
        g_richness_report(WordSpec::parse("periodic:012"), parse_group("R", 3), 6),
        HypothesisViolation);
}

TEST_CASE("t_{2,4} is G-rich under its eight-element group") {
    SymmetryGroup g8 = parse_group(
        "a:1>3,3>1;a:0>1,1>0,2>3,3>2;a:0>2,2>0;a:0>3,3>0,1>2,2>1", 4);
    REQUIRE(g8.size() == 8);
    REQUIRE(g8.involutive_antimorphisms().size() == 4);
    RichnessReport report =
        g_richness_report(WordSpec::parse("tbm:2,4"), g8, 32);
    CHECK(report.verdict == RichnessVerdict::rich_so_far);
    for (const RichnessRow& row : report.rows)
        CHECK(row.r == row.delta_c + 8);
}

TEST_CASE("richness of more periodic words") {
    // (0110)^ω: C(2) = C(3) = 4, so ΔC(2) = 0 and the equality holds
    // everywhere.
    RichnessReport r0110 =
        g_richness_report(WordSpec::parse("periodic:0110"), g4(), 12);
    CHECK(r0110.verdict == RichnessVerdict::rich_so_far);

    // (012)^ω under the three involutive antimorphisms other than reversal;
    // the closure has six elements and the equality 0 + 6 = R(n) holds from
    // n = 1 on.
    SymmetryGroup g6 = parse_group("a:0>1,1>0;a:0>2,2>0;a:1>2,2>1", 3);
    CHECK(g6.size() == 6);
    CHECK(g6.involutive_antimorphisms().size() == 3);
    RichnessReport r012 =
        g_richness_report(WordSpec::parse("periodic:012"), g6, 12);
    CHECK(r012.verdict == RichnessVerdict::rich_so_far);
    for (const RichnessRow& row : r012.rows) {
        CHECK(row.delta_c == 0);
        CHECK(row.r == 6);
    }

    // (001001101011)^ω is closed under reversal with Tr-defect 1: the
    // equality fails at n = 3 only, which is the almost-rich pattern.
    RichnessReport almost = g_richness_report(
        WordSpec::parse("periodic:001001101011"), parse_group("R", 2), 16);
    CHECK(almost.verdict == RichnessVerdict::almost_rich_so_far);
    REQUIRE(almost.n0.has_value());
    CHECK(*almost.n0 == 4);
    CHECK_FALSE(almost.rows[2].pass);  // n = 3
    for (const RichnessRow& row : almost.rows)
        if (row.n != 3) CHECK(row.pass);

    DefectCurve curve = word_defect(WordSpec::parse("periodic:001001101011"),
                                    reversal(2), 1000);
    CHECK(curve.verdict == DefectVerdict::finite_so_far);
    CHECK(curve.final_defect == 1);
}

TEST_CASE("export_dot is deterministic and reflects the graph") {
    FactorIndex tm = stabilize(WordSpec::thue_morse(), 8);
    SymmetryGraph graph = build_gamma(tm, g4(), 2);
    std::string dot1 = export_dot(graph, g4());
    std::string dot2 = export_dot(build_gamma(tm, g4(), 2), g4());
    CHECK(dot1 == dot2);
    CHECK(dot1.find("\"01\"") != std::string::npos);
    CHECK(dot1.find("010") != std::string::npos);
    CHECK(dot1.find("0110") != std::string::npos);
    CHECK(dot1.find("R-palindrome") != std::string::npos);

    SymmetryGraph empty = build_gamma(stabilize(WordSpec::parse("periodic:01"), 6),
                                      g4(), 3);
    std::string dot_empty = export_dot(empty, g4());
    CHECK(dot_empty == "graph gamma_3 {\n}\n");
}

TEST_CASE("build_gamma enforces its hypotheses") {
    FactorIndex per012 = stabilize(WordSpec::parse("periodic:012"), 6);
    try {
        build_gamma(per012, SymmetryGroup::generate({reversal(3)}), 2);
        FAIL("expected a hypothesis violation");
    } catch (const HypothesisViolation& e) {
        // names the offending symmetry and factor
        CHECK(e.symmetry() == "R");
        CHECK_FALSE(e.factor().empty());
    }

    FactorIndex tm = stabilize(WordSpec::thue_morse(), 6);
    CHECK_THROWS_AS(build_gamma(tm, g4(), 6), UntrustedRange);
}

TEST_SUITE_END();
