#include <doctest.h>

TEST_SUITE_BEGIN("repetitions");

#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "wordsym/errors.hpp"
#include "wordsym/generators.hpp"
#include "wordsym/palindromics.hpp"
#include "wordsym/repetitions.hpp"

using namespace wordsym;

namespace {

std::set<Word> witness_factors(const std::vector<OverlapWitness>& v) {
    std::set<Word> out;
    for (const auto& w : v) out.insert(w.factor);
    return out;
}

Word random_word(std::mt19937& rng, int k, std::size_t len) {
    std::uniform_int_distribution<int> letter(0, k - 1);
    Word w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<char>(letter(rng)));
    return w;
}

}  // namespace

TEST_CASE("find_overlaps: spot checks") {
    auto triple = find_overlaps(word_from_digits("000"), 10);
    REQUIRE(triple.size() == 1);
    CHECK(triple[0].w == word_from_digits("0"));
    CHECK(triple[0].w_prime == word_from_digits("0"));
    CHECK(triple[0].factor == word_from_digits("000"));
    CHECK(triple[0].position == 0);

    CHECK(find_overlaps(WordSpec::thue_morse().prefix(10000), 100).empty());

    auto fib = find_overlaps(WordSpec::fibonacci().prefix(1000), 1000);
    CHECK_FALSE(fib.empty());
    bool has_witness = false;
    for (const auto& w : fib)
        if (w.factor == word_from_digits("0010010")) has_witness = true;
    CHECK(has_witness);
}

TEST_CASE("overlap witnesses validate against the prefix") {
    Word fib = WordSpec::fibonacci().prefix(2000);
    for (const auto& w : find_overlaps(fib, 200)) {
        CHECK(w.factor == w.w + w.w + w.w_prime);
        CHECK(w.w_prime.size() == 1);
        CHECK(w.w_prime[0] == w.w[0]);
        CHECK(fib.compare(w.position, w.factor.size(), w.factor) == 0);
    }
}

TEST_CASE("find_overlaps agrees with the naive oracle") {
    std::mt19937 rng(17);
    std::vector<Word> inputs = {
        WordSpec::thue_morse().prefix(1500), WordSpec::fibonacci().prefix(1500),
        WordSpec::parse("periodic:01").prefix(400),
        WordSpec::parse("periodic:010011").prefix(400), word_from_digits("000"),
        Word{},
    };
    for (int i = 0; i < 6; ++i) inputs.push_back(random_word(rng, 2, 300));
    for (int i = 0; i < 6; ++i) inputs.push_back(random_word(rng, 3, 300));

    for (const Word& input : inputs) {
        std::set<Word> expected = oracle::overlaps(input);
        CAPTURE(input.size());

        auto all = find_overlaps(input, expected.size() + 10);
        CHECK(witness_factors(all) == expected);
        // sorted by length then lexicographically
        for (std::size_t i = 1; i < all.size(); ++i) {
            bool ordered = all[i - 1].factor.size() < all[i].factor.size() ||
                           (all[i - 1].factor.size() == all[i].factor.size() &&
                            all[i - 1].factor < all[i].factor);
            CHECK(ordered);
        }

        // truncation keeps the smallest witnesses
        std::size_t cap = 3;
        auto few = find_overlaps(input, cap);
        CHECK(few.size() == std::min(cap, expected.size()));
        for (std::size_t i = 0; i < few.size(); ++i) CHECK(few[i].factor == all[i].factor);
    }
}

TEST_CASE("periodic words carry overlaps with |w| up to half the prefix") {
    const std::size_t len = 100;
    Word prefix = WordSpec::parse("periodic:01").prefix(len);
    auto all = find_overlaps(prefix, 1 << 20);
    REQUIRE(!all.empty());
    std::size_t longest_w = 0;
    for (const auto& w : all) longest_w = std::max(longest_w, w.w.size());
    CHECK(longest_w >= len / 2 - 2);
}

TEST_CASE("find_squares: spot checks and oracle agreement") {
    CHECK(find_squares(word_from_digits("0102010"), 10).empty());

    auto simple = find_squares(word_from_digits("0101"), 10);
    REQUIRE(simple.size() == 1);
    CHECK(simple[0].root == word_from_digits("01"));
    CHECK(simple[0].position == 0);

    auto tm = find_squares(WordSpec::thue_morse().prefix(4000), 100);
    bool has_zero_root = false;
    for (const auto& s : tm)
        if (s.root == word_from_digits("0")) has_zero_root = true;
    CHECK(has_zero_root);

    std::mt19937 rng(19);
    for (int iter = 0; iter < 8; ++iter) {
        Word input = random_word(rng, 2 + iter % 2, 250);
        auto expected = oracle::squares(input);
        auto got = find_squares(input, expected.size() + 5);
        REQUIRE(got.size() == expected.size());
        for (const auto& s : got) {
            auto it = expected.find(s.root);
            REQUIRE(it != expected.end());
            CHECK(it->second == s.position);
        }
    }
}

TEST_CASE("search_squarefree_rich: r(1..3) with exhaustive certainty") {
    Symmetry tr1 = reversal(1);
    SearchResult r1 = search_squarefree_rich(1, tr1, 1 << 20);
    CHECK(r1.exhausted);
    CHECK(r1.max_length == 1);
    CHECK(r1.witnesses == std::vector<Word>{word_from_digits("0")});

    SearchResult r2 = search_squarefree_rich(2, reversal(2), 1 << 20);
    CHECK(r2.exhausted);
    CHECK(r2.max_length == 3);
    CHECK(r2.witnesses == std::vector<Word>{word_from_digits("010")});

    SearchResult r3 = search_squarefree_rich(3, reversal(3), 1 << 20);
    CHECK(r3.exhausted);
    CHECK(r3.max_length == 7);
    CHECK(r3.witnesses == std::vector<Word>{word_from_digits("0102010"),
                                            word_from_digits("0121012")});
}

TEST_CASE("search agrees with exhaustive enumeration") {
    // Enumerate every word of length <= 8 over k letters; keep the
    // square-free Θ-rich ones using the whole alphabet.
    for (int k = 2; k <= 3; ++k) {
        Symmetry tr = reversal(k);
        long long best = 0;
        std::set<Word> maximal;
        std::vector<Word> queue{Word{}};
        while (!queue.empty()) {
            Word w = queue.back();
            queue.pop_back();
            if (!w.empty()) {
                if (oracle::has_square(w)) continue;
                if (oracle::defect(tr, w) != 0) continue;
                std::set<char> used(w.begin(), w.end());
                if (static_cast<int>(used.size()) == k) {
                    long long len = static_cast<long long>(w.size());
                    if (len > best) {
                        best = len;
                        maximal.clear();
                    }
                    if (len == best) {
                        // canonicalize by first occurrence of letters
                        Word canon = w;
                        std::vector<int> rename(k, -1);
                        int next = 0;
                        for (char& c : canon) {
                            if (rename[static_cast<unsigned char>(c)] < 0)
                                rename[static_cast<unsigned char>(c)] = next++;
                            c = static_cast<char>(rename[static_cast<unsigned char>(c)]);
                        }
                        maximal.insert(canon);
                    }
                }
            }
            if (w.size() < 8)
                for (int c = 0; c < k; ++c) queue.push_back(w + static_cast<char>(c));
        }
        SearchResult got = search_squarefree_rich(k, tr, 1 << 22);
        CAPTURE(k);
        CHECK(got.max_length == best);
        CHECK(std::set<Word>(got.witnesses.begin(), got.witnesses.end()) == maximal);
    }
}

TEST_CASE("search witnesses verify through independent oracles") {
    for (int k = 2; k <= 4; ++k) {
        SearchResult res = search_squarefree_rich(k, reversal(k), 1 << 22);
        REQUIRE(res.exhausted);
        for (const Word& w : res.witnesses) {
            CAPTURE(format_word(w, k));
            CHECK_FALSE(oracle::has_square(w));
            CHECK(oracle::defect(reversal(k), w) == 0);
            CHECK(find_squares(w, 10).empty());
            CHECK(defect(reversal(k), w) == 0);
            std::set<char> used(w.begin(), w.end());
            CHECK(static_cast<int>(used.size()) == k);
            // monotone pruning soundness: all prefixes stay valid
            for (std::size_t len = 0; len <= w.size(); ++len) {
                Word p = w.substr(0, len);
                CHECK_FALSE(oracle::has_square(p));
                CHECK(oracle::defect(reversal(k), p) == 0);
            }
        }
    }
}

TEST_CASE("search under a non-reversal antimorphism") {
    // No symmetry reduction applies; witnesses come out unreduced.
    Symmetry exchange = parse_symmetry("a:0>1,1>0", 2);
    SearchResult res = search_squarefree_rich(2, exchange, 1 << 20);
    CHECK(res.exhausted);

    // Independent enumeration of all binary words up to length 6.
    long long best = 0;
    std::set<Word> maximal;
    for (int len = 1; len <= 6; ++len) {
        for (int bits = 0; bits < (1 << len); ++bits) {
            Word w;
            for (int i = 0; i < len; ++i)
                w.push_back(static_cast<char>((bits >> i) & 1));
            if (oracle::has_square(w) || oracle::defect(exchange, w) != 0) continue;
            std::set<char> used(w.begin(), w.end());
            if (used.size() != 2) continue;
            if (len > best) {
                best = len;
                maximal.clear();
            }
            if (len == best) maximal.insert(w);
        }
    }
    CHECK(res.max_length == best);
    CHECK(std::set<Word>(res.witnesses.begin(), res.witnesses.end()) == maximal);
}

TEST_CASE("search budget exhaustion and checkpoint resume") {
    SearchCheckpoint cp;
    SearchResult partial = search_squarefree_rich(3, reversal(3), 5, &cp);
    CHECK_FALSE(partial.exhausted);
    CHECK_FALSE(cp.frontier.empty());

    // Resuming with a large budget must reach the same result as a direct
    // exhaustive run.
    SearchResult resumed = resume_search(cp, 1 << 22);
    SearchResult direct = search_squarefree_rich(3, reversal(3), 1 << 22);
    CHECK(resumed.exhausted);
    CHECK(resumed.max_length == direct.max_length);
    CHECK(resumed.witnesses == direct.witnesses);
}

TEST_CASE("checkpoint files round-trip") {
    SearchCheckpoint cp;
    search_squarefree_rich(3, reversal(3), 4, &cp);
    std::stringstream buf;
    cp.save(buf);
    SearchCheckpoint back = SearchCheckpoint::load(buf);
    CHECK(back.alphabet_size == cp.alphabet_size);
    CHECK(back.theta_text == cp.theta_text);
    CHECK(back.best_length == cp.best_length);
    CHECK(back.witnesses == cp.witnesses);
    CHECK(back.frontier == cp.frontier);
    CHECK(back.nodes_explored == cp.nodes_explored);

    std::stringstream bad("not a checkpoint\n");
    CHECK_THROWS_AS(SearchCheckpoint::load(bad), InvalidInput);
}

TEST_CASE("search rejects bad input") {
    CHECK_THROWS_AS(search_squarefree_rich(0, reversal(1), 10), InvalidInput);
    CHECK_THROWS_AS(search_squarefree_rich(2, identity_morphism(2), 10),
                    InvalidInput);
    CHECK_THROWS_AS(search_squarefree_rich(3, reversal(2), 10), InvalidInput);
}

TEST_SUITE_END();
