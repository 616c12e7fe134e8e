#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordsym/word.hpp"

namespace wordsym {

// Non-erasing letter-to-word substitution.
struct Substitution {
    std::vector<Word> images;  // images[a] = image of letter a

    int alphabet_size() const { return static_cast<int>(images.size()); }
    void validate() const;  // nonempty images, letters in range

    Word apply(const Word& w) const;
};

// Parses a line-based substitution file: "letter -> image" per line,
// '#' starts a comment. Letters 0..k-1 must each appear exactly once.
Substitution parse_substitution(std::string_view text);
Substitution load_substitution_file(const std::string& path);

// Prefix of the fixed point lim s^n(seed), materialized incrementally.
// Requires image(seed) to start with seed and have length >= 2.
Word fixed_point_prefix(const Substitution& s, Letter seed, std::size_t min_len);

// Letter at position n is the base-b digit sum of n reduced mod m.
Word tbm_prefix(int b, int m, std::size_t len);

// The m-letter substitution k -> k (k+1) ... (k+b-1) mod m whose fixed point
// from seed 0 is tbm_prefix(b, m, ·).
Substitution tbm_substitution(int b, int m);

// Decimal representations of 1, 2, 3, ... concatenated and truncated.
Word champernowne_prefix(std::size_t len);

Word periodic_prefix(const Word& period, std::size_t len);

struct DensityReport {
    std::size_t length = 0;
    std::vector<std::size_t> counts;            // per letter
    std::vector<double> frequency;              // counts / length
    std::vector<std::optional<double>> expected;  // per letter, where known
};

DensityReport letter_densities(const Word& w, int alphabet_size);

// Same, over a generated prefix; attaches the exact limit densities when the
// word has known ones.
DensityReport letter_densities(const class WordSpec& spec, std::size_t prefix_len);

// Description of an infinite word able to produce arbitrarily long prefixes
// (except the literal variant, which is bounded by its own length).
class WordSpec {
public:
    enum class Kind { fixed_point, tbm, champernowne, periodic, literal };

    static WordSpec fixed_point(Substitution s, Letter seed, std::string name = {});
    static WordSpec tbm(int b, int m);
    static WordSpec champernowne();
    static WordSpec periodic(Word period);
    static WordSpec literal(Word w);

    // Stock words.
    static WordSpec thue_morse();  // 0 -> 01, 1 -> 10
    static WordSpec fibonacci();   // 0 -> 01, 1 -> 0
    static WordSpec example62();   // 0 -> 0130, 1 -> 1021, 2 -> 102, 3 -> 013

    // Grammar: tm | fib | example62 | tbm:b,m | champernowne |
    //          periodic:<word> | literal:<word> | fixpoint:<subst-file>:<seed>
    static WordSpec parse(std::string_view text);

    Kind kind() const { return kind_; }
    int alphabet_size() const { return alphabet_size_; }
    const std::string& text() const { return text_; }

    bool bounded() const { return kind_ == Kind::literal; }
    std::size_t bound() const;  // SIZE_MAX when unbounded

    // Prefix of length min(len, bound()).
    Word prefix(std::size_t len) const;

    // Exact limit densities when the word has known ones (example62).
    std::optional<std::vector<double>> expected_densities() const;

private:
    WordSpec() = default;

    Kind kind_ = Kind::literal;
    int alphabet_size_ = 0;
    std::string text_;

    Substitution subst_;  // fixed_point
    Letter seed_ = 0;
    int b_ = 0, m_ = 0;   // tbm
    Word payload_;        // periodic / literal
    bool example62_ = false;
};

}  // namespace wordsym
