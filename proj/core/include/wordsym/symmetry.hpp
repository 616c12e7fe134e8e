#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wordsym/word.hpp"

namespace wordsym {

enum class SymKind { morphism, antimorphism };

// A letter permutation together with a direction flag. A morphism maps words
// letterwise; an antimorphism maps the reversed word letterwise. Every finite
// group of word symmetries restricts to letters this way.
struct Symmetry {
    std::vector<Letter> perm;  // perm[a] = image of letter a
    SymKind kind = SymKind::morphism;

    int alphabet_size() const { return static_cast<int>(perm.size()); }
    bool is_morphism() const { return kind == SymKind::morphism; }
    bool is_antimorphism() const { return kind == SymKind::antimorphism; }

    Letter map(Letter a) const { return perm[a]; }

    // Image of a word: letterwise for morphisms, letterwise on the reversed
    // word for antimorphisms. theta(w) reads like the usual Θ(w).
    Word operator()(const Word& w) const;

    bool operator==(const Symmetry&) const = default;

    void validate() const;  // perm must be a bijection on 0..k-1
};

Symmetry identity_morphism(int alphabet_size);
Symmetry reversal(int alphabet_size);  // the classical palindrome antimorphism

// Builds a symmetry from "a ↦ image" pairs; unlisted letters map to themselves.
Symmetry make_symmetry(SymKind kind, int alphabet_size,
                       const std::vector<std::pair<Letter, Letter>>& moves);

// compose(a, b) applies b first: compose(a,b)(w) == a(b(w)).
Symmetry compose(const Symmetry& a, const Symmetry& b);

Symmetry inverse(const Symmetry& s);

bool is_involutive(const Symmetry& s);
bool is_involutive_antimorphism(const Symmetry& s);

// true iff apply(theta, w) == w; theta must be an antimorphism.
bool is_theta_palindrome(const Word& w, const Symmetry& theta);

// Text grammar: "a:0>1,1>0" (antimorphism) / "m:0>1,1>0" (morphism);
// unlisted letters map to themselves; "R" is the reversal antimorphism.
Symmetry parse_symmetry(std::string_view text, int alphabet_size);
std::string format_symmetry(const Symmetry& s);

// A finite set of symmetries closed under composition, with its composition
// table. Generated from a set of generators by closure.
class SymmetryGroup {
public:
    // max_elements == 0 means the default bound 2 * k!.
    static SymmetryGroup generate(const std::vector<Symmetry>& generators,
                                  std::size_t max_elements = 0);

    const std::vector<Symmetry>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }
    int alphabet_size() const { return alphabet_size_; }
    int identity_index() const { return identity_; }

    int compose_index(int i, int j) const { return table_[i][j]; }
    int inverse_index(int i) const { return inverse_[i]; }
    int index_of(const Symmetry& s) const;  // -1 if absent

    // Indices of the involutive antimorphisms (the set G^(2)).
    const std::vector<int>& involutive_antimorphisms() const { return g2_; }

    bool contains_antimorphism() const;

private:
    std::vector<Symmetry> elements_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<int> g2_;
    int identity_ = -1;
    int alphabet_size_ = 0;
};

// Semicolon-separated symmetry terms; the group is the generated closure.
SymmetryGroup parse_group(std::string_view text, int alphabet_size);

// The equivalence class of w under G, sorted lexicographically.
std::vector<Word> orbit(const Word& w, const SymmetryGroup& g);

// Lexicographic minimum of the orbit; deterministic vertex identity.
Word orbit_canonical(const Word& w, const SymmetryGroup& g);

}  // namespace wordsym
