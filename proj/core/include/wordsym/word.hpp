#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wordsym/errors.hpp"

namespace wordsym {

// Letters are dense indices 0..k-1 stored as raw bytes; display alphabets
// (digit characters, comma-separated indices) are a presentation layer only.
using Letter = unsigned char;
using Word = std::string;

inline constexpr int kMaxAlphabet = 256;

struct Alphabet {
    int size = 0;
    std::vector<std::string> names;  // optional; empty or one name per letter

    void validate() const;

    static Alphabet indexed(int k) {
        Alphabet a;
        a.size = k;
        a.validate();
        return a;
    }
};

// "0102010" -> {0,1,0,2,0,1,0}. Digits only; for tests and small alphabets.
Word word_from_digits(std::string_view digits);

// Accepts either a digit string or comma-separated indices ("10,3,11").
Word parse_word(std::string_view text);

// Single characters for alphabets of size <= 10, comma-separated otherwise.
std::string format_word(const Word& w, int alphabet_size);

// Smallest alphabet size the word fits in (max letter + 1; 1 for the empty word).
int min_alphabet(const Word& w);

inline bool word_fits(const Word& w, int alphabet_size) {
    for (unsigned char c : w)
        if (static_cast<int>(c) >= alphabet_size) return false;
    return true;
}

}  // namespace wordsym
