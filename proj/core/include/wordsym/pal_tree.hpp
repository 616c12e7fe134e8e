#pragma once

#include <cstddef>
#include <vector>

#include "wordsym/symmetry.hpp"
#include "wordsym/word.hpp"

namespace wordsym {

// Incremental index of the distinct Θ-palindromic factors of a growing word
// (an eertree with the mirror letter taken through Θ). Appending a letter
// creates at most one new Θ-palindrome: the longest Θ-palindromic suffix of
// the new prefix, and only when that suffix is unioccurrent.
//
// push/pop are O(alphabet + suffix-link walk); pop makes the tree usable as
// backtracking state in depth-first searches.
class PalTree {
public:
    explicit PalTree(const Symmetry& theta);  // involutive antimorphism

    struct PushResult {
        bool created;    // a new Θ-palindrome appeared
        int lps_length;  // longest Θ-palindromic suffix after the push
    };

    PushResult push(Letter c);
    void pop();

    std::size_t size() const { return word_.size(); }
    const Word& word() const { return word_; }

    long long distinct_palindromes() const { return created_total_; }  // nonempty
    int lps_length() const;
    bool lps_unioccurrent() const;  // lps nonempty and first seen at the last push

    long long gamma() const { return gamma_; }  // mismatched letter pairs present

    // D_Θ(current word) = |w| + 1 - γ - (#Θ-palindromic factors incl. ε)
    long long defect() const {
        return static_cast<long long>(word_.size()) - gamma_ - created_total_;
    }

private:
    struct Node {
        int len;
        int link;
        std::vector<int> next;  // by appended letter; -1 = absent
    };

    struct HistoryEntry {
        int prev_last;
        int created_node;    // -1 if none
        int parent;          // of the created node
        Letter via;
        bool gamma_changed;
    };

    int find_extensible(int from, Letter mirrored) const;

    Symmetry theta_;
    int k_ = 0;
    std::vector<Node> nodes_;
    std::vector<HistoryEntry> history_;
    Word word_;
    std::vector<std::size_t> letter_count_;
    int last_ = 1;  // node of the lps of the current word (1 = empty word)
    long long created_total_ = 0;
    long long gamma_ = 0;
};

}  // namespace wordsym
