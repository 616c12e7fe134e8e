#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "wordsym/symmetry.hpp"
#include "wordsym/word.hpp"

namespace wordsym {

// A repetition of exponent > 2: factor w·w·w' with w' a nonempty prefix of w.
// Witnesses are reported in minimal form (|w'| = 1, factor length 2|w|+1).
struct OverlapWitness {
    std::size_t position;  // first occurrence of the factor in the prefix
    Word w;
    Word w_prime;
    Word factor;  // w + w + w_prime
};

// Distinct minimal overlapping factors, sorted by length then lexicographically,
// truncated to max_report.
std::vector<OverlapWitness> find_overlaps(const Word& prefix,
                                          std::size_t max_report);

struct SquareWitness {
    std::size_t position;  // first position where root·root occurs
    Word root;
};

// Distinct square roots observed, sorted by length then lexicographically,
// truncated to max_report.
std::vector<SquareWitness> find_squares(const Word& prefix, std::size_t max_report);

struct SearchResult {
    int alphabet_size = 0;
    long long max_length = 0;       // r(alphabet_size), when exhausted
    std::vector<Word> witnesses;    // maximal words, canonical up to permutation
    std::uint64_t nodes_explored = 0;
    bool exhausted = false;
};

// Resumable search state: words whose subtrees are still unexplored, plus the
// best result found so far.
struct SearchCheckpoint {
    int alphabet_size = 0;
    std::string theta_text;
    long long best_length = 0;
    std::vector<Word> witnesses;
    std::vector<Word> frontier;
    std::uint64_t nodes_explored = 0;

    void save(std::ostream& out) const;
    static SearchCheckpoint load(std::istream& in);
};

// Depth-first search for the longest square-free Θ-rich words that use every
// letter of the alphabet. Prunes on suffix squares and on any defect
// increment; both properties are monotone along prefixes, so pruning is
// exact. When theta fixes every letter (e.g. the reversal mapping), the
// search only explores words whose letters first appear in increasing order.
//
// Runs until the reduced tree is exhausted or node_budget words have been
// expanded; in the latter case exhausted is false and, if checkpoint is
// given, the unexplored frontier is stored there.
SearchResult search_squarefree_rich(int alphabet_size, const Symmetry& theta,
                                    std::uint64_t node_budget,
                                    SearchCheckpoint* checkpoint = nullptr);

// Continues a checkpointed search.
SearchResult resume_search(const SearchCheckpoint& from, std::uint64_t node_budget,
                           SearchCheckpoint* checkpoint = nullptr);

}  // namespace wordsym
