// Naive reference implementations used as independent oracles. Everything
// here is written directly from the definitions with quadratic scans and set
// arithmetic; nothing routes through the production index, tree or scanning
// code.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wordsym/symmetry.hpp"
#include "wordsym/word.hpp"

namespace oracle {

using wordsym::Letter;
using wordsym::Symmetry;
using wordsym::Word;

inline Word apply(const Symmetry& sym, const Word& w) {
    Word out;
    if (sym.is_antimorphism()) {
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            out.push_back(static_cast<char>(sym.perm[static_cast<unsigned char>(*it)]));
    } else {
        for (char c : w)
            out.push_back(static_cast<char>(sym.perm[static_cast<unsigned char>(c)]));
    }
    return out;
}

inline bool is_pal(const Word& w, const Symmetry& theta) {
    return oracle::apply(theta, w) == w;
}

inline std::set<Word> factors(const Word& prefix, std::size_t n) {
    std::set<Word> out;
    for (std::size_t i = 0; i + n <= prefix.size(); ++i)
        out.insert(prefix.substr(i, n));
    return out;
}

inline std::set<Letter> lext(const Word& prefix, const Word& w) {
    std::set<Letter> out;
    for (std::size_t i = 1; i + w.size() <= prefix.size(); ++i)
        if (prefix.compare(i, w.size(), w) == 0)
            out.insert(static_cast<Letter>(prefix[i - 1]));
    return out;
}

inline std::set<Letter> rext(const Word& prefix, const Word& w) {
    std::set<Letter> out;
    for (std::size_t i = 0; i + w.size() + 1 <= prefix.size(); ++i)
        if (prefix.compare(i, w.size(), w) == 0)
            out.insert(static_cast<Letter>(prefix[i + w.size()]));
    return out;
}

inline long long pal_count(const Word& prefix, const Symmetry& theta,
                           std::size_t n) {
    long long count = 0;
    for (const Word& f : factors(prefix, n))
        if (is_pal(f, theta)) ++count;
    return count;
}

// Distinct nonempty Θ-palindromic factors.
inline std::set<Word> pal_set(const Word& w, const Symmetry& theta) {
    std::set<Word> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t n = 1; i + n <= w.size(); ++n) {
            Word f = w.substr(i, n);
            if (is_pal(f, theta)) out.insert(std::move(f));
        }
    return out;
}

inline long long gamma(const Symmetry& theta, const Word& w) {
    std::set<std::pair<Letter, Letter>> pairs;
    for (char c : w) {
        Letter a = static_cast<unsigned char>(c);
        Letter b = theta.perm[a];
        if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
    }
    return static_cast<long long>(pairs.size());
}

// D_Θ(w) straight from the set-counting definition (ε counted).
inline long long defect(const Symmetry& theta, const Word& w) {
    return static_cast<long long>(w.size()) + 1 - gamma(theta, w) -
           (static_cast<long long>(pal_set(w, theta).size()) + 1);
}

// Minimal overlapping factors s[i..i+2p] (period p), triple loop.
inline std::set<Word> overlaps(const Word& prefix) {
    std::set<Word> out;
    for (std::size_t p = 1; 2 * p + 1 <= prefix.size(); ++p)
        for (std::size_t i = 0; i + 2 * p + 1 <= prefix.size(); ++i) {
            bool match = true;
            for (std::size_t j = 0; j <= p && match; ++j)
                if (prefix[i + j] != prefix[i + j + p]) match = false;
            if (match) out.insert(prefix.substr(i, 2 * p + 1));
        }
    return out;
}

// Square roots with their first positions.
inline std::map<Word, std::size_t> squares(const Word& prefix) {
    std::map<Word, std::size_t> out;
    for (std::size_t p = 1; 2 * p <= prefix.size(); ++p)
        for (std::size_t i = 0; i + 2 * p <= prefix.size(); ++i) {
            if (prefix.compare(i, p, prefix, i + p, p) != 0) continue;
            Word root = prefix.substr(i, p);
            auto it = out.find(root);
            if (it == out.end()) out.emplace(std::move(root), i);
        }
    return out;
}

inline bool has_square(const Word& w) {
    for (std::size_t p = 1; 2 * p <= w.size(); ++p)
        for (std::size_t i = 0; i + 2 * p <= w.size(); ++i)
            if (w.compare(i, p, w, i + p, p) == 0) return true;
    return false;
}

// All involutive permutations of k letters, as antimorphisms Θ = Tr ∘ π.
inline std::vector<Symmetry> involutive_antimorphisms(int k) {
    std::vector<Symmetry> out;
    std::vector<Letter> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = static_cast<Letter>(i);
    std::sort(perm.begin(), perm.end());
    do {
        bool involutive = true;
        for (int i = 0; i < k; ++i)
            if (perm[perm[i]] != i) involutive = false;
        if (involutive) {
            Symmetry s;
            s.perm = perm;
            s.kind = wordsym::SymKind::antimorphism;
            out.push_back(std::move(s));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace oracle
