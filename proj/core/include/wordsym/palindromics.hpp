#pragma once

#include <cstddef>
#include <vector>

#include "wordsym/factor_index.hpp"
#include "wordsym/generators.hpp"
#include "wordsym/symmetry.hpp"
#include "wordsym/word.hpp"

namespace wordsym {

// P_Θ(n): number of length-n factors fixed by theta.
long long pal_complexity(const FactorIndex& idx, const Symmetry& theta, int n);

// γ_Θ(w): number of unordered pairs {a, Θ(a)}, a != Θ(a), with a member
// occurring in w.
long long gamma_pairs(const Symmetry& theta, const Word& w);

// D_Θ(w) = |w| + 1 - γ_Θ(w) - #Pal_Θ(w); zero means w is Θ-rich.
long long defect(const Symmetry& theta, const Word& w);

enum class DefectVerdict { zero, finite_so_far, growing };

struct DefectCurve {
    std::size_t prefix_length = 0;
    long long final_defect = 0;
    DefectVerdict verdict = DefectVerdict::zero;
    // (prefix length, defect) samples, ending with the full prefix.
    std::vector<std::pair<std::size_t, long long>> samples;
};

// Defect along prefixes of the word, computed incrementally. The verdict is
// evidence from a prefix, never a proof: "growing" means the defect still
// increased within the last quarter of the prefix.
DefectCurve word_defect(const WordSpec& spec, const Symmetry& theta,
                        std::size_t max_prefix);

// T_Θ(n) = ΔC(n) + 2 - P_Θ(n+1) - P_Θ(n); requires language closed under
// theta at lengths n and n+1. Zero for all n characterizes Θ-richness.
long long richness_deficit(const FactorIndex& idx, const Symmetry& theta, int n);

// Everything the index knows about one antimorphism, bundled: palindromic
// complexities, richness deficits, and the defect along the source prefix.
struct ThetaProfile {
    Symmetry theta;
    std::vector<long long> pal_complexity;    // P_Θ(n), n = 0..trusted_n
    std::vector<long long> deficit;           // T_Θ(n), n = 1..trusted_n-1
    std::vector<long long> defect_by_prefix;  // D_Θ(prefix_i), i = 0..|source|
};

ThetaProfile theta_profile(const FactorIndex& idx, const Symmetry& theta);

struct LpsResult {
    Word suffix;
    bool unioccurrent;  // false for the empty suffix, by convention
};

// Longest Θ-palindromic suffix of w and whether it occurs in w exactly once.
LpsResult lps(const Symmetry& theta, const Word& w);

struct CrwViolation {
    Word palindrome;
    Word return_word;
};

struct CrwReport {
    std::size_t palindromes_checked = 0;
    std::vector<CrwViolation> violations;
};

// For every Θ-palindromic factor of length >= min_len (with two occurrences
// in the trust range), tests whether all its observed complete return words
// are Θ-palindromes. Expected empty for finite-defect words.
CrwReport crw_palindromicity_check(const FactorIndex& idx, const Symmetry& theta,
                                   int min_len);

// Letters a with a·w·Θ(a) in the language; w must be a Θ-palindromic factor.
std::vector<Letter> theta_pal_extensions(const FactorIndex& idx,
                                         const Symmetry& theta, const Word& w);

struct PeriodDecomposition {
    Word p;
    Word s;
};

// Splits the shortest period w of a Θ-closed periodic word as w = p·s with
// both parts Θ-palindromes. Returns (w, ε) when w itself is a Θ-palindrome.
PeriodDecomposition period_decomposition(const Symmetry& theta, const Word& period);

// Informational: P_Θ(n) <= (16/n) (C(n) + C(floor(n/4))) with P_Θ substituted
// for the classical P.
bool pal_complexity_bound_check(const FactorIndex& idx, const Symmetry& theta, int n);

}  // namespace wordsym
