#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wordsym/generators.hpp"
#include "wordsym/symmetry.hpp"
#include "wordsym/word.hpp"

namespace wordsym {

// How the trusted range of a FactorIndex was certified.
//   prefix_only: factor sets of the raw prefix, no claim about the infinite word
//   doubling:    factor sets identical across two consecutive prefix doublings,
//                every factor occurring at least twice
//   analytic:    Champernowne route; the prefix provably contains every string
//                of length <= trusted_n
struct TrustRange {
    enum class Certificate { prefix_only, doubling, analytic };

    int trusted_n = 0;
    Certificate certificate = Certificate::prefix_only;
    std::size_t prefix_length = 0;

    static const char* certificate_name(Certificate c);
};

struct TransparentHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
        return std::hash<std::string_view>{}(s);
    }
};

// All factors of a prefix up to length n_max, with occurrence positions and
// left/right extension letter sets. Immutable once built.
class FactorIndex {
public:
    struct FactorData {
        std::vector<std::uint32_t> occurrences;  // sorted start positions
        std::uint64_t lext = 0;                  // bitmask over letters
        std::uint64_t rext = 0;
    };

    using FactorMap =
        std::unordered_map<Word, FactorData, TransparentHash, std::equal_to<>>;

    // Indexes all windows of lengths 1..n_max (the empty word is implicit).
    // Requires |prefix| > n_max and letters < 64.
    static FactorIndex build(Word prefix, int n_max);

    const Word& source() const { return prefix_; }
    int n_max() const { return n_max_; }
    int alphabet_size() const { return alphabet_size_; }
    const TrustRange& trust() const { return trust_; }

    long long complexity(int n) const;  // C(n); requires 0 <= n <= trusted_n
    bool contains(const Word& w) const;
    bool contains(std::string_view w) const;

    const FactorData& data(const Word& w) const;  // throws NotAFactor
    const std::vector<std::uint32_t>& occurrences(const Word& w) const;
    std::vector<Letter> left_extensions(const Word& w) const;
    std::vector<Letter> right_extensions(const Word& w) const;

    bool is_special(std::string_view w) const;  // LS or RS; needs |w| < n_max

    const FactorMap& factors_of_length(int n) const;  // 1 <= n <= n_max

    void require_trusted(int n, const char* what) const;  // throws UntrustedRange

private:
    friend FactorIndex stabilize(const WordSpec&, int, std::size_t);

    Word prefix_;
    int n_max_ = 0;
    int alphabet_size_ = 0;
    TrustRange trust_;
    std::vector<FactorMap> by_len_;  // by_len_[n] for n in 1..n_max
};

// Grows the prefix by doubling (starting at 4*n_max) until the factor sets for
// all n <= n_max agree across two consecutive doublings and every factor has
// at least two occurrences. For the Champernowne word the trust range is
// certified analytically instead. max_prefix == 0 reads WORDSYM_MAX_PREFIX
// from the environment, defaulting to 10^7.
FactorIndex stabilize(const WordSpec& spec, int n_max, std::size_t max_prefix = 0);

long long delta_c(const FactorIndex& idx, int n);   // C(n+1) - C(n)
long long delta2_c(const FactorIndex& idx, int n);  // ΔC(n+1) - ΔC(n)

// b(w) = #{awb in L} - #Lext(w) - #Rext(w) + 1.
long long bilateral_order(const FactorIndex& idx, const Word& w);

struct SpecialFactors {
    std::vector<Word> left;       // #Lext >= 2
    std::vector<Word> right;      // #Rext >= 2
    std::vector<Word> bispecial;  // both
};

SpecialFactors special_factors(const FactorIndex& idx, int n);

// All distinct complete return words of w observed in the prefix: factors
// containing w exactly twice, as a prefix and as a suffix. Sorted.
std::vector<Word> complete_return_words(const FactorIndex& idx, const Word& w);

// true iff apply(sym, w) is a factor for every w in L_n.
bool is_closed_under(const FactorIndex& idx, const Symmetry& sym, int n);

// Convenience: closure at every length 1..n (used as a hypothesis check).
bool is_closed_under_up_to(const FactorIndex& idx, const Symmetry& sym, int n);

}  // namespace wordsym
