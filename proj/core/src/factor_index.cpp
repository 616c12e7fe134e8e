#include "wordsym/factor_index.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <string>

#include "wordsym/errors.hpp"

namespace wordsym {

namespace {

constexpr int kExtAlphabetCap = 64;  // extension sets are 64-bit masks

std::vector<Letter> mask_to_letters(std::uint64_t mask) {
    std::vector<Letter> out;
    for (int a = 0; a < kExtAlphabetCap; ++a)
        if (mask >> a & 1) out.push_back(static_cast<Letter>(a));
    return out;
}

}  // namespace

const char* TrustRange::certificate_name(Certificate c) {
    switch (c) {
        case Certificate::prefix_only: return "prefix-only";
        case Certificate::doubling: return "doubling";
        case Certificate::analytic: return "analytic";
    }
    return "?";
}

FactorIndex FactorIndex::build(Word prefix, int n_max) {
    if (n_max < 0) throw InvalidInput("factor index: n_max must be >= 0");
    if (prefix.size() <= static_cast<std::size_t>(n_max))
        throw InvalidInput("factor index: prefix must be longer than n_max");

    FactorIndex idx;
    idx.alphabet_size_ = min_alphabet(prefix);
    if (idx.alphabet_size_ > kExtAlphabetCap)
        throw InvalidInput("factor index: alphabets beyond 64 letters unsupported");
    idx.prefix_ = std::move(prefix);
    idx.n_max_ = n_max;
    idx.trust_ = {n_max, TrustRange::Certificate::prefix_only, idx.prefix_.size()};
    idx.by_len_.resize(n_max + 1);

    const Word& w = idx.prefix_;
    const std::size_t len = w.size();
    for (int n = 1; n <= n_max; ++n) {
        FactorMap& map = idx.by_len_[n];
        // Heuristic bucket count; windows repeat heavily for structured words.
        map.reserve(std::min<std::size_t>(len - n + 1, 1 << 16));
        for (std::size_t i = 0; i + n <= len; ++i) {
            std::string_view window(w.data() + i, n);
            auto it = map.find(window);
            if (it == map.end())
                it = map.emplace(Word(window), FactorData{}).first;
            it->second.occurrences.push_back(static_cast<std::uint32_t>(i));
        }
    }

    // Extension sets for length n come from the stored factors of length n+1.
    for (int n = 1; n < n_max; ++n) {
        FactorMap& shorter = idx.by_len_[n];
        for (const auto& [factor, data] : idx.by_len_[n + 1]) {
            std::string_view f(factor);
            auto pre = shorter.find(f.substr(0, n));
            auto suf = shorter.find(f.substr(1));
            pre->second.rext |= std::uint64_t{1} << static_cast<unsigned char>(f[n]);
            suf->second.lext |= std::uint64_t{1} << static_cast<unsigned char>(f[0]);
        }
    }
    return idx;
}

long long FactorIndex::complexity(int n) const {
    require_trusted(n, "complexity");
    if (n == 0) return 1;
    return static_cast<long long>(by_len_[n].size());
}

bool FactorIndex::contains(const Word& w) const {
    return contains(std::string_view(w));
}

bool FactorIndex::contains(std::string_view w) const {
    if (w.empty()) return true;
    if (w.size() > static_cast<std::size_t>(n_max_)) return false;
    const FactorMap& map = by_len_[w.size()];
    return map.find(w) != map.end();
}

const FactorIndex::FactorData& FactorIndex::data(const Word& w) const {
    if (w.empty() || w.size() > static_cast<std::size_t>(n_max_))
        throw NotAFactor("no data for factor of length " + std::to_string(w.size()));
    auto it = by_len_[w.size()].find(std::string_view(w));
    if (it == by_len_[w.size()].end())
        throw NotAFactor("not a factor: " + format_word(w, alphabet_size_));
    return it->second;
}

const std::vector<std::uint32_t>& FactorIndex::occurrences(const Word& w) const {
    return data(w).occurrences;
}

std::vector<Letter> FactorIndex::left_extensions(const Word& w) const {
    if (w.empty()) {
        require_trusted(1, "left_extensions");
        std::uint64_t mask = 0;
        for (const auto& [factor, d] : by_len_[1])
            mask |= std::uint64_t{1} << static_cast<unsigned char>(factor[0]);
        return mask_to_letters(mask);
    }
    return mask_to_letters(data(w).lext);
}

std::vector<Letter> FactorIndex::right_extensions(const Word& w) const {
    if (w.empty()) return left_extensions(w);  // both are L_1
    return mask_to_letters(data(w).rext);
}

bool FactorIndex::is_special(std::string_view w) const {
    if (w.empty()) {
        // Lext(ε) and Rext(ε) are both L_1.
        return complexity(1) >= 2;
    }
    auto it = by_len_[w.size()].find(w);
    if (it == by_len_[w.size()].end())
        throw NotAFactor("not a factor: " + format_word(Word(w), alphabet_size_));
    return std::popcount(it->second.lext) >= 2 || std::popcount(it->second.rext) >= 2;
}

const FactorIndex::FactorMap& FactorIndex::factors_of_length(int n) const {
    if (n < 1 || n > n_max_)
        throw InvalidInput("factors_of_length: n out of range");
    return by_len_[n];
}

void FactorIndex::require_trusted(int n, const char* what) const {
    if (n < 0) throw InvalidInput(std::string(what) + ": negative length");
    if (n > trust_.trusted_n)
        throw UntrustedRange(std::string(what) + ": length " + std::to_string(n) +
                             " beyond trusted range " +
                             std::to_string(trust_.trusted_n));
}

namespace {

// Complexity counts and the minimal occurrence count per length, without
// materializing occurrence lists. Used by the doubling comparison.
struct LightScan {
    std::vector<long long> complexity;  // [0..n_max]
    std::vector<std::uint32_t> min_occurrences;
};

LightScan light_scan(const Word& w, int n_max) {
    LightScan scan;
    scan.complexity.assign(n_max + 1, 0);
    scan.complexity[0] = 1;
    scan.min_occurrences.assign(n_max + 1, 0);
    using CountMap =
        std::unordered_map<Word, std::uint32_t, TransparentHash, std::equal_to<>>;
    for (int n = 1; n <= n_max; ++n) {
        CountMap counts;
        counts.reserve(std::min<std::size_t>(w.size(), 1 << 16));
        for (std::size_t i = 0; i + n <= w.size(); ++i) {
            std::string_view window(w.data() + i, n);
            auto it = counts.find(window);
            if (it == counts.end())
                counts.emplace(Word(window), 1);
            else
                ++it->second;
        }
        scan.complexity[n] = static_cast<long long>(counts.size());
        std::uint32_t least = counts.empty() ? 0 : UINT32_MAX;
        for (const auto& [factor, c] : counts) least = std::min(least, c);
        scan.min_occurrences[n] = least;
    }
    return scan;
}

// Writing every integer up to 2*10^n covers all length-n digit strings: those
// without a leading zero appear as full numbers, and "1"+s does it for the
// rest. Returns the prefix length reaching through that integer.
std::size_t champernowne_analytic_need(int n_max, std::size_t max_prefix) {
    if (n_max > 5)
        throw StabilizationFailure(
            "champernowne: analytic certificate limited to n_max <= 5", 0, {});
    std::uint64_t through = 2;
    for (int i = 0; i < n_max; ++i) through *= 10;
    std::size_t need = 0;
    for (std::uint64_t v = 1; v <= through; ++v) {
        std::uint64_t t = v;
        while (t) {
            ++need;
            t /= 10;
        }
    }
    if (max_prefix && need > max_prefix)
        throw StabilizationFailure(
            "champernowne: analytic prefix exceeds the configured cap", need, {});
    return need;
}

}  // namespace

FactorIndex stabilize(const WordSpec& spec, int n_max, std::size_t max_prefix) {
    if (n_max < 1) throw InvalidInput("stabilize: n_max must be >= 1");
    if (max_prefix == 0) {
        max_prefix = 10'000'000;
        if (const char* env = std::getenv("WORDSYM_MAX_PREFIX")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) max_prefix = v;
        }
    }

    if (spec.kind() == WordSpec::Kind::champernowne) {
        std::size_t need = champernowne_analytic_need(n_max, max_prefix);
        FactorIndex idx = FactorIndex::build(champernowne_prefix(need), n_max);
        idx.trust_ = {n_max, TrustRange::Certificate::analytic, need};
        return idx;
    }

    std::size_t len = 4 * static_cast<std::size_t>(n_max);
    Word current = spec.prefix(len);
    if (current.size() <= static_cast<std::size_t>(n_max))
        throw StabilizationFailure("stabilize: word too short for n_max",
                                   current.size(), {});
    LightScan prev = light_scan(current, n_max);
    std::size_t prev_len = current.size();

    while (true) {
        std::size_t next_len = prev_len * 2;
        if (next_len > max_prefix) {
            throw StabilizationFailure(
                "stabilize: factor sets did not settle within the prefix cap (" +
                    std::to_string(max_prefix) + ")",
                prev_len, prev.complexity);
        }
        Word next = spec.prefix(next_len);
        if (next.size() == prev_len)
            throw StabilizationFailure("stabilize: word cannot grow further",
                                       prev_len, prev.complexity);
        LightScan scan = light_scan(next, n_max);

        // A shorter prefix's factors all persist in a longer one, so equal
        // counts mean equal sets.
        bool settled = scan.complexity == prev.complexity;
        if (settled) {
            for (int n = 1; n <= n_max && settled; ++n)
                if (scan.min_occurrences[n] < 2) settled = false;
        }
        if (settled) {
            FactorIndex idx = FactorIndex::build(std::move(next), n_max);
            idx.trust_ = {n_max, TrustRange::Certificate::doubling, idx.source().size()};
            return idx;
        }
        prev = std::move(scan);
        prev_len = next.size();
    }
}

long long delta_c(const FactorIndex& idx, int n) {
    idx.require_trusted(n + 1, "delta_c");
    return idx.complexity(n + 1) - idx.complexity(n);
}

long long delta2_c(const FactorIndex& idx, int n) {
    idx.require_trusted(n + 2, "delta2_c");
    return delta_c(idx, n + 1) - delta_c(idx, n);
}

long long bilateral_order(const FactorIndex& idx, const Word& w) {
    idx.require_trusted(static_cast<int>(w.size()) + 2, "bilateral_order");
    const Word& prefix = idx.source();
    if (w.empty()) {
        // b(ε) = C(2) - 2 C(1) + 1.
        return idx.complexity(2) - 2 * idx.complexity(1) + 1;
    }
    const FactorIndex::FactorData& d = idx.data(w);
    std::set<std::pair<char, char>> sides;
    for (std::uint32_t p : d.occurrences) {
        if (p == 0 || p + w.size() >= prefix.size()) continue;
        sides.emplace(prefix[p - 1], prefix[p + w.size()]);
    }
    return static_cast<long long>(sides.size()) - std::popcount(d.lext) -
           std::popcount(d.rext) + 1;
}

SpecialFactors special_factors(const FactorIndex& idx, int n) {
    idx.require_trusted(n + 1, "special_factors");
    SpecialFactors out;
    if (n == 0) {
        if (idx.complexity(1) >= 2) {
            out.left = {Word{}};
            out.right = {Word{}};
            out.bispecial = {Word{}};
        }
        return out;
    }
    for (const auto& [factor, data] : idx.factors_of_length(n)) {
        bool ls = std::popcount(data.lext) >= 2;
        bool rs = std::popcount(data.rext) >= 2;
        if (ls) out.left.push_back(factor);
        if (rs) out.right.push_back(factor);
        if (ls && rs) out.bispecial.push_back(factor);
    }
    std::sort(out.left.begin(), out.left.end());
    std::sort(out.right.begin(), out.right.end());
    std::sort(out.bispecial.begin(), out.bispecial.end());
    return out;
}

std::vector<Word> complete_return_words(const FactorIndex& idx, const Word& w) {
    if (w.empty())
        throw InvalidInput("complete_return_words: empty factor");
    const auto& occ = idx.occurrences(w);
    if (occ.size() < 2)
        throw InsufficientOccurrences(
            "complete_return_words: factor occurs fewer than twice");
    std::set<Word> out;
    const Word& prefix = idx.source();
    for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
        std::size_t from = occ[i];
        std::size_t to = occ[i + 1] + w.size();
        out.insert(prefix.substr(from, to - from));
    }
    return {out.begin(), out.end()};
}

bool is_closed_under(const FactorIndex& idx, const Symmetry& sym, int n) {
    idx.require_trusted(n, "is_closed_under");
    if (n == 0) return true;
    for (const auto& [factor, data] : idx.factors_of_length(n))
        if (!idx.contains(sym(factor))) return false;
    return true;
}

bool is_closed_under_up_to(const FactorIndex& idx, const Symmetry& sym, int n) {
    for (int m = 1; m <= n; ++m)
        if (!is_closed_under(idx, sym, m)) return false;
    return true;
}

}  // namespace wordsym
