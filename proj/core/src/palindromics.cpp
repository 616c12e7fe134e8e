#include "wordsym/palindromics.hpp"

#include <algorithm>
#include <set>

#include "wordsym/errors.hpp"
#include "wordsym/pal_tree.hpp"

namespace wordsym {

namespace {

void require_involutive(const Symmetry& theta, const char* what) {
    if (!is_involutive_antimorphism(theta))
        throw InvalidInput(std::string(what) +
                           ": theta must be an involutive antimorphism");
}

}  // namespace

long long pal_complexity(const FactorIndex& idx, const Symmetry& theta, int n) {
    require_involutive(theta, "pal_complexity");
    idx.require_trusted(n, "pal_complexity");
    if (n == 0) return 1;
    long long count = 0;
    for (const auto& [factor, data] : idx.factors_of_length(n))
        if (is_theta_palindrome(factor, theta)) ++count;
    return count;
}

long long gamma_pairs(const Symmetry& theta, const Word& w) {
    require_involutive(theta, "gamma");
    std::vector<bool> present(theta.alphabet_size(), false);
    for (unsigned char c : w) {
        if (static_cast<int>(c) >= theta.alphabet_size())
            throw InvalidInput("gamma: letter out of alphabet range");
        present[c] = true;
    }
    long long pairs = 0;
    for (int a = 0; a < theta.alphabet_size(); ++a) {
        int b = theta.perm[a];
        if (b == a) continue;
        if (a < b && (present[a] || present[b])) ++pairs;
    }
    return pairs;
}

long long defect(const Symmetry& theta, const Word& w) {
    PalTree tree(theta);
    for (unsigned char c : w) tree.push(c);
    return tree.defect();
}

DefectCurve word_defect(const WordSpec& spec, const Symmetry& theta,
                        std::size_t max_prefix) {
    require_involutive(theta, "word_defect");
    Word prefix = spec.prefix(max_prefix);
    PalTree tree(theta);
    DefectCurve curve;
    curve.prefix_length = prefix.size();

    const std::size_t cut = prefix.size() - prefix.size() / 4;
    long long defect_at_cut = 0;
    std::size_t next_sample = 1;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        tree.push(prefix[i]);
        if (i + 1 == cut) defect_at_cut = tree.defect();
        if (i + 1 == next_sample || i + 1 == prefix.size()) {
            curve.samples.emplace_back(i + 1, tree.defect());
            next_sample *= 2;
        }
    }
    curve.final_defect = tree.defect();

    if (curve.final_defect == 0)
        curve.verdict = DefectVerdict::zero;
    else if (defect_at_cut < curve.final_defect)
        // Still increasing within the last quarter of the prefix.
        curve.verdict = DefectVerdict::growing;
    else
        curve.verdict = DefectVerdict::finite_so_far;
    return curve;
}

long long richness_deficit(const FactorIndex& idx, const Symmetry& theta, int n) {
    require_involutive(theta, "richness_deficit");
    idx.require_trusted(n + 1, "richness_deficit");
    for (int m = n; m <= n + 1; ++m) {
        if (!is_closed_under(idx, theta, m))
            throw HypothesisViolation(
                "richness_deficit: language not closed under theta at length " +
                    std::to_string(m),
                format_symmetry(theta));
    }
    return delta_c(idx, n) + 2 - pal_complexity(idx, theta, n + 1) -
           pal_complexity(idx, theta, n);
}

ThetaProfile theta_profile(const FactorIndex& idx, const Symmetry& theta) {
    require_involutive(theta, "theta_profile");
    ThetaProfile profile;
    profile.theta = theta;
    const int trusted = idx.trust().trusted_n;
    for (int n = 0; n <= trusted; ++n)
        profile.pal_complexity.push_back(pal_complexity(idx, theta, n));
    for (int n = 1; n + 1 <= trusted; ++n)
        profile.deficit.push_back(richness_deficit(idx, theta, n));
    PalTree tree(theta);
    profile.defect_by_prefix.push_back(0);
    for (char c : idx.source()) {
        tree.push(static_cast<unsigned char>(c));
        profile.defect_by_prefix.push_back(tree.defect());
    }
    return profile;
}

LpsResult lps(const Symmetry& theta, const Word& w) {
    require_involutive(theta, "lps");
    for (std::size_t len = w.size(); len > 0; --len) {
        Word suffix = w.substr(w.size() - len);
        if (!is_theta_palindrome(suffix, theta)) continue;
        std::size_t occurrences = 0;
        for (std::size_t i = 0; i + len <= w.size(); ++i)
            if (w.compare(i, len, suffix) == 0) ++occurrences;
        return {suffix, occurrences == 1};
    }
    return {Word{}, false};  // ε: never counted as unioccurrent
}

CrwReport crw_palindromicity_check(const FactorIndex& idx, const Symmetry& theta,
                                   int min_len) {
    require_involutive(theta, "crw_palindromicity_check");
    CrwReport report;
    for (int n = std::max(min_len, 1); n <= idx.trust().trusted_n; ++n) {
        std::vector<Word> pals;
        for (const auto& [factor, data] : idx.factors_of_length(n))
            if (data.occurrences.size() >= 2 && is_theta_palindrome(factor, theta))
                pals.push_back(factor);
        std::sort(pals.begin(), pals.end());
        for (const Word& p : pals) {
            ++report.palindromes_checked;
            for (const Word& r : complete_return_words(idx, p))
                if (!is_theta_palindrome(r, theta))
                    report.violations.push_back({p, r});
        }
    }
    return report;
}

std::vector<Letter> theta_pal_extensions(const FactorIndex& idx,
                                         const Symmetry& theta, const Word& w) {
    require_involutive(theta, "theta_pal_extensions");
    idx.require_trusted(static_cast<int>(w.size()) + 2, "theta_pal_extensions");
    if (!is_theta_palindrome(w, theta))
        throw InvalidInput("theta_pal_extensions: w is not a Θ-palindrome");
    if (!idx.contains(w))
        throw NotAFactor("theta_pal_extensions: w is not a factor");

    std::set<Letter> out;
    if (w.empty()) {
        // a·Θ(a) over the two-letter factors.
        for (const auto& [factor, data] : idx.factors_of_length(2)) {
            unsigned char a = factor[0];
            if (theta.perm[a] == static_cast<unsigned char>(factor[1])) out.insert(a);
        }
        return {out.begin(), out.end()};
    }
    const Word& prefix = idx.source();
    for (std::uint32_t p : idx.occurrences(w)) {
        if (p == 0 || p + w.size() >= prefix.size()) continue;
        unsigned char a = prefix[p - 1];
        if (theta.perm[a] == static_cast<unsigned char>(prefix[p + w.size()]))
            out.insert(a);
    }
    return {out.begin(), out.end()};
}

PeriodDecomposition period_decomposition(const Symmetry& theta, const Word& period) {
    require_involutive(theta, "period_decomposition");
    if (period.empty()) throw InvalidInput("period_decomposition: empty period");

    // Primitivity: w occurs in ww only at the two trivial positions.
    Word doubled = period + period;
    for (std::size_t i = 1; i < period.size(); ++i)
        if (doubled.compare(i, period.size(), period) == 0)
            throw InvalidInput("period_decomposition: period is not primitive");

    // The periodic language is closed under theta iff Θ(w) is a rotation of w.
    Word image = theta(period);
    bool rotation = false;
    for (std::size_t i = 0; i < period.size() && !rotation; ++i)
        if (doubled.compare(i, period.size(), image) == 0) rotation = true;
    if (!rotation)
        throw HypothesisViolation(
            "period_decomposition: language of the periodic word is not closed "
            "under theta",
            format_symmetry(theta), format_word(period, min_alphabet(period)));

    if (image == period) return {period, Word{}};
    for (std::size_t i = 1; i < period.size(); ++i) {
        Word p = period.substr(0, i);
        Word s = period.substr(i);
        if (is_theta_palindrome(p, theta) && is_theta_palindrome(s, theta))
            return {p, s};
    }
    throw ContradictionError(
        "period_decomposition: no palindromic split found; this should be "
        "impossible for a Θ-closed primitive period");
}

bool pal_complexity_bound_check(const FactorIndex& idx, const Symmetry& theta, int n) {
    require_involutive(theta, "pal_complexity_bound_check");
    if (n < 1) throw InvalidInput("pal_complexity_bound_check: n must be >= 1");
    idx.require_trusted(n, "pal_complexity_bound_check");
    long long p = pal_complexity(idx, theta, n);
    long long rhs = idx.complexity(n) + idx.complexity(n / 4);
    // P(n) <= (16/n)(C(n) + C(n/4)), compared exactly.
    return p * n <= 16 * rhs;
}

}  // namespace wordsym
