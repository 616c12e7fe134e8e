#include "wordsym/pal_tree.hpp"

#include "wordsym/errors.hpp"

namespace wordsym {

PalTree::PalTree(const Symmetry& theta) : theta_(theta) {
    if (!is_involutive_antimorphism(theta))
        throw InvalidInput("pal tree: theta must be an involutive antimorphism");
    k_ = theta.alphabet_size();
    letter_count_.assign(k_, 0);
    // Node 0: imaginary root of length -1; node 1: the empty word.
    nodes_.push_back({-1, 0, std::vector<int>(k_, -1)});
    nodes_.push_back({0, 0, std::vector<int>(k_, -1)});
    last_ = 1;
}

// Walks suffix links from `from` until the node's occurrence as a suffix of
// word[0..i-1] can be extended on the left by `mirrored` (the letter Θ(c) for
// an appended c). Returns -1 when even the length -1 root fails, i.e. the
// appended letter is not Θ-fixed and no longer suffix works.
int PalTree::find_extensible(int from, Letter mirrored) const {
    const std::size_t i = word_.size() - 1;  // position of the appended letter
    int v = from;
    while (true) {
        int len = nodes_[v].len;
        if (len == -1) {
            // Candidate palindrome is the single letter word[i] itself.
            return static_cast<Letter>(word_[i]) == mirrored ? v : -1;
        }
        if (static_cast<std::size_t>(len) + 1 <= i &&
            static_cast<Letter>(word_[i - len - 1]) == mirrored)
            return v;
        v = nodes_[v].link;
    }
}

PalTree::PushResult PalTree::push(Letter c) {
    if (static_cast<int>(c) >= k_)
        throw InvalidInput("pal tree: letter out of alphabet range");
    word_.push_back(static_cast<char>(c));

    HistoryEntry h{last_, -1, -1, c, false};

    if (letter_count_[c]++ == 0) {
        Letter partner = theta_.perm[c];
        if (partner != c && letter_count_[partner] == 0) {
            ++gamma_;
            h.gamma_changed = true;
        }
    }

    Letter mirrored = theta_.perm[c];
    int t = find_extensible(last_, mirrored);
    if (t < 0) {
        // No Θ-palindromic suffix at all; the lps of the new prefix is ε.
        last_ = 1;
        history_.push_back(h);
        return {false, 0};
    }

    int existing = nodes_[t].next[c];
    if (existing >= 0) {
        last_ = existing;
        history_.push_back(h);
        return {false, nodes_[existing].len};
    }

    int node = static_cast<int>(nodes_.size());
    nodes_.push_back({nodes_[t].len + 2, 1, std::vector<int>(k_, -1)});
    if (nodes_[node].len > 1) {
        int t2 = find_extensible(nodes_[t].link, mirrored);
        if (t2 >= 0 && nodes_[t2].next[c] >= 0 && nodes_[t2].next[c] != node)
            nodes_[node].link = nodes_[t2].next[c];
    }
    nodes_[t].next[c] = node;
    last_ = node;
    ++created_total_;
    h.created_node = node;
    h.parent = t;
    history_.push_back(h);
    return {true, nodes_[node].len};
}

void PalTree::pop() {
    if (history_.empty()) throw InvalidInput("pal tree: pop on empty history");
    HistoryEntry h = history_.back();
    history_.pop_back();

    Letter c = h.via;
    if (h.created_node >= 0) {
        nodes_[h.parent].next[c] = -1;
        nodes_.pop_back();
        --created_total_;
    }
    if (h.gamma_changed) --gamma_;
    --letter_count_[c];
    word_.pop_back();
    last_ = h.prev_last;
}

int PalTree::lps_length() const { return nodes_[last_].len; }

bool PalTree::lps_unioccurrent() const {
    if (history_.empty()) return false;
    return history_.back().created_node == last_ && nodes_[last_].len > 0;
}

}  // namespace wordsym
